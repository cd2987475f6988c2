# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled numeric kernels.

Line-for-line mirror of fallback.py: same bisection order, same accept
tests, same phase-wrap convention. Keep the two in sync when editing either.
The extension is built with -ffp-contract=off so results track the pure
Python implementation bit-closely.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.math cimport M_PI, atan2, cos, fabs, sin

cdef inline double _g(double u, double w0, double w1) noexcept nogil:
    cdef double one_minus, r, denom
    if u >= 1.0:
        return 0.0
    one_minus = 1.0 - u
    r = u / one_minus
    denom = w0 * r * r + w1
    return w1 * r / (denom * denom) / (one_minus * one_minus)


def chart_radial(long w0, long w1, double tol, long max_evals):
    """Adaptive-Simpson value of the compactified radial chart integral.

    Returns (value, error_estimate, evaluations, converged); see the
    fallback implementation for the algorithm description.
    """
    cdef double w0d = <double> w0
    cdef double w1d = <double> w1
    # Depth-first stack; never exceeds the depth cap (60) + 1 frames.
    cdef double[128] st_a
    cdef double[128] st_b
    cdef double[128] st_fa
    cdef double[128] st_fm
    cdef double[128] st_fb
    cdef double[128] st_whole
    cdef double[128] st_tol
    cdef int[128] st_depth
    cdef int sp = 0
    cdef long evals = 3
    cdef double fa, fm, fb, whole, total, err_total
    cdef double a, b, m, lm, rm, flm, frm, h12, s_left, s_right, delta, tol_i, half_tol
    cdef int depth
    cdef bint converged = True

    fa = _g(0.0, w0d, w1d)
    fm = _g(0.5, w0d, w1d)
    fb = _g(1.0, w0d, w1d)
    whole = (fa + 4.0 * fm + fb) / 6.0

    total = 0.0
    err_total = 0.0
    st_a[0] = 0.0
    st_b[0] = 1.0
    st_fa[0] = fa
    st_fm[0] = fm
    st_fb[0] = fb
    st_whole[0] = whole
    st_tol[0] = tol
    st_depth[0] = 0
    sp = 1

    while sp > 0:
        sp -= 1
        a = st_a[sp]
        b = st_b[sp]
        fa = st_fa[sp]
        fm = st_fm[sp]
        fb = st_fb[sp]
        whole = st_whole[sp]
        tol_i = st_tol[sp]
        depth = st_depth[sp]

        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = _g(lm, w0d, w1d)
        frm = _g(rm, w0d, w1d)
        evals += 2
        h12 = (b - a) / 12.0
        s_left = h12 * (fa + 4.0 * flm + fm)
        s_right = h12 * (fm + 4.0 * frm + fb)
        delta = s_left + s_right - whole
        if fabs(delta) <= 15.0 * tol_i or depth >= 60 or evals >= max_evals:
            total += s_left + s_right + delta / 15.0
            err_total += fabs(delta) / 15.0
            if fabs(delta) > 15.0 * tol_i:
                converged = False
        else:
            half_tol = 0.5 * tol_i
            st_a[sp] = m
            st_b[sp] = b
            st_fa[sp] = fm
            st_fm[sp] = frm
            st_fb[sp] = fb
            st_whole[sp] = s_right
            st_tol[sp] = half_tol
            st_depth[sp] = depth + 1
            sp += 1
            st_a[sp] = a
            st_b[sp] = m
            st_fa[sp] = fa
            st_fm[sp] = flm
            st_fb[sp] = fm
            st_whole[sp] = s_left
            st_tol[sp] = half_tol
            st_depth[sp] = depth + 1
            sp += 1
    return total, err_total, evals, converged


def unwrapped_winding_phase(rates, long samples):
    """Total unwrapped phase of t -> prod_j exp(2*pi*i*r_j*t) over [0, 1]."""
    cdef Py_ssize_t n = len(rates)
    cdef long* rbuf = <long*> PyMem_Malloc(n * sizeof(long))
    if rbuf is NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    cdef long k
    cdef double two_pi = 2.0 * M_PI
    cdef double total = 0.0
    cdef double prev = 0.0
    cdef double t, re, im, ang, c, s, re_new, im_new, phase, d
    try:
        for j in range(n):
            rbuf[j] = rates[j]
        for k in range(1, samples + 1):
            t = k / <double> samples
            re = 1.0
            im = 0.0
            for j in range(n):
                ang = two_pi * rbuf[j] * t
                c = cos(ang)
                s = sin(ang)
                re_new = re * c - im * s
                im_new = re * s + im * c
                re = re_new
                im = im_new
            phase = atan2(im, re)
            d = phase - prev
            if d > M_PI:
                d -= two_pi
            elif d <= -M_PI:
                d += two_pi
            total += d
            prev = phase
    finally:
        PyMem_Free(rbuf)
    return total
