"""Pure-Python implementations of the two numeric kernels.

The compiled module `_speedups` mirrors these functions line for line; both
use the same bisection order and the same accept tests so that results agree
across backends. Keep the two in sync when editing either.
"""

from __future__ import annotations

import math

# Bisection depth at which an interval is accepted regardless of its error
# estimate; [0,1] halved 60 times is already below double-precision spacing.
_MAX_DEPTH = 60


def chart_radial(w0: int, w1: int, tol: float, max_evals: int):
    """Adaptive-Simpson value of the compactified radial chart integral.

    Integrates u -> f(r(u)) * r'(u) over [0, 1], where r = u/(1-u) maps the
    unit interval onto [0, inf) and f(r) = w1*r / (w0*r^2 + w1)^2. The exact
    value is 1/(2*w0).

    Intervals are bisected while the Simpson error estimate |S_l + S_r - S|/15
    exceeds the per-interval tolerance (halved on each split); accepted
    intervals use Richardson extrapolation. The evaluation budget is checked
    between refinements, so the final count can exceed it by a few calls.

    Returns (value, error_estimate, evaluations, converged).
    """

    def g(u: float) -> float:
        if u >= 1.0:
            return 0.0
        one_minus = 1.0 - u
        r = u / one_minus
        denom = w0 * r * r + w1
        return w1 * r / (denom * denom) / (one_minus * one_minus)

    fa = g(0.0)
    fm = g(0.5)
    fb = g(1.0)
    evals = 3
    whole = (fa + 4.0 * fm + fb) / 6.0

    total = 0.0
    err_total = 0.0
    converged = True
    # Each frame: (a, b, fa, fm, fb, simpson(a, b), tol, depth)
    stack = [(0.0, 1.0, fa, fm, fb, whole, tol, 0)]
    while stack:
        a, b, fa, fm, fb, s_whole, tol_i, depth = stack.pop()
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = g(lm)
        frm = g(rm)
        evals += 2
        h12 = (b - a) / 12.0
        s_left = h12 * (fa + 4.0 * flm + fm)
        s_right = h12 * (fm + 4.0 * frm + fb)
        delta = s_left + s_right - s_whole
        if abs(delta) <= 15.0 * tol_i or depth >= _MAX_DEPTH or evals >= max_evals:
            total += s_left + s_right + delta / 15.0
            err_total += abs(delta) / 15.0
            if abs(delta) > 15.0 * tol_i:
                converged = False
        else:
            half_tol = 0.5 * tol_i
            stack.append((m, b, fm, frm, fb, s_right, half_tol, depth + 1))
            stack.append((a, m, fa, flm, fm, s_left, half_tol, depth + 1))
    return total, err_total, evals, converged


def unwrapped_winding_phase(rates, samples: int) -> float:
    """Total unwrapped phase of t -> prod_j exp(2*pi*i*r_j*t) over [0, 1].

    Samples the product at samples+1 uniform points, takes the principal
    phase of each complex value, and accumulates the wrapped increments.
    The caller guarantees the sampling is dense enough that the true step
    between consecutive samples stays below pi.
    """
    two_pi = 2.0 * math.pi
    total = 0.0
    prev = 0.0
    for k in range(1, samples + 1):
        t = k / samples
        re = 1.0
        im = 0.0
        for r in rates:
            ang = two_pi * r * t
            c = math.cos(ang)
            s = math.sin(ang)
            re, im = re * c - im * s, re * s + im * c
        phase = math.atan2(im, re)
        d = phase - prev
        if d > math.pi:
            d -= two_pi
        elif d <= -math.pi:
            d += two_pi
        total += d
        prev = phase
    return total
