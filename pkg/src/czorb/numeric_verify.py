"""Numerical verification of the two-weight chart integral and the exact
bookkeeping chain from it down to the symplectic class value -1/||w||.

The chart integral

    -(1/pi) * int_0^{2pi} int_0^inf  w1*r / (w0*r^2 + w1)^2  dr dtheta

equals -1/w0 exactly. The angular factor is constant and handled
analytically; the radial improper integral is compactified by u = r/(1+r)
and evaluated by adaptive Simpson quadrature (through the kernel backend).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ._kernels import chart_radial
from .errors import ConvergenceError, DomainError
from .weights import WeightVector, make_weight_vector, symplectic_area

DEFAULT_EVAL_BUDGET = 10**6


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    estimated_error: float
    evaluations: int


def chart_integral(w0: int, w1: int, tol: float, eval_budget: int = DEFAULT_EVAL_BUDGET) -> QuadratureResult:
    """Numerically evaluate the chart integral; the result is within tol of
    -1/w0 when the quadrature converges.

    Raises ConvergenceError (carrying the achieved error estimate) if the
    evaluation budget runs out first.
    """
    if w0 < 1 or w1 < 1:
        raise DomainError(f"chart_integral requires positive integer weights, got ({w0}, {w1})")
    if not 0 < tol <= 1e-4:
        raise DomainError(f"tol must be in (0, 1e-4], got {tol}")
    if eval_budget < 16:
        raise DomainError(f"evaluation budget too small: {eval_budget}")
    # The final value is -2 * (radial integral), so run the kernel at tol/2.
    radial, err, evals, converged = chart_radial(w0, w1, tol / 2.0, eval_budget)
    if not converged:
        raise ConvergenceError(
            f"quadrature did not reach tol={tol} within {eval_budget} evaluations "
            f"(achieved error estimate {2.0 * err:.3e})",
            achieved_error=2.0 * err,
        )
    return QuadratureResult(value=-2.0 * radial, estimated_error=2.0 * err, evaluations=evals)


def area_chain(full_w: WeightVector | Iterable[int]) -> Fraction:
    """Exact factor chain from the two-weight chart value to the symplectic
    class of the full space.

    Starting from the chart value -1/w0: dividing by the order w1/gcd(w0,w1)
    of the chart's uniformizing group gives -gcd(w0,w1)/(w0*w1), and dividing
    by the degree ||w||*gcd(w0,w1)/(w0*w1) of the two-weight embedding gives
    -1/||w||. Every factor is an exact rational; the quadrature enters only
    as a cross-check of the first link.
    """
    if not isinstance(full_w, WeightVector):
        full_w = make_weight_vector(full_w)
    w0, w1 = full_w[0], full_w[1]
    g = math.gcd(w0, w1)
    chart_value = Fraction(-1, w0)
    chamber = chart_value / Fraction(w1, g)
    embedding_degree = Fraction(math.prod(full_w.w) * g, w0 * w1)
    total = chamber / embedding_degree
    assert total == symplectic_area(full_w)
    return total
