"""Orbifold (co)homology of the teardrop, its orbifold Chern number, and the
classifying-space projection factor.

The teardrop is the sphere with a single cone point of order m >= 2. Its
orbifold homology is Z in degrees 0 and 2, Z_m in every odd degree above 1,
and trivial otherwise; cohomology mirrors this with the torsion shifted up
one degree. The tables are total functions of the degree, not stored
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """One of: the trivial group, a free group Z^rank, or a cyclic group
    Z_order."""

    kind: str  # "trivial" | "free" | "cyclic"
    rank: int = 0
    order: int = 0

    def __str__(self) -> str:
        if self.kind == "trivial":
            return "0"
        if self.kind == "free":
            return "Z" if self.rank == 1 else f"Z^{self.rank}"
        return f"Z_{self.order}"


TRIVIAL_GROUP = AbelianGroupDescriptor("trivial")


def free_group(rank: int) -> AbelianGroupDescriptor:
    if rank < 1:
        raise DomainError(f"free rank must be >= 1, got {rank}")
    return AbelianGroupDescriptor("free", rank=rank)


def cyclic_group(order: int) -> AbelianGroupDescriptor:
    if order < 2:
        raise DomainError(f"cyclic order must be >= 2, got {order}")
    return AbelianGroupDescriptor("cyclic", order=order)


def _check_teardrop_args(m: int, q: int) -> None:
    if m < 2:
        raise DomainError(f"the teardrop needs a cone order m >= 2, got {m} (m=1 is the smooth sphere)")
    if q < 0:
        raise DomainError(f"degree must be >= 0, got {q}")


def teardrop_homology(m: int, q: int) -> AbelianGroupDescriptor:
    """Orbifold homology of the order-m teardrop in degree q."""
    _check_teardrop_args(m, q)
    if q in (0, 2):
        return free_group(1)
    if q > 1 and q % 2 == 1:
        return cyclic_group(m)
    return TRIVIAL_GROUP


def teardrop_cohomology(m: int, q: int) -> AbelianGroupDescriptor:
    """Orbifold cohomology of the order-m teardrop in degree q."""
    _check_teardrop_args(m, q)
    if q in (0, 2):
        return free_group(1)
    if q > 2 and q % 2 == 0:
        return cyclic_group(m)
    return TRIVIAL_GROUP


def teardrop_orbifold_chern(m: int) -> Fraction:
    """Orbifold Chern number of the order-m teardrop: 2 - (1 - 1/m) = 1 + 1/m.

    m = 1 is accepted as the smooth-sphere limit (value 2).
    """
    if m < 1:
        raise DomainError(f"cone order must be >= 1, got {m}")
    return 1 + Fraction(1, m)


def p_star_factor(m: int) -> Fraction:
    """Multiplier of the classifying-space projection on degree-2 rational
    homology: 1/m."""
    if m < 1:
        raise DomainError(f"cone order must be >= 1, got {m}")
    return Fraction(1, m)
