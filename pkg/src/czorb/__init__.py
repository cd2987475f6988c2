"""czorb: exact Conley-Zehnder indices of Reeb orbits over weighted
projective spaces, weighted complete intersections, and Brieskorn orbifolds,
with independent numeric oracles for every closed form."""

from ._kernels import backend_name
from .cz_indices import (
    Branch,
    CZReport,
    OrbitSpec,
    b_constant,
    mu_orbit_brieskorn,
    mu_orbit_wps,
    mu_principal,
    mu_principal_brieskorn,
    orbit_spec,
)
from .cz_paths import (
    DiagonalPath,
    ScalarPath,
    WindingResult,
    crossing_oracle_scalar,
    det_winding,
    diagonal_cz,
    loop_cz_from_maslov,
    scalar_cz,
    scalar_cz_rated,
)
from .errors import (
    ConvergenceError,
    CzorbError,
    DomainError,
    NonCoprimeError,
    UncoveredCaseError,
)
from .exact_arith import Factorization, Rational, factorize, gcd_all, lcm_all, ord_p
from .numeric_verify import QuadratureResult, area_chain, chart_integral
from .orbifold_topology import (
    AbelianGroupDescriptor,
    p_star_factor,
    teardrop_cohomology,
    teardrop_homology,
    teardrop_orbifold_chern,
)
from .spaces import (
    BrieskornExponents,
    TheoremCheck,
    WCISpace,
    WPSpace,
    brieskorn_to_wci,
    check_theorem_hypotheses,
    compute_l2,
    make_brieskorn_exponents,
    make_wci_space,
)
from .weights import (
    WeightInvariants,
    WeightVector,
    classifying_multiplier,
    fw_degree,
    invariants,
    make_weight_vector,
    symplectic_area,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDescriptor",
    "Branch",
    "BrieskornExponents",
    "CZReport",
    "ConvergenceError",
    "CzorbError",
    "DiagonalPath",
    "DomainError",
    "Factorization",
    "NonCoprimeError",
    "OrbitSpec",
    "QuadratureResult",
    "Rational",
    "ScalarPath",
    "TheoremCheck",
    "UncoveredCaseError",
    "WCISpace",
    "WPSpace",
    "WeightInvariants",
    "WeightVector",
    "WindingResult",
    "area_chain",
    "b_constant",
    "backend_name",
    "brieskorn_to_wci",
    "chart_integral",
    "check_theorem_hypotheses",
    "classifying_multiplier",
    "compute_l2",
    "crossing_oracle_scalar",
    "det_winding",
    "diagonal_cz",
    "factorize",
    "fw_degree",
    "gcd_all",
    "invariants",
    "lcm_all",
    "loop_cz_from_maslov",
    "make_brieskorn_exponents",
    "make_wci_space",
    "make_weight_vector",
    "mu_orbit_brieskorn",
    "mu_orbit_wps",
    "mu_principal",
    "mu_principal_brieskorn",
    "orbit_spec",
    "ord_p",
    "p_star_factor",
    "scalar_cz",
    "scalar_cz_rated",
    "symplectic_area",
    "teardrop_cohomology",
    "teardrop_homology",
    "teardrop_orbifold_chern",
]
