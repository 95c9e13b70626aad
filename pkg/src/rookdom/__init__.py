"""Total 2-domination numbers of rook's graphs K_n x K_m."""

from .core import BoardDims, RookConfig, Violation, domination_degree, is_total_dominating, normalize, verify
from .formulas import basic_bounds, closed_gamma, degree_lower_bound, sandwich_bound
from .solver import GammaResult, MarginPair, brute_force_oracle, margin_feasible, min_dominating

__version__ = "0.1.0"

__all__ = [
    "BoardDims",
    "RookConfig",
    "Violation",
    "GammaResult",
    "MarginPair",
    "basic_bounds",
    "brute_force_oracle",
    "closed_gamma",
    "degree_lower_bound",
    "domination_degree",
    "is_total_dominating",
    "margin_feasible",
    "min_dominating",
    "normalize",
    "sandwich_bound",
    "verify",
]
