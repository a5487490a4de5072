"""Efficient Pareto optimal flows for multi-player integer network problems."""

from .costfn import CostExpr, eval_cost, parse_cost
from .network import IncidenceSystem, Network, build_incidence, scale_network, validate_network
from .pareto import ParetoResult, Problem, solve
from .penalty import PenaltyConfig, solve_penalized

__version__ = "0.1.0"

__all__ = [
    "CostExpr", "IncidenceSystem", "Network", "ParetoResult", "PenaltyConfig", "Problem",
    "build_incidence", "eval_cost", "parse_cost", "scale_network", "solve", "solve_penalized",
    "validate_network",
]
