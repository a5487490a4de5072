"""Penalised fallback for an empty F: soften the basic players' flow bounds.

Each basic player i minimises

    f_i(d_i - h_i.z) + sum_k gamma_k * p(q_k(z))      over z in D,

where p is x -> x**2 ("exact penalty") or x -> |x| ("power barrier").
The restriction loop then runs with F := D.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .costfn import eval_cost
from .errors import OutOfDomain
from .linalg import TransformData
from .network import Network
from .pareto import ParetoResult, Problem, _player_costs, assemble_x, prepare, run_restriction
from .polysys.feasible import FeasibleSet, q_value

log = logging.getLogger(__name__)

_KINDS = {
    "square": "square",
    "exact_penalty": "square",
    "absolute": "absolute",
    "power_barrier": "absolute",
}

SQUARE_WARN_CAPACITY = 12


def normalize_kind(kind: str) -> str:
    try:
        return _KINDS[kind]
    except (KeyError, TypeError):
        raise ValueError(f"unknown penalty kind {kind!r}; expected one of {sorted(_KINDS)}") from None


@dataclass(frozen=True)
class PenaltyConfig:
    gammas: tuple[Fraction, ...]
    kind: str = "square"

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        object.__setattr__(self, "gammas", tuple(Fraction(g) for g in self.gammas))
        if any(g <= 0 for g in self.gammas):
            raise ValueError("penalty parameters must be positive")

    @classmethod
    def build(cls, m: int, kind: str = "square",
              gammas: Optional[Mapping[int, Fraction]] = None) -> "PenaltyConfig":
        """Default gamma 1 everywhere; ``gammas`` overrides by 1-based k."""
        values = [Fraction(1)] * m
        for k, g in (gammas or {}).items():
            if not 1 <= k <= m:
                raise ValueError(f"penalty index {k} outside 1..{m}")
            values[k - 1] = Fraction(g)
        return cls(tuple(values), kind)

    def p(self, value) -> Fraction:
        return Fraction(value) ** 2 if self.kind == "square" else abs(Fraction(value))


def penalty_term(z: Sequence[int], td: TransformData, u_basic: Sequence[int],
                 config: PenaltyConfig) -> Fraction:
    return sum(
        (g * config.p(q_value(td.d[k], td.H[k], u_basic[k], z)) for k, g in enumerate(config.gammas)),
        Fraction(0),
    )


def penalized_cost(i: int, z: Sequence[int], config: PenaltyConfig, td: TransformData,
                   costs: Sequence, u_basic: Sequence[int]):
    """Penalised objective of basic player i (permuted frame) at z.

    ``costs`` are indexed by original column.  A flow outside the cost's
    domain counts as +inf.
    """
    x = td.basic_value(i, z)
    try:
        base = eval_cost(costs[td.perm[i]], x)
    except OutOfDomain:
        return float("inf")
    return base + penalty_term(z, td, u_basic, config)


def solve_penalized(problem: Union[Problem, Network], config: Optional[PenaltyConfig] = None,
                    basis_cols: Optional[Sequence[int]] = None) -> ParetoResult:
    problem, incidence, td, D = prepare(problem, basis_cols)
    if config is None:
        config = PenaltyConfig.build(td.m)
    if len(config.gammas) != td.m:
        raise ValueError(f"need {td.m} penalty parameters, got {len(config.gammas)}")
    u_basic = [problem.capacities[j] for j in td.perm[:td.m]]
    if config.kind == "square" and any(u > SQUARE_WARN_CAPACITY for u in u_basic):
        log.warning("capacities above %d make squared penalties on q_k very large relative to costs",
                    SQUARE_WARN_CAPACITY)
    candidates = list(D)

    def objective(i, z):
        return penalized_cost(i, z, config, td, problem.costs, u_basic)

    final, order, trace = run_restriction(candidates, td, problem.costs, z_objective=objective)
    result = ParetoResult(status="ok", problem=problem, incidence=incidence, transform=td, D=D,
                          F=FeasibleSet(tuple(candidates)), method="brute", penalized=True)
    result.order = order
    result.trace = trace
    result.z_points = sorted(final)
    result.x_points = [assemble_x(z, td) for z in result.z_points]
    result.per_player_costs = [_player_costs(x, problem.costs) for x in result.x_points]
    return result
