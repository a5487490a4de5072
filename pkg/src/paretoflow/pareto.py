"""Iterative restriction of F to efficient Pareto optimal points, and the solve pipeline."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .costfn import CostExpr, eval_cost
from .decoupled import ProductSet, build_D
from .errors import ParetoFlowError
from .linalg import TransformData, transform
from .network import IncidenceSystem, Network, build_incidence, validate_network
from .polysys.feasible import FeasibleSet, brute_force_F, groebner_F

log = logging.getLogger(__name__)

METHODS = ("brute", "groebner")


@dataclass(frozen=True)
class Problem:
    """Raw instance: A x = b, 0 <= x <= capacities, one cost per column.

    ``hint="incidence"`` lets the basis search use spanning trees.
    """

    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]
    capacities: tuple[int, ...]
    costs: tuple[CostExpr, ...]
    hint: Optional[str] = None

    @property
    def n(self) -> int:
        return len(self.capacities)

    @classmethod
    def from_network(cls, net: Network) -> "Problem":
        inc = build_incidence(validate_network(net))
        return cls(inc.A, inc.b, net.capacities, net.costs, hint="incidence")


@dataclass(frozen=True)
class RestrictionStep:
    player: int  # position in the permuted frame (0-based)
    arc: int  # original column index (0-based)
    image: tuple[int, ...]  # X_{s_i}, sorted
    argmin: tuple[int, ...]  # X*_{s_i}, sorted
    optimal_cost: Union[Fraction, float]
    size: int  # |F*_{s_i}|


@dataclass
class ParetoResult:
    status: str  # "ok" or "empty_feasible"
    z_points: list[tuple[int, ...]] = field(default_factory=list)
    x_points: list[tuple[int, ...]] = field(default_factory=list)
    per_player_costs: list[tuple] = field(default_factory=list)
    trace: list[RestrictionStep] = field(default_factory=list)
    order: tuple[int, ...] = ()
    # pipeline artefacts, kept for reporting and verification
    problem: Optional[Problem] = None
    incidence: Optional[IncidenceSystem] = None
    transform: Optional[TransformData] = None
    D: Optional[ProductSet] = None
    F: Optional[FeasibleSet] = None
    method: str = "brute"
    penalized: bool = False

    @property
    def empty(self) -> bool:
        return self.status == "empty_feasible"


def compute_images(F: Sequence[Sequence[int]], d: Sequence[int], H: Sequence[Sequence[int]]):
    """For every basic player i: ``{x_i: [z in F with d_i - h_i.z = x_i]}``."""
    images = []
    for d_i, h_i in zip(d, H):
        pre: dict[int, list[tuple[int, ...]]] = {}
        for z in F:
            x = d_i - sum(h * zk for h, zk in zip(h_i, z))
            pre.setdefault(x, []).append(tuple(z))
        images.append(pre)
    return images


def sort_players(images) -> list[int]:
    """Basic players by |X_i| descending; ties keep index order."""
    return sorted(range(len(images)), key=lambda i: -len(images[i]))


def restrict_step(F_prev: Sequence[Sequence[int]], cost: CostExpr, d_i: int, h_i: Sequence[int],
                  z_objective: Optional[Callable] = None):
    """One restriction: minimise the player's cost over the current set.

    Returns ``(X_image, X_star, F_star, best)``.  With ``z_objective`` the
    objective is a function of the whole z (penalised runs); X* then lists
    the flows attained by the minimisers.
    """
    (pre,) = compute_images(F_prev, [d_i], [h_i])
    image = tuple(sorted(pre))
    if z_objective is None:
        values = {x: eval_cost(cost, x) for x in image}
        best = min(values.values())
        x_star = tuple(x for x in image if values[x] == best)
        F_star = sorted(z for x in x_star for z in pre[x])
    else:
        scored = [(z_objective(z), tuple(z)) for z in F_prev]
        best = min(s for s, _ in scored)
        F_star = sorted(z for s, z in scored if s == best)
        x_of = {z: x for x, zs in pre.items() for z in zs}
        x_star = tuple(sorted({x_of[z] for z in F_star}))
    return image, x_star, F_star, best


def run_restriction(F: Sequence[Sequence[int]], td: TransformData, costs: Sequence[CostExpr],
                    z_objective: Optional[Callable] = None):
    """Sort once by |X_i|, then restrict F player by player.

    ``costs`` are indexed by original column.  ``z_objective(i, z)`` overrides
    the objective of permuted-frame player i.  Returns ``(F_final, order, trace)``.
    """
    F = [tuple(z) for z in F]
    if not F:
        raise ParetoFlowError("restriction needs a nonempty feasible set")
    order = sort_players(compute_images(F, td.d, td.H))
    current = F
    trace = []
    for i in order:
        arc = td.perm[i]
        obj = None if z_objective is None else (lambda z, i=i: z_objective(i, z))
        image, x_star, F_star, best = restrict_step(current, costs[arc], td.d[i], td.H[i], obj)
        # nested and nonempty at every step
        if not F_star or not set(F_star) <= set(current):
            raise ParetoFlowError(f"restriction chain broken at player {i}")
        trace.append(RestrictionStep(i, arc, image, x_star, best, len(F_star)))
        log.debug("player %d (arc %d): |X|=%d X*=%s |F*|=%d", i, arc + 1, len(image), x_star,
                  len(F_star))
        current = F_star
    return current, tuple(order), trace


def assemble_x(z: Sequence[int], td: TransformData) -> tuple[int, ...]:
    """Flow in original column order from a z point."""
    return tuple(td.x_of_z(z))


def _player_costs(x, costs):
    out = []
    for v, f in zip(x, costs):
        try:
            out.append(eval_cost(f, v))
        except ParetoFlowError:
            out.append(float("inf"))
    return tuple(out)


def prepare(problem: Union[Problem, Network], basis_cols: Optional[Sequence[int]] = None):
    """Incidence (if a network), transform and D.  Returns ``(problem, incidence, td, D)``."""
    incidence = None
    if isinstance(problem, Network):
        validate_network(problem)
        incidence = build_incidence(problem)
        problem = Problem.from_network(problem)
    td = transform(problem.A, problem.b, hint=problem.hint, basis_cols=basis_cols, n=problem.n)
    nonbasic = td.perm[td.m:]
    D = build_D([problem.costs[j] for j in nonbasic], [problem.capacities[j] for j in nonbasic],
                players=nonbasic)
    return problem, incidence, td, D


def compute_F(td: TransformData, D: ProductSet, capacities: Sequence[int], method: str = "brute",
              **caps) -> FeasibleSet:
    u_basic = [capacities[j] for j in td.perm[:td.m]]
    if method == "brute":
        return brute_force_F(D, td.d, td.H, u_basic)
    if method == "groebner":
        return groebner_F(td.d, td.H, u_basic, D, **caps)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def solve(problem: Union[Problem, Network], method: str = "brute",
          basis_cols: Optional[Sequence[int]] = None, **caps) -> ParetoResult:
    """Full pipeline from instance to efficient Pareto optimal flows.

    When F is empty the result has ``status == "empty_feasible"`` and no
    points; the penalty solver handles that case.
    """
    problem, incidence, td, D = prepare(problem, basis_cols)
    F = compute_F(td, D, problem.capacities, method, **caps)
    result = ParetoResult(status="ok", problem=problem, incidence=incidence, transform=td, D=D,
                          F=F, method=method)
    if not F:
        result.status = "empty_feasible"
        return result
    final, order, trace = run_restriction(F.points, td, problem.costs)
    result.order = order
    result.trace = trace
    result.z_points = sorted(final)
    result.x_points = [assemble_x(z, td) for z in result.z_points]
    result.per_player_costs = [_player_costs(x, problem.costs) for x in result.x_points]
    return result
