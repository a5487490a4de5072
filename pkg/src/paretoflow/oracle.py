"""Brute-force oracles over the feasible flow set P.

Everything here is exhaustive and independent of the restriction
pipeline, apart from reusing the z-parameterisation to enumerate P.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .costfn import eval_cost
from .errors import CapExceeded, ParetoFlowError
from .linalg import TransformData, transform

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class FeasibleEnumeration:
    points: tuple[tuple[int, ...], ...]  # original column order, lex-sorted
    cap: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return tuple(x) in set(self.points)


def _cost(f, v):
    try:
        return eval_cost(f, v)
    except ParetoFlowError:
        return float("inf")


def enumerate_P(A: Sequence[Sequence[int]], b: Sequence[int], u: Sequence[int],
                cap: int = DEFAULT_CAP, td: Optional[TransformData] = None,
                hint: Optional[str] = None) -> FeasibleEnumeration:
    """All integer x with A.x = b and 0 <= x <= u.

    Backtracks over the free coordinates z; each basic flow d_k - h_k.z is
    kept inside [0, u_k] by interval bounds on the unassigned part of z.
    Raises CapExceeded once more than ``cap`` points turn up.
    """
    n = len(u)
    if td is None:
        td = transform(A, b, hint=hint, n=n)
    m = td.m
    N = n - m
    u_basic = [u[j] for j in td.perm[:m]]
    u_free = [u[j] for j in td.perm[m:]]
    H = td.H

    # suffix[k][t]: (min, max) of -sum_{j >= t} H[k][j] z_j over the box
    suffix = []
    for k in range(m):
        lo = [0] * (N + 1)
        hi = [0] * (N + 1)
        for t in range(N - 1, -1, -1):
            c = -H[k][t] * u_free[t]
            lo[t] = lo[t + 1] + min(0, c)
            hi[t] = hi[t + 1] + max(0, c)
        suffix.append((lo, hi))

    found: list[tuple[int, ...]] = []
    z = [0] * N

    def rec(t, partial):
        # partial[k] = d_k - sum_{j < t} H[k][j] z_j
        for k in range(m):
            lo, hi = suffix[k]
            if partial[k] + hi[t] < 0 or partial[k] + lo[t] > u_basic[k]:
                return
        if t == N:
            found.append(td.x_of_z(z))
            if len(found) > cap:
                raise CapExceeded(f"feasible set has more than {cap} points")
            return
        for v in range(u_free[t] + 1):
            z[t] = v
            rec(t + 1, [partial[k] - H[k][t] * v for k in range(m)])
        z[t] = 0

    rec(0, list(td.d))
    return FeasibleEnumeration(tuple(sorted(tuple(x) for x in found)), cap)


def enumerate_box(A: Sequence[Sequence[int]], b: Sequence[int], u: Sequence[int],
                  cap: int = DEFAULT_CAP) -> FeasibleEnumeration:
    """Plain n-dimensional box scan filtered by A.x = b.  Slow; for cross-checks."""
    points = []
    for x in itertools.product(*(range(uj + 1) for uj in u)):
        if all(sum(a * v for a, v in zip(row, x)) == bk for row, bk in zip(A, b)):
            points.append(x)
            if len(points) > cap:
                raise CapExceeded(f"feasible set has more than {cap} points")
    return FeasibleEnumeration(tuple(points), cap)


def check_pareto(x_star: Sequence[int], enumeration: FeasibleEnumeration, costs):
    """``(True, None)`` if x* is Pareto optimal over P, else ``(False, witness)``."""
    x_star = tuple(x_star)
    ref = [_cost(f, v) for f, v in zip(costs, x_star)]
    for x in enumeration:
        if x == x_star:
            continue
        vals = [_cost(f, v) for f, v in zip(costs, x)]
        if all(a <= r for a, r in zip(vals, ref)) and any(a < r for a, r in zip(vals, ref)):
            return False, x
    return True, None


def _optimal_players(x, mins, costs) -> frozenset[int]:
    return frozenset(i for i, (f, v) in enumerate(zip(costs, x)) if _cost(f, v) <= mins[i])


def check_vector_optimal_subset(x_star: Sequence[int], enumeration: FeasibleEnumeration, costs,
                                cap: int = DEFAULT_CAP):
    """Players (0-based) at their global minimum over P, and whether that set is maximal.

    Returns ``(S, maximal, witness)``; the witness is a point of P whose own
    set strictly contains S, or None.  Maximality exhausts P, so P larger
    than ``cap`` raises CapExceeded.
    """
    if len(enumeration) > cap:
        raise CapExceeded(f"maximality check limited to {cap} points, P has {len(enumeration)}")
    n = len(costs)
    mins = [min(_cost(costs[i], x[i]) for x in enumeration) for i in range(n)]
    S = _optimal_players(x_star, mins, costs)
    for x in enumeration:
        other = _optimal_players(x, mins, costs)
        if S < other:
            return S, False, x
    return S, True, None


def check_nash(x_star: Sequence[int], A: Sequence[Sequence[int]], b: Sequence[int],
               u: Sequence[int], costs):
    """``(True, None)`` if no player gains by a unilateral integer move.

    Moves that break A.x = b cost +inf, so only feasible ones can win.  On
    failure the witness is ``(player, better_value)``.
    """
    x = list(x_star)
    residual = [sum(a * v for a, v in zip(row, x)) - bk for row, bk in zip(A, b)]
    for i, f in enumerate(costs):
        current = _cost(f, x[i])
        for v in range(u[i] + 1):
            if v == x[i]:
                continue
            delta = v - x[i]
            if any(r + row[i] * delta for r, row in zip(residual, A)):
                continue
            if _cost(f, v) < current:
                return False, (i, v)
    return True, None


@dataclass(frozen=True)
class PointReport:
    """Oracle verdicts for one point.  None means the check was skipped (P too large)."""

    x: tuple[int, ...]
    pareto: Optional[bool]
    pareto_witness: Optional[tuple[int, ...]]
    nash: bool
    nash_witness: Optional[tuple[int, int]]
    optimal_players: Optional[frozenset[int]]
    maximal: Optional[bool]
    maximal_witness: Optional[tuple[int, ...]]


def verify_points(problem, td: TransformData, x_points, cap: int = DEFAULT_CAP,
                  maximality_cap: int = DEFAULT_CAP) -> list[PointReport]:
    """Run every oracle on each output point of a solve.

    The Nash check needs no enumeration and always runs.  The P-based checks
    are skipped when P has more than ``cap`` points; maximality is skipped
    above ``maximality_cap``.
    """
    try:
        enum = enumerate_P(problem.A, problem.b, problem.capacities, cap=cap, td=td)
    except CapExceeded:
        enum = None
    mins = None
    if enum is not None:
        mins = [min(_cost(f, p[i]) for p in enum) for i, f in enumerate(problem.costs)]
    reports = []
    for x in x_points:
        ok_n, wit_n = check_nash(x, problem.A, problem.b, problem.capacities, problem.costs)
        ok_p = wit_p = S = maximal = wit_s = None
        if enum is not None:
            ok_p, wit_p = check_pareto(x, enum, problem.costs)
            if len(enum) <= maximality_cap:
                S, maximal, wit_s = check_vector_optimal_subset(x, enum, problem.costs, maximality_cap)
            else:
                S = _optimal_players(x, mins, problem.costs)
        reports.append(PointReport(tuple(x), ok_p, wit_p, ok_n, wit_n, S, maximal, wit_s))
    return reports
