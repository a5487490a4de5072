"""The consensus polynomial system and its integer solution set F."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..decoupled import MinimizerSet, ProductSet
from .groebner import GroebnerBasis, buchberger, extract_variety
from .poly import MultiPoly, product


@dataclass(frozen=True)
class FeasibleSet:
    """Lex-sorted, duplicate-free integer points."""

    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(set(map(tuple, self.points)))))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __bool__(self):
        return bool(self.points)


def build_q(d_i: int, h_i: Sequence[int], u_i: int) -> MultiPoly:
    """(d - h.z)(d - h.z - 1)...(d - h.z - u): zero exactly when 0 <= d - h.z <= u."""
    if u_i < 0:
        raise ValueError("capacity must be nonnegative")
    nvars = len(h_i)
    neg_h = [-h for h in h_i]
    return product((MultiPoly.linear(d_i - k, neg_h) for k in range(u_i + 1)), nvars)


def build_r(j: int, D_j: MinimizerSet | Sequence[int], nvars: int) -> MultiPoly:
    """Product of (z_j - v) over the minimisers v of player j."""
    values = D_j.values if isinstance(D_j, MinimizerSet) else tuple(D_j)
    if not values:
        raise ValueError("minimiser set is empty")
    coeffs = [0] * nvars
    coeffs[j] = 1
    return product((MultiPoly.linear(-v, coeffs) for v in values), nvars)


def q_value(d_i: int, h_i: Sequence[int], u_i: int, z: Sequence[int]) -> int:
    """q evaluated through its factored form."""
    x = d_i - sum(h * zk for h, zk in zip(h_i, z))
    acc = 1
    for k in range(u_i + 1):
        acc *= x - k
    return acc


def system_polys(d: Sequence[int], H: Sequence[Sequence[int]], u_basic: Sequence[int],
                 D: ProductSet) -> tuple[list[MultiPoly], list[MultiPoly]]:
    nvars = len(D.factors)
    qs = [build_q(d[i], H[i], u_basic[i]) for i in range(len(d))]
    rs = [build_r(j, D.factors[j], nvars) for j in range(nvars)]
    return qs, rs


def groebner_system(d, H, u_basic, D: ProductSet, **caps) -> GroebnerBasis:
    qs, rs = system_polys(d, H, u_basic, D)
    return buchberger(rs + qs, **caps)


def groebner_F(d, H, u_basic, D: ProductSet, **caps) -> FeasibleSet:
    return FeasibleSet(tuple(extract_variety(groebner_system(d, H, u_basic, D, **caps))))


def _in_bounds(d, H, u_basic, z) -> bool:
    for d_k, h_k, u_k in zip(d, H, u_basic):
        x = d_k - sum(h * zj for h, zj in zip(h_k, z))
        if not 0 <= x <= u_k:
            return False
    return True


def brute_force_F(D: Iterable[tuple[int, ...]], d: Sequence[int], H: Sequence[Sequence[int]],
                  u_basic: Sequence[int]) -> FeasibleSet:
    """Members of D whose basic flows respect 0 <= d_k - h_k.z <= u_k."""
    return FeasibleSet(tuple(z for z in D if _in_bounds(d, H, u_basic, z)))
