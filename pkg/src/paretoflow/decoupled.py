"""Decoupled univariate minimisations for the non-basic players."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .costfn import CostExpr, eval_cost


@dataclass(frozen=True)
class MinimizerSet:
    """All global minimisers of one player's cost over 0..u, ascending."""

    player: int
    values: tuple[int, ...]
    optimal_value: Fraction

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class ProductSet:
    """Cartesian product of minimiser sets, iterated lazily in lex order."""

    factors: tuple[MinimizerSet, ...]

    def __len__(self):
        return math.prod(len(f) for f in self.factors)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(f.values for f in self.factors))

    def __contains__(self, z) -> bool:
        return len(z) == len(self.factors) and all(
            zj in f.values for zj, f in zip(z, self.factors)
        )

    @property
    def sets(self) -> list[tuple[int, ...]]:
        return [f.values for f in self.factors]


def minimize_univariate(f: CostExpr, u: int, player: int = 0) -> MinimizerSet:
    """Exhaustive exact minimisation of ``f`` over the integers 0..u."""
    best = None
    values: list[int] = []
    for v in range(u + 1):
        c = eval_cost(f, v)
        if best is None or c < best:
            best, values = c, [v]
        elif c == best:
            values.append(v)
    return MinimizerSet(player=player, values=tuple(values), optimal_value=best)


def build_D(costs: Sequence[CostExpr], capacities: Sequence[int],
            players: Sequence[int] | None = None) -> ProductSet:
    if players is None:
        players = range(len(costs))
    return ProductSet(tuple(
        minimize_univariate(f, u, p) for f, u, p in zip(costs, capacities, players)
    ))
