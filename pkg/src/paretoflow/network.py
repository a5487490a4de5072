"""Directed network with one player per arc, and its node-arc incidence system."""

from __future__ import annotations

from dataclasses import dataclass

from .costfn import CostExpr, scale_cost
from .errors import (
    DisconnectedGraph,
    LengthMismatch,
    NetworkError,
    OutOfDomain,
    SelfLoop,
    UnbalancedSupply,
)


@dataclass(frozen=True)
class Network:
    """Nodes are numbered 1..node_count; arcs are (tail, head) pairs in input order."""

    node_count: int
    arcs: tuple[tuple[int, int], ...]
    supplies: tuple[int, ...]
    capacities: tuple[int, ...]
    costs: tuple[CostExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(t), int(h)) for t, h in self.arcs))
        object.__setattr__(self, "supplies", tuple(int(b) for b in self.supplies))
        object.__setattr__(self, "capacities", tuple(int(u) for u in self.capacities))
        object.__setattr__(self, "costs", tuple(self.costs))

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def m(self) -> int:
        return self.node_count - 1


@dataclass(frozen=True)
class IncidenceSystem:
    A_aug: tuple[tuple[int, ...], ...]
    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]


def validate_network(net: Network) -> Network:
    if net.node_count < 1:
        raise NetworkError("network needs at least one node")
    if len(net.supplies) != net.node_count:
        raise LengthMismatch(f"{len(net.supplies)} supplies for {net.node_count} nodes")
    if not (len(net.arcs) == len(net.capacities) == len(net.costs)):
        raise LengthMismatch(
            f"arcs={len(net.arcs)}, capacities={len(net.capacities)}, costs={len(net.costs)}"
        )
    for j, (tail, head) in enumerate(net.arcs):
        for node in (tail, head):
            if not 1 <= node <= net.node_count:
                raise NetworkError(f"arc {j + 1} references unknown node {node}")
        if tail == head:
            raise SelfLoop(f"arc {j + 1} is a self-loop at node {tail}")
    for j, u in enumerate(net.capacities):
        if u < 0:
            raise NetworkError(f"arc {j + 1} has negative capacity {u}")
    if sum(net.supplies) != 0:
        raise UnbalancedSupply(f"supplies sum to {sum(net.supplies)}, expected 0")
    if not _connected(net.node_count, net.arcs):
        raise DisconnectedGraph("underlying undirected graph is not connected")
    for j, (f, u) in enumerate(zip(net.costs, net.capacities)):
        if not f.covers(0, u):
            raise OutOfDomain(f"cost of arc {j + 1} is not defined on every integer in [0, {u}]")
    return net


def _connected(node_count, arcs) -> bool:
    parent = list(range(node_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in arcs:
        parent[find(t)] = find(h)
    return len({find(v) for v in range(1, node_count + 1)}) == 1


def build_incidence(net: Network) -> IncidenceSystem:
    rows = [[0] * net.n for _ in range(net.node_count)]
    for j, (tail, head) in enumerate(net.arcs):
        rows[tail - 1][j] = 1
        rows[head - 1][j] = -1
    A_aug = tuple(tuple(r) for r in rows)
    return IncidenceSystem(A_aug=A_aug, A=A_aug[:-1], b=net.supplies[:-1])


def scale_network(net: Network, alpha: int) -> Network:
    """Network in the integer variable y = alpha * x (flows accurate to 1/alpha)."""
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError(f"scale factor must be a positive integer, got {alpha!r}")
    if alpha == 1:
        return net
    return Network(
        node_count=net.node_count,
        arcs=net.arcs,
        supplies=tuple(b * alpha for b in net.supplies),
        capacities=tuple(u * alpha for u in net.capacities),
        costs=tuple(scale_cost(f, alpha) for f in net.costs),
    )
