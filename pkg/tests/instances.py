"""Random small network instances for property and acceptance tests."""

import json
import random
from fractions import Fraction
from pathlib import Path

from paretoflow.costfn import CostExpr
from paretoflow.io import parse_instance_doc
from paretoflow.network import Network

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return parse_instance_doc(json.loads((FIXTURES / name).read_text()))


def random_network(rng: random.Random, nodes=(2, 4), extra=(1, 4), max_cap=4, cost_range=(0, 3),
                   max_free=4) -> Network:
    """Connected network whose flow box holds a known feasible point.

    A random spanning tree plus ``extra`` arcs (so n - m <= max_free), table
    costs drawn from ``cost_range``, and supplies read off a random flow.
    """
    k = rng.randint(*nodes)
    arcs = []
    for v in range(2, k + 1):
        w = rng.randint(1, v - 1)
        arcs.append((v, w) if rng.random() < 0.5 else (w, v))
    for _ in range(min(rng.randint(*extra), max_free)):
        t, h = rng.sample(range(1, k + 1), 2)
        arcs.append((t, h))
    rng.shuffle(arcs)
    caps = [rng.randint(1, max_cap) for _ in arcs]
    x0 = [rng.randint(0, u) for u in caps]
    supplies = [0] * k
    for (t, h), v in zip(arcs, x0):
        supplies[t - 1] += v
        supplies[h - 1] -= v
    costs = [CostExpr.table([Fraction(rng.randint(*cost_range)) for _ in range(u + 1)])
             for u in caps]
    return Network(k, tuple(arcs), tuple(supplies), tuple(caps), tuple(costs))


def random_networks(seed, count, **kw):
    rng = random.Random(seed)
    return [random_network(rng, **kw) for _ in range(count)]
