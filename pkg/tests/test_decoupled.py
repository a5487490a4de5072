from fractions import Fraction

from hypothesis import given, strategies as st

from paretoflow.costfn import CostExpr
from paretoflow.decoupled import ProductSet, build_D, minimize_univariate
from paretoflow.linalg import transform
from paretoflow.network import build_incidence

from instances import load_fixture

EXPECTED_D = [(1,), (3,), (5,), (4, 6), (7, 11), (10,), (2,), (1,), (3,), (7,), (7,), (4, 5, 6, 10, 11)]


def test_univariate_examples():
    assert minimize_univariate(CostExpr.polynomial([1, -2, 1]), 10).values == (1,)
    assert minimize_univariate(CostExpr.polynomial([0], [(1, 7)]), 13).values == (7,)
    net, _ = load_fixture("transport16.json")
    ms = minimize_univariate(net.costs[11], 15)
    assert ms.values == (4, 5, 6, 10, 11) and ms.optimal_value == 0


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=12))
def test_minimiser_set_is_exactly_the_argmin(values):
    ms = minimize_univariate(CostExpr.table(values), len(values) - 1)
    best = min(values)
    assert ms.optimal_value == best
    assert ms.values == tuple(v for v, c in enumerate(values) if c == best)


def test_sixteen_arc_D():
    net, _ = load_fixture("transport16.json")
    inc = build_incidence(net)
    td = transform(inc.A, inc.b, basis_cols=[12, 13, 14, 15])
    free = td.perm[4:]
    D = build_D([net.costs[j] for j in free], [net.capacities[j] for j in free], players=free)
    assert D.sets == EXPECTED_D
    assert len(D) == 20
    assert (1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 5) in D
    assert (1, 3, 5, 4, 12, 10, 2, 1, 3, 7, 7, 5) not in D
    assert len(list(D)) == 20


def test_printed_capacity_moves_one_minimiser():
    net, _ = load_fixture("transport16_printed.json")
    ms = minimize_univariate(net.costs[4], net.capacities[4])
    assert ms.values == (16,) and ms.optimal_value == Fraction(-6525, 16)


def test_all_singletons():
    D = build_D([CostExpr.table([0, 1]), CostExpr.table([3, 2, 5])], [1, 2])
    assert len(D) == 1 and list(D) == [(0, 1)]
    assert isinstance(D, ProductSet)
