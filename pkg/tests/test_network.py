import pytest

from paretoflow.costfn import CostExpr
from paretoflow.errors import DisconnectedGraph, LengthMismatch, OutOfDomain, SelfLoop, UnbalancedSupply
from paretoflow.network import Network, build_incidence, scale_network, validate_network

from instances import load_fixture

SQ = CostExpr.polynomial([0, 0, 1])

# 5x16 incidence matrix of the sixteen-arc example, as printed
A_TILDE = [
    [-1, -1, -1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, -1, -1, -1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, -1, -1, -1, -1],
]


def one_arc(b=(1, -1)):
    return Network(2, ((1, 2),), b, (3,), (SQ,))


def test_smallest_network():
    validate_network(one_arc())
    inc = build_incidence(one_arc())
    assert inc.A_aug == ((1,), (-1,))
    assert inc.A == ((1,),) and inc.b == (1,)


def test_sixteen_arc_incidence():
    net, _ = load_fixture("transport16.json")
    validate_network(net)
    inc = build_incidence(net)
    assert [list(r) for r in inc.A_aug] == A_TILDE
    assert inc.A == tuple(tuple(r) for r in A_TILDE[:4])
    assert inc.b == (9, -13, 15, -11)


def test_parallel_arcs_give_equal_columns():
    net = Network(2, ((1, 2), (1, 2)), (2, -2), (1, 1), (SQ, SQ))
    inc = build_incidence(net)
    assert [r[0] for r in inc.A_aug] == [r[1] for r in inc.A_aug]


def test_validation_errors():
    with pytest.raises(UnbalancedSupply):
        validate_network(one_arc((1, 0)))
    with pytest.raises(SelfLoop):
        validate_network(Network(2, ((1, 1), (1, 2)), (0, 0), (1, 1), (SQ, SQ)))
    with pytest.raises(DisconnectedGraph):
        validate_network(Network(3, ((1, 2),), (0, 0, 0), (1,), (SQ,)))
    with pytest.raises(LengthMismatch):
        validate_network(Network(2, ((1, 2),), (0, 0), (1, 2), (SQ,)))
    with pytest.raises(OutOfDomain):
        validate_network(Network(2, ((1, 2),), (0, 0), (3,), (CostExpr.table([0, 1]),)))


def test_scaling():
    net = one_arc()
    assert scale_network(net, 1) is net
    big = scale_network(Network(2, ((1, 2),), (5, -5), (5,), (SQ,)), 1000)
    assert big.capacities == (5000,) and big.supplies == (5000, -5000)
    assert big.costs[0](2500) == SQ.segments[0].body(1) * 25 / 4
    with pytest.raises(ValueError):
        scale_network(net, 0)
