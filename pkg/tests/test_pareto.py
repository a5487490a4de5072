import pytest

from paretoflow.costfn import CostExpr
from paretoflow.errors import ParetoFlowError
from paretoflow.network import Network
from paretoflow.pareto import (
    Problem, compute_images, restrict_step, run_restriction, solve, sort_players,
)

from instances import load_fixture, random_networks

REFERENCE_X = [
    (1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 5, 5, 4, 5, 4),
    (1, 3, 5, 6, 11, 10, 2, 1, 3, 7, 7, 6, 3, 6, 4, 5),
]
# Algorithm output on the fixture: the reference pair plus the two mixed
# combinations, all with the same cost vector.
SIXTEEN_OUTPUT = [
    (1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 5, 5, 4, 5, 4),
    (1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 6, 5, 4, 4, 5),
    (1, 3, 5, 6, 11, 10, 2, 1, 3, 7, 7, 5, 3, 6, 5, 4),
    (1, 3, 5, 6, 11, 10, 2, 1, 3, 7, 7, 6, 3, 6, 4, 5),
]


def sixteen():
    net, opts = load_fixture("transport16.json")
    return solve(net, basis_cols=[j - 1 for j in opts.basis_hint])


def test_images_of_first_player():
    result = sixteen()
    images = compute_images(result.F.points, result.transform.d, result.transform.H)
    assert sorted(images[0]) == [3, 5]
    for x, pre in images[0].items():
        assert all(z in result.F.points for z in pre)
        assert {z[3] for z in pre} == {9 - x}


def test_single_point_gives_singleton_images():
    images = compute_images([(1, 2)], [3, 4], [[1, 0], [0, 1]])
    assert [sorted(im) for im in images] == [[2], [2]]


def test_sort_players():
    fake = [{1: 0, 2: 0}, {1: 0}, {1: 0, 2: 0}, {1: 0}]
    assert sort_players(fake) == [0, 2, 1, 3]
    assert sort_players([{1: 0}] * 3) == [0, 1, 2]


def test_restrict_step():
    F = [(0,), (1,), (2,)]
    # x = 5 - z: singleton image keeps everything
    image, x_star, F_star, _ = restrict_step([(0,)], CostExpr.table([0] * 6), 5, [1])
    assert image == (5,) and F_star == [(0,)]
    # increasing cost on X = {3, 4, 5}
    image, x_star, F_star, best = restrict_step(F, CostExpr.polynomial([0, 1]), 5, [1])
    assert image == (3, 4, 5) and x_star == (3,) and F_star == [(2,)] and best == 3


def test_sixteen_arc_run():
    result = sixteen()
    assert result.status == "ok"
    assert result.x_points == SIXTEEN_OUTPUT
    assert set(REFERENCE_X) <= set(result.x_points)
    assert len({c for c in result.per_player_costs}) == 1
    # basis positions 2, 3, 0, 1 are arcs 15, 16, 13, 14
    assert result.order == (2, 3, 0, 1)
    assert [s.arc + 1 for s in result.trace] == [15, 16, 13, 14]
    assert [s.size for s in result.trace] == [4, 4, 4, 4]
    again = sixteen()
    assert again.order == result.order and again.x_points == result.x_points


def test_chain_is_nested_and_nonempty():
    for net in random_networks(3, 60):
        result = solve(net)
        if result.empty:
            continue
        sizes = [len(result.F)] + [s.size for s in result.trace]
        assert all(a >= b > 0 for a, b in zip(sizes, sizes[1:]))


def test_broken_chain_raises():
    result = sixteen()

    def nowhere(i, z):
        raise ParetoFlowError("restriction chain broken")

    with pytest.raises(ParetoFlowError):
        run_restriction([], result.transform, result.problem.costs)
    with pytest.raises(ParetoFlowError):
        run_restriction(result.F.points, result.transform, result.problem.costs, z_objective=nowhere)


def test_smallest_network():
    net = Network(2, ((1, 2),), (1, -1), (3,), (CostExpr.polynomial([0, 0, 1]),))
    result = solve(net)
    assert result.x_points == [(1,)]


def test_no_basic_players():
    problem = Problem((), (), (2, 2), (CostExpr.table([3, 1, 2]), CostExpr.table([0, 0, 5])))
    result = solve(problem)
    assert result.x_points == [(1, 0), (1, 1)]
    assert result.trace == []


def test_printed_fixture_is_empty():
    net, opts = load_fixture("transport16_printed.json")
    result = solve(net, basis_cols=[j - 1 for j in opts.basis_hint])
    assert result.empty and result.x_points == []
    assert result.D.sets[4] == (16,)


def test_groebner_method_matches():
    net, opts = load_fixture("transport16.json")
    result = solve(net, method="groebner", basis_cols=[12, 13, 14, 15])
    assert result.x_points == SIXTEEN_OUTPUT
    with pytest.raises(ValueError):
        solve(net, method="simplex")
