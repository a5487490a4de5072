import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from paretoflow.errors import NotUnimodular, NoUnimodularBasis
from paretoflow.linalg import (
    bareiss_det, find_unimodular_basis, hermite_closed_form, hermite_reduce, identity,
    invert_unimodular, matmul, matvec, rank, reduce_system, select_columns, transform,
)
from paretoflow.network import build_incidence

from instances import load_fixture, random_networks


def fraction_det(M):
    """Plain Gaussian elimination over Q, as an independent check."""
    a = [[Fraction(v) for v in row] for row in M]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def sixteen():
    net, _ = load_fixture("transport16.json")
    return build_incidence(net)


def test_det_small():
    assert bareiss_det(identity(3)) == 1
    assert bareiss_det([[2, 0], [0, 3]]) == 6
    assert bareiss_det([[0, 1], [1, 0]]) == -1


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_rational_elimination(M):
    assert bareiss_det(M) == fraction_det(M)


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 1], [0, 1, 1]]) == 2


def test_sixteen_arc_basis_is_unimodular():
    inc = sixteen()
    assert abs(bareiss_det(select_columns(inc.A, [12, 13, 14, 15]))) == 1
    cols, perm = find_unimodular_basis(inc.A, hint="incidence")
    assert abs(bareiss_det(select_columns(inc.A, cols))) == 1
    assert perm[:4] == cols and sorted(perm) == list(range(16))


def test_identity_block_basis():
    A = [[1, 0, 2, 3], [0, 1, 5, 7]]
    assert find_unimodular_basis(A)[0] == [0, 1]


def test_even_matrix_has_no_unimodular_basis():
    A = [[2, 0, 2], [0, 2, 4]]
    with pytest.raises(NoUnimodularBasis) as exc:
        find_unimodular_basis(A)
    assert not exc.value.inconclusive


def test_inverse():
    assert invert_unimodular(identity(3)) == identity(3)
    assert invert_unimodular([[1, 1], [0, 1]]) == [[1, -1], [0, 1]]
    with pytest.raises(NotUnimodular):
        invert_unimodular([[2, 0], [0, 1]])
    B = select_columns(sixteen().A, [12, 13, 14, 15])
    assert matmul(B, invert_unimodular(B)) == identity(4)


def test_reduce_identity_block():
    A = [[1, 0, 2], [0, 1, -1]]
    _, C, d = reduce_system(A, [4, 5], [0, 1])
    assert C == A and d == [4, 5]


def test_printed_parameterisation():
    inc = sixteen()
    td = transform(inc.A, inc.b, basis_cols=[12, 13, 14, 15])
    assert td.d == (9, -13, 15, -11)
    assert td.H == (
        (-1, -1, -1, 1, 0, 0, 1, 0, 0, 1, 0, 0),
        (1, 0, 0, -1, -1, -1, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0, 1),
        (0, 1, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1),
    )
    z = (1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 5)
    assert td.x_of_z(z) == [1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 5, 5, 4, 5, 4]


def test_hermite():
    assert hermite_reduce([[1, 0], [0, 1]]) == identity(2)
    assert hermite_reduce([[1, 2]]) == [[1, -2], [0, 1]]
    inc = sixteen()
    td = transform(inc.A, inc.b, basis_cols=[12, 13, 14, 15])
    CU = matmul(td.C, td.U)
    assert CU == [row + [0] * 12 for row in identity(4)]
    assert td.U == tuple(map(tuple, hermite_closed_form(td.C)))
    assert abs(bareiss_det(td.U)) == 1


def test_single_row():
    td = transform([[1, 1]], [5])
    for z in range(6):
        assert td.x_of_z([z]) == [5 - z, z]


def test_empty_constraint_system():
    td = transform([], [], n=3)
    assert td.x_of_z([1, 2, 3]) == [1, 2, 3]


def test_pinned_basis_must_be_unimodular():
    with pytest.raises(NotUnimodular):
        transform([[1, 1, 2]], [2], basis_cols=[2])


def test_reduced_system_same_solutions_on_grid():
    rng = random.Random(5)
    for _ in range(20):
        R = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(3)]
        Q = [[1, 0, 0], [rng.randint(-2, 2), 1, 0], [rng.randint(-2, 2), rng.randint(-2, 2), 1]]
        A = matmul(Q, [[int(i == j) for j in range(3)] + R[i] for i in range(3)])
        b = [rng.randint(-3, 3) for _ in range(3)]
        _, C, d = reduce_system(A, b, [0, 1, 2])
        for x in itertools.product(range(-2, 3), repeat=5):
            assert (matvec(A, x) == b) == (matvec(C, x) == d)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_random_transform_satisfies_constraints(seed):
    (net,) = random_networks(seed, 1, nodes=(2, 6), extra=(0, 6), max_free=6)
    inc = build_incidence(net)
    td = transform(inc.A, inc.b, hint="incidence")
    rng = random.Random(seed)
    for _ in range(5):
        z = [rng.randint(-20, 20) for _ in range(td.n - td.m)]
        assert matvec(inc.A, td.x_of_z(z)) == list(inc.b)


def test_combination_search_after_greedy_miss():
    A = [[2, 1, 0], [0, 0, 1]]
    cols, perm = find_unimodular_basis(A)
    assert cols == [1, 2] and perm == [1, 2, 0]


def test_search_cap_is_inconclusive():
    A = [[2, 0, 2, 1], [0, 2, 4, 0]]
    with pytest.raises(NoUnimodularBasis) as exc:
        find_unimodular_basis(A, search_cap=2)
    assert exc.value.inconclusive
