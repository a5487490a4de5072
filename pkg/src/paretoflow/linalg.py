"""Exact integer linear algebra for the x -> z reparameterisation.

Matrices are sequences of rows of Python ints.  Nothing here touches floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import LinalgError, NotUnimodular, NoUnimodularBasis

Matrix = Sequence[Sequence[int]]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(X: Matrix, Y: Matrix) -> list[list[int]]:
    cols = list(zip(*Y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in X]


def matvec(X: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in X]


def select_columns(A: Matrix, cols: Sequence[int]) -> list[list[int]]:
    return [[row[j] for j in cols] for row in A]


def bareiss_det(M: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise LinalgError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(M: Matrix) -> int:
    """Exact rank by fraction-free elimination."""
    a = [list(row) for row in M]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r


def invert_unimodular(B: Matrix) -> list[list[int]]:
    """Integer inverse of a matrix with determinant +-1.

    Fraction-free Gauss-Jordan on [B | I]: the left block ends as det*I and
    the right block as det * B^-1, so dividing by det = +-1 is exact.
    """
    n = len(B)
    if any(len(row) != n for row in B):
        raise NotUnimodular("matrix is not square")
    det = bareiss_det(B)
    if abs(det) != 1:
        raise NotUnimodular(f"determinant is {det}, not +-1")
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(B)]
    prev = 1
    for k in range(n):
        pivot = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[pivot] = a[pivot], a[k]
        pk = a[k][k]
        for i in range(n):
            if i == k:
                continue
            aik = a[i][k]
            a[i] = [(a[i][j] * pk - aik * a[k][j]) // prev for j in range(2 * n)]
        prev = pk
    d = a[0][0]
    inv = [[a[i][n + j] // d for j in range(n)] for i in range(n)]
    if matmul(B, inv) != identity(n):
        raise LinalgError("internal error: unimodular inverse check failed")
    return inv


def _incidence_edges(A: Matrix):
    """Read (u, v) endpoints per column of a reduced incidence matrix.

    Row index m stands for the node whose row was dropped.  Returns None when
    A is not a reduced node-arc incidence matrix.
    """
    m = len(A)
    edges = []
    for j in range(len(A[0]) if A else 0):
        plus = [i for i in range(m) if A[i][j] == 1]
        minus = [i for i in range(m) if A[i][j] == -1]
        if any(A[i][j] not in (0, 1, -1) for i in range(m)) or len(plus) > 1 or len(minus) > 1:
            return None
        if not plus and not minus:
            return None
        edges.append(((plus or [m])[0], (minus or [m])[0]))
    return edges


def _spanning_tree_columns(A: Matrix) -> Optional[list[int]]:
    """Kruskal in column order: the lexicographically smallest spanning tree."""
    edges = _incidence_edges(A)
    if edges is None:
        return None
    m = len(A)
    parent = list(range(m + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for j, (u, v) in enumerate(edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(j)
            if len(chosen) == m:
                break
    return chosen if len(chosen) == m else None


def _greedy_independent(A: Matrix) -> list[int]:
    m = len(A)
    chosen: list[int] = []
    for j in range(len(A[0])):
        trial = chosen + [j]
        if rank(select_columns(A, trial)) == len(trial):
            chosen = trial
            if len(chosen) == m:
                break
    return chosen


def basis_permutation(n: int, basis_cols: Sequence[int]) -> list[int]:
    """Basis columns first, then the rest in their original relative order."""
    basis = list(basis_cols)
    rest = [j for j in range(n) if j not in set(basis)]
    return basis + rest


def find_unimodular_basis(A: Matrix, hint: Optional[str] = None, search_cap: int = 200_000):
    """Pick m columns of A forming a basis with determinant +-1.

    Returns ``(basis_cols, perm)`` with 0-based column indices.  With
    ``hint="incidence"`` the columns of a spanning tree are used.  Otherwise
    the greedy independent set is tried first, then column subsets in
    lexicographic order (at most ``search_cap`` of them).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if rank(A) != m:
        raise LinalgError(f"A has rank {rank(A)} < {m} rows; full row rank required")
    if m == 0:
        return [], list(range(n))

    if hint == "incidence":
        cols = _spanning_tree_columns(A)
        if cols is None:
            raise LinalgError("hint='incidence' but A is not a connected incidence matrix")
        if abs(bareiss_det(select_columns(A, cols))) != 1:
            raise LinalgError("internal error: spanning tree basis is not unimodular")
        return cols, basis_permutation(n, cols)

    cols = _greedy_independent(A)
    if abs(bareiss_det(select_columns(A, cols))) == 1:
        return cols, basis_permutation(n, cols)

    for tried, combo in enumerate(itertools.combinations(range(n), m)):
        if tried >= search_cap:
            raise NoUnimodularBasis(
                f"no unimodular basis among the first {search_cap} column subsets",
                inconclusive=True,
            )
        if abs(bareiss_det(select_columns(A, combo))) == 1:
            return list(combo), basis_permutation(n, combo)
    raise NoUnimodularBasis("A has no unimodular basis; instance outside the supported class")


def reduce_system(A: Matrix, b: Sequence[int], basis_cols: Sequence[int]):
    """Return ``(B_inv, C, d)`` with C = B^-1 A[:, perm] and d = B^-1 b."""
    n = len(A[0])
    perm = basis_permutation(n, basis_cols)
    B = select_columns(A, basis_cols)
    B_inv = invert_unimodular(B)
    C = matmul(B_inv, select_columns(A, perm))
    d = matvec(B_inv, b)
    return B_inv, C, d


def hermite_reduce(C: Matrix) -> list[list[int]]:
    """Unimodular U with C U = [I | 0] for C = [I | R].

    Built from the column operations C_j -= C[i][j] * C_i (i over the
    identity block, j over the remaining columns), applied to U alongside.
    """
    m = len(C)
    n = len(C[0]) if m else 0
    if [list(row[:m]) for row in C] != identity(m):
        raise LinalgError("hermite_reduce expects C = [I | R]")
    work = [list(row) for row in C]
    U = identity(n)
    for i in range(m):
        for j in range(m, n):
            c = work[i][j]
            if c == 0:
                continue
            for r in range(m):
                work[r][j] -= c * work[r][i]
            for r in range(n):
                U[r][j] -= c * U[r][i]
    return U


def hermite_closed_form(C: Matrix) -> list[list[int]]:
    """U = [[I, -R], [0, I]]."""
    m = len(C)
    n = len(C[0]) if m else 0
    U = identity(n)
    for i in range(m):
        for j in range(m, n):
            U[i][j] = -C[i][j]
    return U


@dataclass(frozen=True)
class TransformData:
    """Integer reparameterisation of {x : A x = b}.

    In the permuted frame (basis columns first) every solution is
    x = (d - H z, z) for an integer vector z of length n - m.
    """

    basis_cols: tuple[int, ...]
    perm: tuple[int, ...]
    B_inv: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    H: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.d)

    @property
    def n(self) -> int:
        return len(self.perm)

    def basic_value(self, i: int, z: Sequence[int]) -> int:
        """x_i = d_i - h_i . z for a basis position i."""
        return self.d[i] - sum(h * zk for h, zk in zip(self.H[i], z))

    def x_permuted(self, z: Sequence[int]) -> list[int]:
        return [self.basic_value(i, z) for i in range(self.m)] + list(z)

    def to_original(self, x_perm: Sequence[int]) -> list[int]:
        x = [0] * self.n
        for k, j in enumerate(self.perm):
            x[j] = x_perm[k]
        return x

    def x_of_z(self, z: Sequence[int]) -> list[int]:
        """Flow vector in original column order."""
        return self.to_original(self.x_permuted(z))


def _freeze(M):
    return tuple(tuple(row) for row in M)


def transform(A: Matrix, b: Sequence[int], hint: Optional[str] = None,
              basis_cols: Optional[Sequence[int]] = None, search_cap: int = 200_000,
              n: Optional[int] = None) -> TransformData:
    """Reparameterise A x = b over the integers.

    ``basis_cols`` pins the basis (0-based); otherwise one is searched for.
    ``n`` is only needed when A has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (n or 0)
    if basis_cols is None:
        basis_cols, _ = find_unimodular_basis(A, hint=hint, search_cap=search_cap)
    else:
        basis_cols = list(basis_cols)
        if len(basis_cols) != m or len(set(basis_cols)) != m or not all(0 <= j < n for j in basis_cols):
            raise LinalgError(f"pinned basis {basis_cols} is not {m} distinct column indices")
        if abs(bareiss_det(select_columns(A, basis_cols))) != 1:
            raise NotUnimodular(f"pinned basis columns {basis_cols} are not unimodular")
    perm = basis_permutation(n, basis_cols)
    B_inv, C, d = reduce_system(A, b, basis_cols) if m else ([], [], [])
    H = [row[m:] for row in C]
    U = hermite_reduce(C) if m else identity(n)
    return TransformData(
        basis_cols=tuple(basis_cols),
        perm=tuple(perm),
        B_inv=_freeze(B_inv),
        C=_freeze(C),
        d=tuple(d),
        H=_freeze(H),
        U=_freeze(U),
    )
