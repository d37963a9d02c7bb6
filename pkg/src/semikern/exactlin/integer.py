"""Integer matrix normal forms and exact integer solving.

Smith normal form works by elementary row and column operations, always
moving the smallest nonzero entry into the pivot, so entries stay small
and the output is deterministic. Python ints give arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import Matrix


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def invariants(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d != 0)


def snf(M: Matrix) -> SnfResult:
    m, n = M.shape
    A = [list(r) for r in M.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
            rest = [(i, t) for i in range(t + 1, m) if A[i][t]]
            rest += [(t, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                i, j = min(rest, key=lambda ij: abs(A[ij[0]][ij[1]]))
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]

    return SnfResult(Matrix.from_rows(U, m), Matrix.from_rows(A, n), Matrix.from_rows(V, n))


def determinant(M: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    A = [list(r) for r in M.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve_int(N: Matrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution ``x`` of ``N x = b``, or None when there is none."""
    if len(b) != N.rows:
        raise ValueError("right-hand side length does not match row count")
    res = snf(N)
    c = res.U.apply(b)
    z = [0] * N.cols
    for i, ci in enumerate(c):
        s = res.D[i, i] if i < N.cols else 0
        if s == 0:
            if ci != 0:
                return None
        elif ci % s:
            return None
        else:
            z[i] = ci // s
    return res.V.apply(z)


def solve_congruences(A: Matrix, b: Sequence[int], moduli: Sequence[int]) -> tuple[int, ...] | None:
    """Integer ``x`` with ``(A x)_j = b_j (mod moduli_j)``; a modulus of 0 means exact."""
    if not (len(b) == len(moduli) == A.rows):
        raise ValueError("one right-hand side and one modulus per row required")
    N = A.hstack(Matrix.diagonal(list(moduli)))
    x = solve_int(N, b)
    return None if x is None else x[:A.cols]


def int_kernel(N: Matrix) -> Matrix:
    """Columns form a Z-basis of ``{x in Z^n : N x = 0}``."""
    res = snf(N)
    r = res.rank
    return res.V.submatrix(range(N.cols), range(r, N.cols))


def int_inverse(U: Matrix) -> Matrix:
    """Inverse of a unimodular matrix."""
    n = U.rows
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = solve_int(U, e)
        if x is None:
            raise ValueError("matrix is not unimodular")
        cols.append(x)
    return Matrix.from_columns(cols, n)


def hnf_rows(gens: Sequence[Sequence[int]], n: int) -> Matrix:
    """Hermite normal form of the row lattice spanned by ``gens`` in Z^n.

    Rows are in echelon form with positive pivots; entries above each pivot
    lie in ``[0, pivot)``. Zero rows are dropped, so the result is the
    unique canonical basis of the lattice.
    """
    rows = [list(g) for g in gens if any(g)]
    out: list[list[int]] = []
    for c in range(n):
        live = [r for r in rows if r[c]]
        rows = [r for r in rows if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[c] // piv[c]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rows.append(r)
            live = nxt
        if not live:
            continue
        piv = live[0]
        if piv[c] < 0:
            piv = [-a for a in piv]
        out.append(piv)
    for k, piv in enumerate(out):
        c = next(j for j, x in enumerate(piv) if x)
        for i in range(k):
            q = out[i][c] // piv[c]
            if q:
                out[i] = [a - q * b for a, b in zip(out[i], piv)]
    return Matrix.from_rows(out, n) if out else Matrix.zeros(0, n)
