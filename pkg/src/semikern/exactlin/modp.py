"""Linear algebra over the prime field F_p.

Every routine reduces modulo ``p`` after each arithmetic step, so results
are exact for any word-sized prime. Subspaces are held in canonical form
(the reduced row echelon basis), which makes subspace equality a plain
``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .matrix import Matrix


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _rref_rows(rows: list[list[int]], ncols: int, p: int,
               pivot_limit: int | None = None) -> tuple[list[list[int]], list[int]]:
    """In-place Gauss-Jordan elimination; pivots only in the first ``pivot_limit`` columns."""
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == len(rows):
            break
        sel = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref_with_pivots(M: Matrix, p: int) -> tuple[Matrix, list[int]]:
    rows = [[x % p for x in r] for r in M.data]
    rows, pivots = _rref_rows(rows, M.cols, p)
    return Matrix.from_rows(rows, M.cols), pivots


def rref(M: Matrix, p: int) -> Matrix:
    """Reduced row echelon form of ``M`` over F_p (same shape, zero rows last)."""
    return rref_with_pivots(M, p)[0]


def rank(M: Matrix, p: int) -> int:
    return len(rref_with_pivots(M, p)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^n stored by its RREF basis (rows, no zero rows)."""

    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple[int, ...]]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis.data]

    def __str__(self):
        return f"span{[list(v) for v in self.vectors()]} <= F^{self.ambient_dim}"


def span(vectors: Sequence[Sequence[int]], ambient_dim: int, p: int) -> Subspace:
    M = Matrix.from_rows(vectors, ambient_dim) if vectors else Matrix.zeros(0, ambient_dim)
    R, piv = rref_with_pivots(M, p)
    return Subspace(ambient_dim, R.submatrix(range(len(piv)), range(ambient_dim)))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, Matrix.zeros(0, n))


def full_subspace(n: int) -> Subspace:
    return Subspace(n, Matrix.identity(n))


def kernel_basis(M: Matrix, p: int) -> Subspace:
    """Null space ``{x : M x = 0}`` of ``M`` acting on column vectors."""
    R, piv = rref_with_pivots(M, p)
    free = [j for j in range(M.cols) if j not in piv]
    vecs = []
    for f in free:
        v = [0] * M.cols
        v[f] = 1
        for r, c in enumerate(piv):
            v[c] = (-R[r, f]) % p
        vecs.append(v)
    return span(vecs, M.cols, p)


def image_basis(M: Matrix, p: int) -> Subspace:
    """Column space of ``M``."""
    return span(M.columns(), M.rows, p)


def _check_ambient(S: Subspace, T: Subspace):
    if S.ambient_dim != T.ambient_dim:
        raise ValueError(
            f"ambient dimensions differ: {S.ambient_dim} vs {T.ambient_dim}"
        )


def subspace_join(S: Subspace, T: Subspace, p: int) -> Subspace:
    _check_ambient(S, T)
    return span(S.vectors() + T.vectors(), S.ambient_dim, p)


def subspace_meet(S: Subspace, T: Subspace, p: int) -> Subspace:
    """Intersection by the Zassenhaus block elimination.

    Row reduce ``[[S, S], [T, 0]]``; rows whose left half vanishes carry the
    intersection in their right half.
    """
    _check_ambient(S, T)
    n = S.ambient_dim
    rows = [list(v) + list(v) for v in S.vectors()]
    rows += [list(v) + [0] * n for v in T.vectors()]
    rows, _ = _rref_rows(rows, 2 * n, p)
    meet = [r[n:] for r in rows if not any(r[:n]) and any(r[n:])]
    return span(meet, n, p)


def contains(S: Subspace, v: Sequence[int], p: int) -> bool:
    """Membership by back-substitution against the RREF basis."""
    if len(v) != S.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    w = [x % p for x in v]
    for r, c in zip(S.vectors(), S.pivots()):
        f = w[c]
        if f:
            w = [(a - f * b) % p for a, b in zip(w, r)]
    return not any(w)


def subspace_leq(S: Subspace, T: Subspace, p: int) -> bool:
    _check_ambient(S, T)
    return all(contains(T, v, p) for v in S.vectors())


def solve(A: Matrix, B: Matrix, p: int) -> Matrix | None:
    """One solution ``X`` of ``A X = B`` over F_p (free variables set to 0), or None."""
    if A.rows != B.rows:
        raise ValueError("A and B must have the same number of rows")
    rows = [[x % p for x in a] + [y % p for y in b] for a, b in zip(A.data, B.data)]
    rows, piv = _rref_rows(rows, A.cols + B.cols, p, pivot_limit=A.cols)
    for r in rows[len(piv):]:
        if any(r[A.cols:]):
            return None
    X = [[0] * B.cols for _ in range(A.cols)]
    for r, c in enumerate(piv):
        X[c] = rows[r][A.cols:]
    return Matrix.from_rows(X, B.cols)


def inverse(A: Matrix, p: int) -> Matrix | None:
    if A.rows != A.cols:
        return None
    if rank(A, p) != A.rows:
        return None
    return solve(A, Matrix.identity(A.rows), p)


def complement_projection(S: Subspace, p: int) -> Matrix:
    """Surjection ``F_p^n -> F_p^(n - dim S)`` with kernel exactly ``S``.

    A vector is reduced against the RREF basis (clearing pivot coordinates)
    and its non-pivot coordinates are read off.
    """
    n = S.ambient_dim
    piv = S.pivots()
    nonpiv = [j for j in range(n) if j not in piv]
    cols = []
    for j in range(n):
        if j in piv:
            r = S.basis.row(piv.index(j))
            cols.append([(-r[c]) % p for c in nonpiv])
        else:
            cols.append([int(c == j) for c in nonpiv])
    return Matrix.from_columns(cols, len(nonpiv))


def image_of(f: Matrix, S: Subspace, p: int) -> Subspace:
    """``f(S)`` as a subspace of the target."""
    if f.cols != S.ambient_dim:
        raise ValueError("map and subspace dimensions differ")
    return span([f.apply(v) for v in S.vectors()], f.rows, p)


def preimage_of(f: Matrix, T: Subspace, p: int) -> Subspace:
    """``f^{-1}(T)`` as a subspace of the source."""
    if f.rows != T.ambient_dim:
        raise ValueError("map and subspace dimensions differ")
    return kernel_basis(complement_projection(T, p) @ f, p)


def all_vectors(n: int, p: int):
    return product(range(p), repeat=n)


@lru_cache(maxsize=None)
def all_subspaces(n: int, p: int) -> tuple[Subspace, ...]:
    """Every subspace of F_p^n, ordered by dimension then basis."""
    found = {zero_subspace(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for S in frontier:
            for v in all_vectors(n, p):
                T = subspace_join(S, span([v], n, p), p)
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (s.dim, s.basis.data)))
