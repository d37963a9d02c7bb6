"""Finite abelian groups in invariant-factor form.

An object ``Z/d_1 + ... + Z/d_k`` (``d_1 | ... | d_k``, all ``d_i >= 2``) is
the quotient ``Z^k / D Z^k``. A subgroup is stored as the lattice ``L``
with ``D Z^k <= L <= Z^k``, in Hermite normal form, so equal subgroups have
equal representations. Kernels, cokernels and factorization problems are
all integer lattice computations driven by the Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from typing import Sequence

from ..catcore import (
    Biproduct,
    Category,
    EndpointMismatch,
    Morphism,
    QuotientPair,
    SubobjectPair,
)
from ..exactlin import Matrix, hnf_rows, int_kernel, snf, solve_congruences, solve_int


@dataclass(frozen=True)
class FinabObject:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = self.invariant_factors
        if any(d < 2 for d in f):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f"{list(f)} is not a divisibility chain")

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def __str__(self):
        return " + ".join(f"Z/{d}" for d in self.invariant_factors) or "0"


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``Z^k / diag(moduli)`` as its lattice preimage in HNF rows."""

    moduli: tuple[int, ...]
    basis: Matrix

    def __str__(self):
        return f"<{self.basis.tolist()}> mod {list(self.moduli)}"


# -- lattice helpers over arbitrary positive moduli -------------------------

def _relations(moduli: Sequence[int]) -> list[list[int]]:
    k = len(moduli)
    return [[d if i == j else 0 for j in range(k)] for i, d in enumerate(moduli)]


def lattice(gens, moduli) -> Subgroup:
    moduli = tuple(moduli)
    rows = [list(g) for g in gens] + _relations(moduli)
    return Subgroup(moduli, hnf_rows(rows, len(moduli)))


def lattice_image(f: Matrix, S: Subgroup, target_moduli) -> Subgroup:
    return lattice([f.apply(r) for r in S.basis.data], target_moduli)


def lattice_preimage(f: Matrix, T: Subgroup, source_moduli) -> Subgroup:
    k = len(source_moduli)
    if f.rows == 0:
        return lattice(_relations(source_moduli) + [[int(i == j) for j in range(k)]
                                                       for i in range(k)], source_moduli)
    N = f.hstack(-T.basis.T)
    K = int_kernel(N)
    return lattice([c[:k] for c in K.columns()], source_moduli)


def lattice_meet(S: Subgroup, T: Subgroup) -> Subgroup:
    k = len(S.moduli)
    if k == 0:
        return S
    N = S.basis.T.hstack(-T.basis.T)
    K = int_kernel(N)
    gens = [S.basis.T.apply(c[:S.basis.rows]) for c in K.columns()]
    return lattice(gens, S.moduli)


def lattice_join(S: Subgroup, T: Subgroup) -> Subgroup:
    return lattice(list(S.basis.data) + list(T.basis.data), S.moduli)


def lattice_to_presentation(S: Subgroup) -> tuple[list[int], list[tuple[int, ...]]]:
    """Orders ``t_i > 1`` and generators (in ambient coordinates) with S = sum of Z/t_i."""
    k = len(S.moduli)
    if k == 0:
        return [], []
    G = S.basis.T  # columns are a Z-basis of the lattice
    R_cols = []
    for i, d in enumerate(S.moduli):
        e = [d if r == i else 0 for r in range(k)]
        x = solve_int(G, e)
        assert x is not None, "relation lattice not contained in subgroup lattice"
        R_cols.append(x)
    R = Matrix.from_columns(R_cols, k)
    res = snf(R)
    Uinv = _unimodular_inverse(res.U)
    gens_all = (G @ Uinv).columns()
    orders, gens = [], []
    for i, t in enumerate(res.invariants):
        if t != 1:
            orders.append(t)
            gens.append(tuple(x % m for x, m in zip(gens_all[i], S.moduli)))
    return orders, gens


def lattice_quotient(S: Subgroup) -> tuple[list[int], Matrix]:
    """Orders ``s_i > 1`` and the projection matrix of ``Z^k / L``."""
    k = len(S.moduli)
    if k == 0:
        return [], Matrix.zeros(0, 0)
    res = snf(S.basis.T)
    orders, rows = [], []
    for i, s in enumerate(res.invariants):
        if s != 1:
            orders.append(s)
            rows.append([x % s for x in res.U.row(i)])
    return orders, Matrix.from_rows(rows, k) if rows else Matrix.zeros(0, k)


def _unimodular_inverse(U: Matrix) -> Matrix:
    n = U.rows
    cols = [solve_int(U, [int(i == j) for i in range(n)]) for j in range(n)]
    return Matrix.from_columns(cols, n)


def presented_kernel(Phi: Matrix, src_moduli, dst_moduli):
    """Orders and generators of the kernel of ``Z^n/src -> Z^m/dst`` given by Phi."""
    T = lattice([], dst_moduli)
    return lattice_to_presentation(lattice_preimage(Phi, T, src_moduli))


# -- the category -----------------------------------------------------------

class Finab(Category):
    """Finite abelian groups with homomorphisms as integer matrices.

    Entry ``m[j][i]`` is the ``j``-th coordinate of the image of the ``i``-th
    generator, reduced modulo the ``j``-th target invariant factor.
    """

    kind = "finab"

    def __init__(self, factor_pool: Sequence[int] = (2, 3, 4)):
        self.factor_pool = tuple(sorted(set(factor_pool)))
        self.name = "finab"

    def obj(self, *factors: int) -> FinabObject:
        return FinabObject(tuple(factors))

    def zero_object(self):
        return FinabObject(())

    def is_valid_morphism(self, data, source, target):
        if data.shape != (target.rank, source.rank):
            return False
        for j, dj in enumerate(target.invariant_factors):
            for i, di in enumerate(source.invariant_factors):
                if (di * data[j, i]) % dj:
                    return False
        return True

    def canonical_data(self, data, source, target):
        return data.mod_rows(target.invariant_factors)

    def _mk(self, A, B, data):
        return Morphism(A, B, data.mod_rows(B.invariant_factors))

    def compose(self, v, u):
        self.check_composable(v, u)
        return self._mk(u.source, v.target, v.data @ u.data)

    def add(self, u, v):
        self.check_parallel(u, v)
        return self._mk(u.source, u.target, u.data + v.data)

    def neg(self, u):
        return self._mk(u.source, u.target, -u.data)

    def zero_morphism(self, A, B):
        return Morphism(A, B, Matrix.zeros(B.rank, A.rank))

    def identity(self, A):
        return Morphism(A, A, Matrix.identity(A.rank))

    def object_size(self, A):
        return A.rank

    # kernels and cokernels ---------------------------------------------

    def embedding(self, S: Subgroup) -> SubobjectPair:
        orders, gens = lattice_to_presentation(S)
        K = FinabObject(tuple(orders))
        A = FinabObject(S.moduli)
        data = Matrix.from_columns(gens, A.rank) if gens else Matrix.zeros(A.rank, 0)
        return SubobjectPair(K, Morphism(K, A, data))

    def projection(self, S: Subgroup) -> QuotientPair:
        orders, P = lattice_quotient(S)
        Q = FinabObject(tuple(orders))
        return QuotientPair(Q, Morphism(FinabObject(S.moduli), Q, P))

    def kernel(self, u):
        if self.is_zero(u):
            return SubobjectPair(u.source, self.identity(u.source))
        return self.embedding(self.sub_preimage(u, self.sub_zero(u.target)))

    def cokernel(self, u):
        if self.is_zero(u):
            return QuotientPair(u.target, self.identity(u.target))
        return self.projection(self.sub_image(u, self.sub_full(u.source)))

    def _solve(self, equations, n_unknowns):
        if not equations:
            return [0] * n_unknowns
        A = Matrix.from_rows([e[0] for e in equations], n_unknowns)
        x = solve_congruences(A, [e[1] for e in equations], [e[2] for e in equations])
        return x

    def lift(self, f, m):
        if f.target != m.target:
            raise EndpointMismatch("lift needs a common target")
        C, L, A = f.source, m.source, m.target
        nC, nL = C.rank, L.rank
        idx = lambda t, i: t * nC + i  # noqa: E731
        eqs = []
        for j, aj in enumerate(A.invariant_factors):
            for i in range(nC):
                row = [0] * (nL * nC)
                for t in range(nL):
                    row[idx(t, i)] = m.data[j, t]
                eqs.append((row, f.data[j, i], aj))
        for t, lt in enumerate(L.invariant_factors):
            for i, ci in enumerate(C.invariant_factors):
                row = [0] * (nL * nC)
                row[idx(t, i)] = ci
                eqs.append((row, 0, lt))
        x = self._solve(eqs, nL * nC)
        if x is None:
            return None
        W = Matrix.from_rows([[x[idx(t, i)] for i in range(nC)] for t in range(nL)], nC)
        return self._mk(C, L, W)

    def descend(self, f, e):
        if f.source != e.source:
            raise EndpointMismatch("descend needs a common source")
        A, Q, C = e.source, e.target, f.target
        nA, nQ, nC = A.rank, Q.rank, C.rank
        idx = lambda j, t: j * nQ + t  # noqa: E731
        eqs = []
        for j, cj in enumerate(C.invariant_factors):
            for i in range(nA):
                row = [0] * (nC * nQ)
                for t in range(nQ):
                    row[idx(j, t)] = e.data[t, i]
                eqs.append((row, f.data[j, i], cj))
            for t, qt in enumerate(Q.invariant_factors):
                row = [0] * (nC * nQ)
                row[idx(j, t)] = qt
                eqs.append((row, 0, cj))
        x = self._solve(eqs, nC * nQ)
        if x is None:
            return None
        W = Matrix.from_rows([[x[idx(j, t)] for t in range(nQ)] for j in range(nC)], nQ)
        return self._mk(Q, C, W)

    def biproduct(self, A, B):
        # A + B is rarely a divisibility chain, so re-present it: E maps the
        # chain generators of D into the raw coordinates of A + B
        raw = A.invariant_factors + B.invariant_factors
        ka, kb = A.rank, B.rank
        orders, gens = lattice_to_presentation(
            lattice([[int(i == j) for j in range(ka + kb)] for i in range(ka + kb)], raw))
        D = FinabObject(tuple(orders))
        E = Matrix.from_columns(gens, ka + kb) if gens else Matrix.zeros(ka + kb, 0)
        inv_cols = []
        for c in range(ka + kb):
            x = solve_congruences(E, [int(r == c) for r in range(ka + kb)], list(raw))
            inv_cols.append(x)
        Einv = Matrix.from_columns(inv_cols, D.rank).mod_rows(D.invariant_factors)
        p_A = self._mk(D, A, E.submatrix(range(ka), range(D.rank)))
        p_B = self._mk(D, B, E.submatrix(range(ka, ka + kb), range(D.rank)))
        q_A = self._mk(A, D, Einv.submatrix(range(D.rank), range(ka)))
        q_B = self._mk(B, D, Einv.submatrix(range(D.rank), range(ka, ka + kb)))
        return Biproduct(D, p_A, p_B, q_A, q_B)

    # Hom sets, probes, sampling -----------------------------------------

    def hom_basis(self, A, B):
        return self.constrained_hom_basis(A, B, None, None)

    def constrained_hom_basis(self, A, B, U: Subgroup | None, W: Subgroup | None):
        """Generators with orders of ``{f : A -> B with f(U) <= W}``."""
        coords, gens = [], []
        for j, bj in enumerate(B.invariant_factors):
            for i, ai in enumerate(A.invariant_factors):
                g = gcd(ai, bj)
                E = [[0] * A.rank for _ in range(B.rank)]
                E[j][i] = bj // g
                coords.append(g)
                gens.append(Matrix.from_rows(E, A.rank))
        if U is None or W is None or self.sub_leq(U, self.sub_zero(A)) \
                or self.sub_leq(self.sub_full(B), W):
            return [(Morphism(A, B, G), g) for G, g in zip(gens, coords) if g > 1]
        q_orders, P = lattice_quotient(W)
        us = [r for r in U.basis.data]
        cols = []
        for G in gens:
            col = []
            for u in us:
                col.extend(P.apply(G.apply(u)))
            cols.append(col)
        Phi = Matrix.from_columns(cols, len(q_orders) * len(us))
        orders, kgens = presented_kernel(Phi, coords, q_orders * len(us))
        out = []
        for order, c in zip(orders, kgens):
            data = Matrix.zeros(B.rank, A.rank)
            for ci, G in zip(c, gens):
                if ci:
                    data = data + G.scale(ci)
            out.append((self._mk(A, B, data), order))
        return out

    def probe_objects(self, objects=()):
        exps = [d for X in objects for d in self._factors_of(X)]
        e = lcm(*exps) if exps else lcm(*self.factor_pool)
        return [FinabObject((q,)) for q in _prime_powers_dividing(e)]

    @staticmethod
    def _factors_of(X):
        return getattr(X, "invariant_factors", ())

    def chains(self, max_len: int) -> list[FinabObject]:
        return _chains(self.factor_pool, max_len)

    def random_object(self, rng, max_dim):
        return rng.choice(self.chains(max_dim))

    def random_morphism(self, rng, A, B):
        return self.random_hom_element(rng, A, B)

    def random_strict_subobject(self, rng, A):
        return self.embedding(rng.choice(self.all_subs(A)))

    # the subobject lattice ----------------------------------------------

    def sub_zero(self, A):
        return lattice([], A.invariant_factors)

    def sub_full(self, A):
        return lattice([[int(i == j) for j in range(A.rank)] for i in range(A.rank)],
                       A.invariant_factors)

    def sub_span(self, A, vectors):
        return lattice(vectors, A.invariant_factors)

    def sub_generators(self, S):
        orders, gens = lattice_to_presentation(S)
        return [list(g) for g in gens]

    def sub_image(self, f, S):
        return lattice_image(f.data, S, f.target.invariant_factors)

    def sub_preimage(self, f, T):
        return lattice_preimage(f.data, T, f.source.invariant_factors)

    def sub_join(self, S, T):
        return lattice_join(S, T)

    def sub_meet(self, S, T):
        return lattice_meet(S, T)

    def sub_leq(self, S, T):
        return lattice_join(S, T) == T

    def all_subs(self, A):
        return _all_subgroups(A.invariant_factors)

    def sub_of(self, m: Morphism):
        return self.sub_image(m, self.sub_full(m.source))

    def elements(self, A):
        return list(product(*(range(d) for d in A.invariant_factors)))

    def describe_object(self, A):
        return {"invariant_factors": list(A.invariant_factors)}


def _prime_powers_dividing(n: int) -> list[int]:
    out = []
    q = 2
    while n > 1 and q <= n:
        if n % q == 0:
            k = q
            while n % k == 0:
                out.append(k)
                k *= q
            while n % q == 0:
                n //= q
        q += 1
    return sorted(out)


@lru_cache(maxsize=None)
def _chains(pool: tuple[int, ...], max_len: int) -> list[FinabObject]:
    out = [FinabObject(())]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for c in frontier:
            for d in pool:
                if not c or d % c[-1] == 0:
                    nxt.append(c + (d,))
        out.extend(FinabObject(c) for c in nxt)
        frontier = nxt
    return out


@lru_cache(maxsize=None)
def _all_subgroups(moduli: tuple[int, ...]) -> tuple[Subgroup, ...]:
    elems = list(product(*(range(d) for d in moduli)))
    zero = lattice([], moduli)
    cyclic = {lattice([g], moduli) for g in elems}
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyclic:
                T = lattice_join(S, C)
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (-_index(s), s.basis.data)))


def _index(S: Subgroup) -> int:
    """Index of the lattice in Z^k (so the subgroup order is |A| / index)."""
    n = 1
    for i in range(S.basis.rows):
        n *= S.basis[i, i]
    return n
