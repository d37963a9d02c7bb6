"""Finite-dimensional vector spaces over F_p."""

from __future__ import annotations

from dataclasses import dataclass

from ..catcore import (
    Biproduct,
    Category,
    EndpointMismatch,
    Morphism,
    QuotientPair,
    SubobjectPair,
)
from ..exactlin import Matrix, modp
from ..exactlin.modp import Subspace


@dataclass(frozen=True)
class VectObject:
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")

    def __str__(self):
        return f"F^{self.dim}"


class Vect(Category):
    """The category of F_p^n spaces with F_p-linear maps as matrices."""

    kind = "vect"

    def __init__(self, p: int):
        if not modp.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"vect(p={p})"

    def obj(self, dim: int) -> VectObject:
        return VectObject(dim)

    def zero_object(self):
        return VectObject(0)

    def is_valid_morphism(self, data, source, target):
        return data.shape == (target.dim, source.dim)

    def canonical_data(self, data, source, target):
        return data.mod(self.p)

    def _mk(self, A, B, data):
        return Morphism(A, B, data.mod(self.p))

    def compose(self, v, u):
        self.check_composable(v, u)
        return self._mk(u.source, v.target, v.data @ u.data)

    def add(self, u, v):
        self.check_parallel(u, v)
        return self._mk(u.source, u.target, u.data + v.data)

    def neg(self, u):
        return self._mk(u.source, u.target, -u.data)

    def zero_morphism(self, A, B):
        return Morphism(A, B, Matrix.zeros(B.dim, A.dim))

    def identity(self, A):
        return Morphism(A, A, Matrix.identity(A.dim))

    def object_size(self, A):
        return A.dim

    # kernels and cokernels ---------------------------------------------

    def embedding(self, S: Subspace) -> SubobjectPair:
        """The subobject ``(F^k, basis columns)`` of ``F^n`` carried by ``S``."""
        K = VectObject(S.dim)
        return SubobjectPair(K, Morphism(K, VectObject(S.ambient_dim), S.basis.T))

    def projection(self, S: Subspace) -> QuotientPair:
        """``F^n -> F^n / S`` onto the non-pivot coordinates."""
        P = modp.complement_projection(S, self.p)
        Q = VectObject(P.rows)
        return QuotientPair(Q, Morphism(VectObject(S.ambient_dim), Q, P))

    def kernel(self, u):
        return self.embedding(modp.kernel_basis(u.data, self.p))

    def cokernel(self, u):
        return self.projection(modp.image_basis(u.data, self.p))

    def lift(self, f, m):
        if f.target != m.target:
            raise EndpointMismatch("lift needs a common target")
        X = modp.solve(m.data, f.data, self.p)
        return None if X is None else Morphism(f.source, m.source, X)

    def descend(self, f, e):
        if f.source != e.source:
            raise EndpointMismatch("descend needs a common source")
        X = modp.solve(e.data.T, f.data.T, self.p)
        return None if X is None else Morphism(e.target, f.target, X.T)

    def is_isomorphism(self, u):
        if u.source.dim != u.target.dim:
            return None
        inv = modp.inverse(u.data, self.p)
        return None if inv is None else Morphism(u.target, u.source, inv)

    def biproduct(self, A, B):
        D = VectObject(A.dim + B.dim)
        I_A, I_B = Matrix.identity(A.dim), Matrix.identity(B.dim)
        p_A = I_A.hstack(Matrix.zeros(A.dim, B.dim))
        p_B = Matrix.zeros(B.dim, A.dim).hstack(I_B)
        return Biproduct(D, Morphism(D, A, p_A), Morphism(D, B, p_B),
                         Morphism(A, D, p_A.T), Morphism(B, D, p_B.T))

    # Hom sets, probes, sampling -----------------------------------------

    def hom_basis(self, A, B):
        return self.constrained_hom_basis(A, B, None, None)

    def constrained_hom_basis(self, A, B, U: Subspace | None, W: Subspace | None):
        """Basis of ``{f : A -> B with f(U) <= W}`` (unconstrained when U is None)."""
        m, n = B.dim, A.dim
        units = []
        for j in range(m):
            for i in range(n):
                e = [[0] * n for _ in range(m)]
                e[j][i] = 1
                units.append(Matrix.from_rows(e, n))
        if U is None or W is None or U.dim == 0 or W.dim == m:
            return [(Morphism(A, B, E), self.p) for E in units]
        # f(u) in W  <=>  N_W f u = 0, linear in the entries of f
        N = modp.complement_projection(W, self.p)
        cons = []
        for u in U.vectors():
            for r in range(N.rows):
                cons.append([N[r, j] * u[i] for j in range(m) for i in range(n)])
        sol = modp.kernel_basis(Matrix.from_rows(cons, m * n), self.p)
        return [(Morphism(A, B, Matrix.from_rows([v[j * n:(j + 1) * n] for j in range(m)], n)),
                 self.p) for v in sol.vectors()]

    def probe_objects(self, objects=()):
        return [VectObject(1)]

    def random_object(self, rng, max_dim):
        return VectObject(rng.randint(0, max_dim))

    def random_morphism(self, rng, A, B):
        return Morphism(A, B, Matrix.from_rows(
            [[rng.randrange(self.p) for _ in range(A.dim)] for _ in range(B.dim)], A.dim))

    def random_strict_subobject(self, rng, A):
        return self.embedding(rng.choice(self.all_subs(A)))

    # the subobject lattice of an object, used by decorations ------------

    def sub_zero(self, A):
        return modp.zero_subspace(A.dim)

    def sub_full(self, A):
        return modp.full_subspace(A.dim)

    def sub_span(self, A, vectors):
        return modp.span(vectors, A.dim, self.p)

    def sub_generators(self, S):
        return [list(v) for v in S.vectors()]

    def sub_image(self, f, S):
        return modp.image_of(f.data, S, self.p)

    def sub_preimage(self, f, T):
        return modp.preimage_of(f.data, T, self.p)

    def sub_join(self, S, T):
        return modp.subspace_join(S, T, self.p)

    def sub_meet(self, S, T):
        return modp.subspace_meet(S, T, self.p)

    def sub_leq(self, S, T):
        return modp.subspace_leq(S, T, self.p)

    def all_subs(self, A):
        return modp.all_subspaces(A.dim, self.p)

    def sub_of(self, m: Morphism):
        """The subspace ``m(source)`` of ``m.target``."""
        return modp.image_basis(m.data, self.p)

    def describe_object(self, A):
        return {"dim": A.dim}

