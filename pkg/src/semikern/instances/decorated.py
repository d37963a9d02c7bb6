"""Objects carrying a distinguished open subobject.

A linear topology on a finite module has a smallest open submodule, and the
topology is determined by it: the open sets are the unions of its cosets.
So a topologized object is a pair ``(X, U)`` with ``U`` a subobject of
``X``, and ``f: (X, U) -> (Y, W)`` is continuous iff ``f(U) <= W``.
``U = 0`` is the discrete topology, ``U = X`` the chaotic one.

Kernels carry the induced topology and cokernels the quotient topology,
with no closure taken, so the identity from a discrete to a chaotic object
is bijective without being an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable

from ..catcore import Biproduct, Category, Morphism, QuotientPair, SubobjectPair


@dataclass(frozen=True)
class DecoratedObject:
    base: Hashable
    open: Hashable

    def __str__(self):
        return f"({self.base}, open={self.open})"


class Decorated(Category):
    """``decorate(base)``: the base category with continuity-constrained morphisms.

    The base must expose its subobject lattice (``sub_zero``, ``sub_full``,
    ``sub_image``, ``sub_preimage``, ``sub_join``, ``sub_meet``, ``sub_leq``,
    ``all_subs``) and ``constrained_hom_basis``; :class:`Vect` and
    :class:`Finab` both do.
    """

    def __init__(self, base: Category, kind: str | None = None):
        self.base = base
        self.kind = kind or f"decorated-{getattr(base, 'kind', base.name)}"
        self.name = f"{self.kind}({base.name})"

    # objects ------------------------------------------------------------

    def obj(self, base_obj, open_sub=None) -> DecoratedObject:
        if open_sub is None:
            open_sub = self.base.sub_zero(base_obj)
        if open_sub not in self.base.all_subs(base_obj):
            raise ValueError(f"{open_sub} is not a subobject of {base_obj}")
        return DecoratedObject(base_obj, open_sub)

    def discrete(self, base_obj) -> DecoratedObject:
        return DecoratedObject(base_obj, self.base.sub_zero(base_obj))

    def chaotic(self, base_obj) -> DecoratedObject:
        return DecoratedObject(base_obj, self.base.sub_full(base_obj))

    def zero_object(self):
        return self.discrete(self.base.zero_object())

    # morphisms ----------------------------------------------------------

    def is_continuous(self, data, source, target) -> bool:
        f = Morphism(source.base, target.base,
                     self.base.canonical_data(data, source.base, target.base))
        return self.base.sub_leq(self.base.sub_image(f, source.open), target.open)

    def is_valid_morphism(self, data, source, target):
        return (self.base.is_valid_morphism(data, source.base, target.base)
                and self.is_continuous(data, source, target))

    def canonical_data(self, data, source, target):
        return self.base.canonical_data(data, source.base, target.base)

    def object_size(self, A):
        return self.base.object_size(A.base)

    def _lower(self, u: Morphism) -> Morphism:
        return Morphism(u.source.base, u.target.base, u.data)

    def _raise(self, f: Morphism, A, B) -> Morphism:
        return Morphism(A, B, f.data)

    def compose(self, v, u):
        self.check_composable(v, u)
        return self._raise(self.base.compose(self._lower(v), self._lower(u)), u.source, v.target)

    def add(self, u, v):
        self.check_parallel(u, v)
        return self._raise(self.base.add(self._lower(u), self._lower(v)), u.source, u.target)

    def neg(self, u):
        return self._raise(self.base.neg(self._lower(u)), u.source, u.target)

    def zero_morphism(self, A, B):
        return self._raise(self.base.zero_morphism(A.base, B.base), A, B)

    def identity(self, A):
        return self._raise(self.base.identity(A.base), A, A)

    # kernels, cokernels, factorization ----------------------------------

    def induced(self, m: Morphism, ambient: DecoratedObject) -> SubobjectPair:
        """Base subobject ``m`` given the topology induced from ``ambient``."""
        S = DecoratedObject(m.source, self.base.sub_preimage(m, ambient.open))
        return SubobjectPair(S, Morphism(S, ambient, m.data))

    def quotient(self, e: Morphism, ambient: DecoratedObject) -> QuotientPair:
        """Base quotient ``e`` given the quotient topology of ``ambient``."""
        Q = DecoratedObject(e.target, self.base.sub_image(e, ambient.open))
        return QuotientPair(Q, Morphism(ambient, Q, e.data))

    def kernel(self, u):
        K = self.base.kernel(self._lower(u))
        return self.induced(K.embed, u.source)

    def cokernel(self, u):
        Q = self.base.cokernel(self._lower(u))
        return self.quotient(Q.project, u.target)

    def lift(self, f, m):
        w = self.base.lift(self._lower(f), self._lower(m))
        if w is None or not self.is_continuous(w.data, f.source, m.source):
            return None
        return self._raise(w, f.source, m.source)

    def descend(self, f, e):
        w = self.base.descend(self._lower(f), self._lower(e))
        if w is None or not self.is_continuous(w.data, e.target, f.target):
            return None
        return self._raise(w, e.target, f.target)

    def biproduct(self, A, B):
        b = self.base.biproduct(A.base, B.base)
        U = self.base.sub_join(self.base.sub_image(b.q_A, A.open),
                               self.base.sub_image(b.q_B, B.open))
        D = DecoratedObject(b.object, U)
        return Biproduct(D, Morphism(D, A, b.p_A.data), Morphism(D, B, b.p_B.data),
                         Morphism(A, D, b.q_A.data), Morphism(B, D, b.q_B.data))

    # Hom sets, probes, sampling -----------------------------------------

    def hom_basis(self, A, B):
        return [(self._raise(g, A, B), n) for g, n in
                self.base.constrained_hom_basis(A.base, B.base, A.open, B.open)]

    def probe_objects(self, objects=()):
        out = []
        for P in self.base.probe_objects([X.base for X in objects]):
            out.append(self.discrete(P))
            out.append(self.chaotic(P))
        return out

    def random_object(self, rng, max_dim):
        X = self.base.random_object(rng, max_dim)
        return DecoratedObject(X, rng.choice(self.base.all_subs(X)))

    def random_morphism(self, rng, A, B):
        return self.random_hom_element(rng, A, B)

    def random_strict_subobject(self, rng, A):
        S = self.base.random_strict_subobject(rng, A.base)
        return self.induced(S.embed, A)

    # the subobject lattice of the underlying objects ---------------------

    def all_subs(self, A):
        return self.base.all_subs(A.base)

    def sub_of(self, m: Morphism):
        return self.base.sub_of(self._lower(m))

    def describe_object(self, A) -> dict[str, Any]:
        d = dict(self.base.describe_object(A.base))
        d["open"] = self.base.sub_generators(A.open)
        return d


def decorate(base: Category, kind: str | None = None) -> Decorated:
    return Decorated(base, kind)
