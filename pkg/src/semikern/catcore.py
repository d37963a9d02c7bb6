"""The preadditive-category contract and the generic facilities built on it.

An instance supplies objects, validated morphisms, composition and the
abelian-group structure on Hom sets, kernels, cokernels, biproducts and two
exact factorization primitives, :meth:`Category.lift` (through a morphism
on the left) and :meth:`Category.descend` (through one on the right).
Everything else here (zero tests, mono/epi tests, isomorphism witnesses,
the subobject preorder, duals) is derived from those.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import product
from typing import Any, Hashable, Iterator

from .exactlin import Matrix


class CategoryError(Exception):
    """Base class for contract violations."""


class InvalidMorphism(CategoryError):
    pass


class EndpointMismatch(CategoryError):
    pass


class PreconditionError(CategoryError):
    pass


class HomBudgetExceeded(CategoryError):
    pass


@dataclass(frozen=True)
class Morphism:
    source: Hashable
    target: Hashable
    data: Matrix

    def __str__(self):
        return f"{self.source} -> {self.target} {self.data}"


@dataclass(frozen=True)
class SubobjectPair:
    """``(sub, embed)`` with ``embed: sub -> ambient`` injective."""

    sub: Hashable
    embed: Morphism

    @property
    def ambient(self):
        return self.embed.target


@dataclass(frozen=True)
class QuotientPair:
    """``(quot, project)`` with ``project: ambient -> quot`` surjective."""

    quot: Hashable
    project: Morphism

    @property
    def ambient(self):
        return self.project.source


@dataclass(frozen=True)
class Biproduct:
    object: Hashable
    p_A: Morphism
    p_B: Morphism
    q_A: Morphism
    q_B: Morphism


DEFAULT_HOM_BUDGET = 10 ** 5


class Category(ABC):
    """Abstract preadditive category with kernels, cokernels and biproducts."""

    name = "category"

    # -- instance primitives ---------------------------------------------

    @abstractmethod
    def zero_object(self) -> Hashable: ...

    @abstractmethod
    def is_valid_morphism(self, data: Matrix, source, target) -> bool: ...

    @abstractmethod
    def canonical_data(self, data: Matrix, source, target) -> Matrix:
        """Reduce raw morphism data to the canonical representative."""

    @abstractmethod
    def compose(self, v: Morphism, u: Morphism) -> Morphism:
        """``v u`` (first ``u``, then ``v``)."""

    @abstractmethod
    def add(self, u: Morphism, v: Morphism) -> Morphism: ...

    @abstractmethod
    def neg(self, u: Morphism) -> Morphism: ...

    @abstractmethod
    def zero_morphism(self, A, B) -> Morphism: ...

    @abstractmethod
    def identity(self, A) -> Morphism: ...

    @abstractmethod
    def kernel(self, u: Morphism) -> SubobjectPair: ...

    @abstractmethod
    def cokernel(self, u: Morphism) -> QuotientPair: ...

    @abstractmethod
    def biproduct(self, A, B) -> Biproduct: ...

    @abstractmethod
    def lift(self, f: Morphism, m: Morphism) -> Morphism | None:
        """Some ``w`` with ``m w = f``, or None if no morphism solves it."""

    @abstractmethod
    def descend(self, f: Morphism, e: Morphism) -> Morphism | None:
        """Some ``w`` with ``w e = f``, or None."""

    @abstractmethod
    def hom_basis(self, A, B) -> list[tuple[Morphism, int]]:
        """Generators ``g_k`` of orders ``n_k`` with Hom(A, B) = direct sum of <g_k>."""

    @abstractmethod
    def probe_objects(self, objects=()) -> list:
        """Finite family of test objects standing in for "all objects C"."""

    @abstractmethod
    def random_object(self, rng: random.Random, max_dim: int): ...

    @abstractmethod
    def random_morphism(self, rng: random.Random, A, B) -> Morphism: ...

    def random_strict_subobject(self, rng: random.Random, A) -> SubobjectPair:
        """A strict subobject of ``A``; the default is the kernel of a random map out of A."""
        B = self.random_object(rng, 2)
        return self.kernel(self.random_morphism(rng, A, B))

    # -- morphism construction --------------------------------------------

    def morphism(self, source, target, data) -> Morphism:
        if not isinstance(data, Matrix):
            try:
                data = Matrix.from_rows(data, self.object_size(source))
            except ValueError as exc:
                raise InvalidMorphism(f"malformed matrix: {exc}") from None
        if not self.is_valid_morphism(data, source, target):
            raise InvalidMorphism(f"{data} is not a morphism {source} -> {target}")
        return Morphism(source, target, self.canonical_data(data, source, target))

    def object_size(self, A) -> int:
        """Number of coordinates of A (column count of a morphism out of A)."""
        return self.identity(A).data.cols

    def check_composable(self, v: Morphism, u: Morphism):
        if u.target != v.source:
            raise EndpointMismatch(f"cannot compose: {u.target} != {v.source}")

    def check_parallel(self, u: Morphism, v: Morphism):
        if (u.source, u.target) != (v.source, v.target):
            raise EndpointMismatch("morphisms are not parallel")

    def sub(self, u: Morphism, v: Morphism) -> Morphism:
        return self.add(u, self.neg(v))

    def is_zero(self, u: Morphism) -> bool:
        return u == self.zero_morphism(u.source, u.target)

    # -- derived notions ----------------------------------------------------

    def is_zero_object(self, A) -> bool:
        """A is a zero object iff Hom(A, A) = {0}, i.e. its identity is zero."""
        return self.identity(A) == self.zero_morphism(A, A)

    def is_isomorphism(self, u: Morphism) -> Morphism | None:
        """Two-sided inverse of ``u`` if it exists in the category, else None."""
        v = self.descend(self.identity(u.source), u)
        if v is None or self.compose(u, v) != self.identity(u.target):
            return None
        return v

    def is_injective(self, u: Morphism) -> bool:
        return self.is_zero_object(self.kernel(u).sub)

    def is_surjective(self, u: Morphism) -> bool:
        return self.is_zero_object(self.cokernel(u).quot)

    def is_bijective(self, u: Morphism) -> bool:
        return self.is_injective(u) and self.is_surjective(u)

    def subobject_leq(self, S1: SubobjectPair, S2: SubobjectPair) -> Morphism | None:
        """Mediator ``w`` with ``S1.embed = S2.embed w`` when ``S1 <= S2``."""
        if S1.ambient != S2.ambient:
            raise EndpointMismatch("subobjects of different objects")
        return self.lift(S1.embed, S2.embed)

    def quotient_leq(self, Q1: QuotientPair, Q2: QuotientPair) -> Morphism | None:
        """Mediator ``w`` with ``Q1.project = w Q2.project`` when ``Q1 <= Q2``."""
        if Q1.ambient != Q2.ambient:
            raise EndpointMismatch("quotients of different objects")
        return self.descend(Q1.project, Q2.project)

    def subobjects_equal(self, S1: SubobjectPair, S2: SubobjectPair) -> bool:
        return (self.subobject_leq(S1, S2) is not None
                and self.subobject_leq(S2, S1) is not None)

    def quotients_equal(self, Q1: QuotientPair, Q2: QuotientPair) -> bool:
        return (self.quotient_leq(Q1, Q2) is not None
                and self.quotient_leq(Q2, Q1) is not None)

    def as_subobject(self, m: Morphism) -> SubobjectPair:
        if not self.is_injective(m):
            raise PreconditionError(f"{m} is not injective")
        return SubobjectPair(m.source, m)

    def as_quotient(self, e: Morphism) -> QuotientPair:
        if not self.is_surjective(e):
            raise PreconditionError(f"{e} is not surjective")
        return QuotientPair(e.target, e)

    def full_subobject(self, A) -> SubobjectPair:
        return SubobjectPair(A, self.identity(A))

    def zero_subobject(self, A) -> SubobjectPair:
        Z = self.zero_object()
        return SubobjectPair(Z, self.zero_morphism(Z, A))

    # -- Hom sets -------------------------------------------------------------

    def hom_size(self, A, B) -> int:
        n = 1
        for _, order in self.hom_basis(A, B):
            n *= order
        return n

    def hom_elements(self, A, B, budget: int = DEFAULT_HOM_BUDGET) -> Iterator[Morphism]:
        """Every morphism A -> B exactly once."""
        basis = self.hom_basis(A, B)
        size = self.hom_size(A, B)
        if size > budget:
            raise HomBudgetExceeded(f"|Hom({A}, {B})| = {size} exceeds budget {budget}")
        zero = self.zero_morphism(A, B)
        for coeffs in product(*(range(order) for _, order in basis)):
            data = zero.data
            for c, (g, _) in zip(coeffs, basis):
                if c:
                    data = data + g.data.scale(c)
            yield Morphism(A, B, self.canonical_data(data, A, B))

    def random_hom_element(self, rng: random.Random, A, B) -> Morphism:
        data = self.zero_morphism(A, B).data
        for g, order in self.hom_basis(A, B):
            data = data + g.data.scale(rng.randrange(order))
        return Morphism(A, B, self.canonical_data(data, A, B))

    # -- reporting ------------------------------------------------------------

    def describe_object(self, A) -> dict[str, Any]:
        return {"object": str(A)}


def _flip(u: Morphism) -> Morphism:
    return Morphism(u.target, u.source, u.data)


class Dual(Category):
    """The opposite category: same objects, arrows reversed.

    A dual morphism ``A -> B`` carries the data of a base morphism ``B -> A``.
    Kernels are base cokernels and vice versa; lifting and descending swap.
    """

    def __init__(self, base: Category):
        self.base = base
        self.name = f"dual({base.name})"

    def zero_object(self):
        return self.base.zero_object()

    def is_valid_morphism(self, data, source, target):
        return self.base.is_valid_morphism(data, target, source)

    def canonical_data(self, data, source, target):
        return self.base.canonical_data(data, target, source)

    def object_size(self, A):
        return self.base.object_size(A)

    def morphism(self, source, target, data):
        return _flip(self.base.morphism(target, source, data))

    def compose(self, v, u):
        self.check_composable(v, u)
        return _flip(self.base.compose(_flip(u), _flip(v)))

    def add(self, u, v):
        return _flip(self.base.add(_flip(u), _flip(v)))

    def neg(self, u):
        return _flip(self.base.neg(_flip(u)))

    def zero_morphism(self, A, B):
        return _flip(self.base.zero_morphism(B, A))

    def identity(self, A):
        return self.base.identity(A)

    def kernel(self, u):
        Q = self.base.cokernel(_flip(u))
        return SubobjectPair(Q.quot, _flip(Q.project))

    def cokernel(self, u):
        K = self.base.kernel(_flip(u))
        return QuotientPair(K.sub, _flip(K.embed))

    def biproduct(self, A, B):
        b = self.base.biproduct(A, B)
        return Biproduct(b.object, _flip(b.q_A), _flip(b.q_B), _flip(b.p_A), _flip(b.p_B))

    def lift(self, f, m):
        w = self.base.descend(_flip(f), _flip(m))
        return None if w is None else _flip(w)

    def descend(self, f, e):
        w = self.base.lift(_flip(f), _flip(e))
        return None if w is None else _flip(w)

    def hom_basis(self, A, B):
        return [(_flip(g), n) for g, n in self.base.hom_basis(B, A)]

    def probe_objects(self, objects=()):
        return self.base.probe_objects(objects)

    def random_object(self, rng, max_dim):
        return self.base.random_object(rng, max_dim)

    def random_morphism(self, rng, A, B):
        return _flip(self.base.random_morphism(rng, B, A))

    def describe_object(self, A):
        return self.base.describe_object(A)


def dualize(category: Category) -> Category:
    return Dual(category)


def opposite(pair: SubobjectPair | QuotientPair) -> SubobjectPair | QuotientPair:
    """Reinterpret a subobject as a quotient in the opposite category, or back."""
    if isinstance(pair, SubobjectPair):
        return QuotientPair(pair.sub, _flip(pair.embed))
    return SubobjectPair(pair.quot, _flip(pair.project))


flip = _flip
