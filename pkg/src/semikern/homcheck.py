"""Hom groups as explicit finite abelian groups, and exactness-based checks.

A kernel candidate ``(L, i)`` for ``u: A -> B`` is checked two ways over a
finite family of probe objects ``P``:

* exactness: ``0 -> Hom(P, L) -> Hom(P, A) -> Hom(P, B)`` is exact, decided
  by enumerating the groups;
* the three conditions: ``i`` is cancellable on the left against every
  ``P``, ``u i = 0``, and every ``v: P -> A`` with ``u v = 0`` factors as ``i w``.

Cokernel candidates are checked by running the same code in the dual category.
The probe family replaces "every object"; see each instance's
``probe_objects`` for why its family generates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .catcore import (
    DEFAULT_HOM_BUDGET,
    Category,
    EndpointMismatch,
    HomBudgetExceeded,
    Morphism,
    QuotientPair,
    SubobjectPair,
    dualize,
    flip,
    opposite,
)


@dataclass(frozen=True)
class HomGroup:
    """``Hom(source, target)`` as generators with orders, enumerated when small."""

    category: Category
    source: object
    target: object
    basis: tuple
    elements: tuple | None = None

    @property
    def size(self) -> int:
        n = 1
        for _, order in self.basis:
            n *= order
        return n

    @property
    def enumerated(self) -> bool:
        return self.elements is not None

    @property
    def generators(self) -> list[Morphism]:
        return [g for g, _ in self.basis]

    def _require_elements(self):
        if self.elements is None:
            raise HomBudgetExceeded(
                f"Hom({self.source}, {self.target}) has {self.size} elements; only the "
                "structured form is available")
        return self.elements

    def __iter__(self):
        return iter(self._require_elements())

    def __len__(self):
        return self.size

    def __contains__(self, m: Morphism) -> bool:
        if (m.source, m.target) != (self.source, self.target):
            return False
        return self.category.is_valid_morphism(m.data, m.source, m.target)

    def zero(self) -> Morphism:
        return self.category.zero_morphism(self.source, self.target)

    def sample(self, rng: random.Random) -> Morphism:
        return self.category.random_hom_element(rng, self.source, self.target)


def realize_hom(C: Category, source, target, budget: int = DEFAULT_HOM_BUDGET) -> HomGroup:
    """Enumerate ``Hom(source, target)`` if it fits the budget, else keep the structured form."""
    basis = tuple(C.hom_basis(source, target))
    H = HomGroup(C, source, target, basis)
    if H.size <= budget:
        H = HomGroup(C, source, target, basis, tuple(C.hom_elements(source, target, budget)))
    return H


@dataclass(frozen=True)
class InducedMap:
    """A group homomorphism between Hom groups induced by a fixed morphism."""

    domain: HomGroup
    codomain: HomGroup
    fn: Callable[[Morphism], Morphism] = field(compare=False)
    label: str = ""

    def __call__(self, m: Morphism) -> Morphism:
        return self.fn(m)

    def kernel_elements(self) -> set[Morphism]:
        z = self.codomain.zero()
        return {m for m in self.domain if self.fn(m) == z}

    def image_elements(self) -> set[Morphism]:
        return {self.fn(m) for m in self.domain}

    def is_additive(self, rng: random.Random | None = None, samples: int = 20) -> bool:
        C = self.domain.category
        if self.domain.enumerated and self.domain.size ** 2 <= DEFAULT_HOM_BUDGET:
            pairs = [(a, b) for a in self.domain for b in self.domain]
        else:
            rng = rng or random.Random(0)
            pairs = [(self.domain.sample(rng), self.domain.sample(rng)) for _ in range(samples)]
        return all(self.fn(C.add(a, b)) == C.add(self.fn(a), self.fn(b)) for a, b in pairs)


def post_compose(C: Category, u: Morphism, P, budget: int = DEFAULT_HOM_BUDGET) -> InducedMap:
    """``u^*: Hom(P, A) -> Hom(P, B)``, ``v |-> u v``."""
    return InducedMap(realize_hom(C, P, u.source, budget), realize_hom(C, P, u.target, budget),
                      lambda v: C.compose(u, v), f"post({P})")


def pre_compose(C: Category, u: Morphism, P, budget: int = DEFAULT_HOM_BUDGET) -> InducedMap:
    """``u_*: Hom(B, P) -> Hom(A, P)``, ``w |-> w u``."""
    return InducedMap(realize_hom(C, u.target, P, budget), realize_hom(C, u.source, P, budget),
                      lambda w: C.compose(w, u), f"pre({P})")


def exactness_check(maps: Sequence[InducedMap], left_zero: bool = False,
                    right_zero: bool = False) -> bool:
    """Exactness of ``[0 ->] H0 -> H1 -> ... -> Hn [-> 0]`` at every interior node."""
    for f, g in zip(maps, maps[1:]):
        if (f.codomain.source, f.codomain.target) != (g.domain.source, g.domain.target):
            raise EndpointMismatch("maps are not composable")
    for f, g in zip(maps, maps[1:]):
        if f.image_elements() != g.kernel_elements():
            return False
    if left_zero and maps and maps[0].kernel_elements() != {maps[0].domain.zero()}:
        return False
    if right_zero and maps and maps[-1].image_elements() != set(maps[-1].codomain):
        return False
    return True


@dataclass(frozen=True)
class Verdict:
    ok: bool
    condition: str | None = None
    probe: object = None
    morphism: Morphism | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def _probe_family(C: Category, objects, probes, paranoid: bool, rng, max_dim: int,
                  extra: int) -> list:
    family = list(probes) if probes is not None else list(C.probe_objects(objects))
    if paranoid:
        rng = rng or random.Random(0)
        family += [C.random_object(rng, max_dim) for _ in range(extra)]
    return family


def kernel_conditions(C: Category, u: Morphism, cand: SubobjectPair, probes=None, *,
                      paranoid: bool = False, rng: random.Random | None = None,
                      max_dim: int = 2, extra: int = 3,
                      budget: int = DEFAULT_HOM_BUDGET) -> Verdict:
    """Cancellability, vanishing composite and factorization of every ``v`` in ``Ker u^*``."""
    i = cand.embed
    if i.target != u.source:
        raise EndpointMismatch("candidate does not embed into the source of u")
    if not C.is_zero(C.compose(u, i)):
        return Verdict(False, "composite", None, C.compose(u, i), "u i != 0")
    for P in _probe_family(C, [u.source, u.target, cand.sub], probes, paranoid, rng, max_dim, extra):
        for w in realize_hom(C, P, cand.sub, budget):
            if not C.is_zero(w) and C.is_zero(C.compose(i, w)):
                return Verdict(False, "injective", P, w, "i w = 0 with w != 0")
        # maps of the form i w form a subgroup, so only lift v outside the
        # subgroup generated by the ones already lifted
        covered = {C.zero_morphism(P, u.source)}
        for v in realize_hom(C, P, u.source, budget):
            if v in covered or not C.is_zero(C.compose(u, v)):
                continue
            w = C.lift(v, i)
            if w is None or C.compose(i, w) != v:
                return Verdict(False, "factorization", P, v, "u v = 0 but v does not factor through i")
            covered = _extend_subgroup(C, covered, v)
    return PASS


def _extend_subgroup(C: Category, S: set, g: Morphism) -> set:
    out = set(S)
    frontier = list(S)
    while frontier:
        x = C.add(frontier.pop(), g)
        if x not in out:
            out.add(x)
            frontier.append(x)
    return out


def kernel_exactness(C: Category, u: Morphism, cand: SubobjectPair, probes=None, *,
                     paranoid: bool = False, rng: random.Random | None = None,
                     max_dim: int = 2, extra: int = 3,
                     budget: int = DEFAULT_HOM_BUDGET) -> Verdict:
    """``0 -> Hom(P, L) -> Hom(P, A) -> Hom(P, B)`` exact for every probe ``P``."""
    if cand.embed.target != u.source:
        raise EndpointMismatch("candidate does not embed into the source of u")
    for P in _probe_family(C, [u.source, u.target, cand.sub], probes, paranoid, rng, max_dim, extra):
        seq = [post_compose(C, cand.embed, P, budget), post_compose(C, u, P, budget)]
        if not exactness_check(seq, left_zero=True):
            return Verdict(False, "exactness", P, None, "Hom sequence not exact")
    return PASS


def verify_kernel(C: Category, u: Morphism, cand: SubobjectPair, probes=None, **kw) -> Verdict:
    return kernel_conditions(C, u, cand, probes, **kw)


def _dual_verdict(v: Verdict) -> Verdict:
    if v.ok:
        return v
    renamed = {"injective": "surjective"}.get(v.condition, v.condition)
    m = None if v.morphism is None else flip(v.morphism)
    return Verdict(False, renamed, v.probe, m, v.detail)


def cokernel_conditions(C: Category, u: Morphism, cand: QuotientPair, probes=None, **kw) -> Verdict:
    """The kernel conditions read in the dual category."""
    if cand.project.source != u.target:
        raise EndpointMismatch("candidate does not project from the target of u")
    return _dual_verdict(kernel_conditions(dualize(C), flip(u), opposite(cand), probes, **kw))


def cokernel_exactness(C: Category, u: Morphism, cand: QuotientPair, probes=None, **kw) -> Verdict:
    """``0 -> Hom(Q, P) -> Hom(B, P) -> Hom(A, P)`` exact for every probe ``P``."""
    if cand.project.source != u.target:
        raise EndpointMismatch("candidate does not project from the target of u")
    return _dual_verdict(kernel_exactness(dualize(C), flip(u), opposite(cand), probes, **kw))


def verify_cokernel(C: Category, u: Morphism, cand: QuotientPair, probes=None, **kw) -> Verdict:
    return cokernel_conditions(C, u, cand, probes, **kw)


def wrong_kernels(C: Category, u: Morphism) -> Iterable[tuple[str, SubobjectPair]]:
    """Valid subobjects of ``u.source`` that are not ``Ker(u)``.

    Wrong subspaces come from every other member of the subobject lattice;
    decorated instances also get the true kernel with a smaller open.
    """
    base = getattr(C, "base", C)
    A = u.source
    K = C.kernel(u)
    k_sub = C.sub_of(K.embed)
    decorated = base is not C
    for S in C.all_subs(A):
        if S == k_sub:
            continue
        if decorated:
            yield "subspace", C.induced(base.embedding(S).embed, A)
        else:
            yield "subspace", base.embedding(S)
    if decorated:
        for U in base.all_subs(K.sub.base):
            if U != K.sub.open and base.sub_leq(U, K.sub.open):
                X = type(K.sub)(K.sub.base, U)
                yield "decoration", SubobjectPair(X, Morphism(X, A, K.embed.data))


def wrong_cokernels(C: Category, u: Morphism) -> Iterable[tuple[str, QuotientPair]]:
    """Quotients of ``u.target`` other than ``Coker(u)``; decorated also with bigger opens."""
    base = getattr(C, "base", C)
    B = u.target
    Q = C.cokernel(u)
    im = C.sub_of(C.kernel(Q.project).embed)
    decorated = base is not C
    for S in C.all_subs(B):
        if S == im:
            continue
        if decorated:
            yield "subspace", C.quotient(base.projection(S).project, B)
        else:
            yield "subspace", base.projection(S)
    if decorated:
        for W in base.all_subs(Q.quot.base):
            if W != Q.quot.open and base.sub_leq(Q.quot.open, W):
                X = type(Q.quot)(Q.quot.base, W)
                yield "decoration", QuotientPair(X, Morphism(B, X, Q.project.data))
