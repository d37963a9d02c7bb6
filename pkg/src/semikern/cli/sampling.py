"""Object enumeration, strict-subobject sampling and witness sessions."""

from __future__ import annotations

import random
from typing import Iterator

from ..catcore import Category, Morphism, SubobjectPair
from ..instances import Decorated, Finab, Vect, VectObject
from .session import Session


def base_of(C: Category) -> Category:
    return C.base if isinstance(C, Decorated) else C


def enumerate_objects(C: Category, max_dim: int) -> list:
    """Every object of size at most ``max_dim``: dims for vect, factor count for finab,
    and every open for decorated instances."""
    B = base_of(C)
    if isinstance(B, Vect):
        bases = [VectObject(d) for d in range(max_dim + 1)]
    elif isinstance(B, Finab):
        bases = B.chains(max_dim)
    else:
        raise TypeError(f"cannot enumerate objects of {C.name}")
    if B is C:
        return bases
    return [C.obj(X, U) for X in bases for U in B.all_subs(X)]


def strict_subobjects(C: Category, A) -> list[SubobjectPair]:
    """All strict subobjects of ``A`` up to equality, one canonical pair each.

    A subobject is strict iff it carries the induced structure, so each base
    subobject contributes exactly one.
    """
    B = base_of(C)
    if B is C:
        return [C.embedding(S) for S in C.all_subs(A)]
    return [C.induced(B.embedding(S).embed, A) for S in B.all_subs(A.base)]


def random_strict_subobject(C: Category, rng: random.Random, A) -> SubobjectPair:
    return rng.choice(strict_subobjects(C, A))


def all_morphisms(C: Category, max_dim: int, budget: int = 4096) -> Iterator[Morphism]:
    objs = enumerate_objects(C, max_dim)
    for A in objs:
        for B in objs:
            if C.hom_size(A, B) <= budget:
                yield from C.hom_elements(A, B, budget)


_NAMES = "ABCDEFGHJKLMNPQRSTUVWXYZ"


def witness_session(kind: str, p: int | None, morphisms: dict[str, Morphism],
                    objects: dict | None = None) -> Session:
    """A session naming the given morphisms and every object they touch."""
    s = Session.new(kind, p)
    for name, X in (objects or {}).items():
        s.add_object(name, X)
    free = iter(n for n in _NAMES if n not in (objects or {}) and n not in morphisms)
    for m in morphisms.values():
        for X in (m.source, m.target):
            if s.object_name(X) is None:
                s.add_object(next(free), X)
    for name, m in morphisms.items():
        s.add_morphism(name, m)
    return s
