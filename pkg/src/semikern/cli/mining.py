"""Counterexample search behind ``semikern mine``.

Random mode draws ``samples`` candidates from ``random.Random(seed)`` and
stops at the first hit, so the reported witness is a function of the seed.
Exhaustive mode walks every candidate up to ``max_dim`` in a fixed order.
"""

from __future__ import annotations

import random
from typing import Iterator

from .. import constructions as K
from ..catcore import Category
from .report import Report, category_json
from .sampling import (
    all_morphisms,
    enumerate_objects,
    random_strict_subobject,
    strict_subobjects,
    witness_session,
)
from .session import emit_session

PATTERNS = ("bijective-noniso", "nonstrict", "iso2-noniso")


def _morphism_candidates(C, rng, samples, max_dim, exhaustive) -> Iterator:
    if exhaustive:
        yield from all_morphisms(C, max_dim)
        return
    for _ in range(samples):
        A, B = C.random_object(rng, max_dim), C.random_object(rng, max_dim)
        yield C.random_morphism(rng, A, B)


def _pair_candidates(C, rng, samples, max_dim, exhaustive) -> Iterator:
    if exhaustive:
        for A in enumerate_objects(C, max_dim):
            subs = strict_subobjects(C, A)
            for S1 in subs:
                for S2 in subs:
                    yield A, S1, S2
        return
    for _ in range(samples):
        A = C.random_object(rng, max_dim)
        yield A, random_strict_subobject(C, rng, A), random_strict_subobject(C, rng, A)


def _hit_morphism(C, pattern, u):
    if pattern == "bijective-noniso":
        if C.is_bijective(u) and C.is_isomorphism(u) is None:
            return {"bijective": True, "iso": False}
    elif not K.is_strict(C, u):
        return {"strict": False}
    return None


def mine(C: Category, kind: str, p: int | None, pattern: str, *, seed: int = 0,
         samples: int = 1000, max_dim: int = 2, exhaustive: bool = False) -> Report:
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r} (expected one of {', '.join(PATTERNS)})")
    rng = random.Random(seed)
    tried, witness = 0, None
    if pattern == "iso2-noniso":
        for A, S1, S2 in _pair_candidates(C, rng, samples, max_dim, exhaustive):
            tried += 1
            rep = K.second_iso(C, A, S1, S2, check=False)
            if not rep.iso:
                s = witness_session(kind, p, {"a1": S1.embed, "a2": S2.embed},
                                    objects={"A": A, "A1": S1.sub, "A2": S2.sub})
                witness = {"session": emit_session(s), "replay": "iso2 a1 a2",
                           "expected": {"bijective": rep.bijective, "iso": False}}
                break
    else:
        for u in _morphism_candidates(C, rng, samples, max_dim, exhaustive):
            tried += 1
            hit = _hit_morphism(C, pattern, u)
            if hit is not None:
                s = witness_session(kind, p, {"u": u})
                witness = {"session": emit_session(s), "replay": "analyze u", "expected": hit}
                break
    r = Report("mine", [pattern], category_json(C, kind, p))
    r.results = {"pattern": pattern, "seed": seed, "samples": samples, "max_dim": max_dim,
                 "exhaustive": exhaustive, "tried": tried, "found": witness is not None,
                 "witness": witness}
    return r
