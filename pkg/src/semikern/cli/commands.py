"""Session commands. Each returns a :class:`Report` carrying every witness matrix."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .. import constructions as K
from .. import homcheck
from ..catcore import PreconditionError, QuotientPair, SubobjectPair
from .report import (
    Report,
    category_json,
    morphism_json,
    object_json,
    optional_morphism,
    quotient_json,
    subobject_json,
)
from .session import Session, SessionError

HOM_LISTING_LIMIT = 256


class UsageError(Exception):
    """Bad command line or precondition violation; exit status 2."""


@dataclass
class Options:
    seed: int = 0
    samples: int = 300
    max_dim: int = 2
    paranoid: bool = False
    exhaustive: bool = False


def _report(session: Session, command: str, args) -> Report:
    return Report(command, list(args), category_json(session.category, session.kind, session.p))


def _subobject(session: Session, name: str) -> SubobjectPair:
    m = session.get_morphism(name)
    try:
        return session.category.as_subobject(m)
    except PreconditionError:
        raise UsageError(f"{name} is not injective, so it is not a subobject") from None


def factor_json(C, f: K.FactorizationReport) -> dict:
    return {
        "kernel": subobject_json(C, f.ker),
        "cokernel": quotient_json(C, f.coker),
        "coimage": quotient_json(C, f.coim),
        "image": subobject_json(C, f.im),
        "u_bar": morphism_json(C, f.u_bar),
        "u_bar_inverse": optional_morphism(C, f.u_bar_inverse),
        "flags": {"injective": f.injective, "surjective": f.surjective,
                  "bijective": f.bijective, "u_bar_bijective": f.u_bar_bijective,
                  "strict": f.strict},
    }


def cmd_analyze(session: Session, args, opts: Options) -> Report:
    (name,) = args
    C = session.category
    u = session.get_morphism(name)
    f = K.canonical_factor(C, u)
    inv = C.is_isomorphism(u)
    r = _report(session, "analyze", args)
    r.results = {
        "morphism": morphism_json(C, u),
        "kernel": subobject_json(C, f.ker),
        "cokernel": quotient_json(C, f.coker),
        "image": subobject_json(C, f.im),
        "coimage": quotient_json(C, f.coim),
        "injective": f.injective, "surjective": f.surjective, "bijective": f.bijective,
        "iso": inv is not None, "inverse": optional_morphism(C, inv),
        "strict": f.strict, "u_bar_bijective": f.u_bar_bijective,
    }
    return r


def _probe_kw(opts: Options) -> dict:
    return {"paranoid": opts.paranoid, "rng": random.Random(opts.seed), "max_dim": opts.max_dim}


def _verdict_json(C, v: homcheck.Verdict) -> dict:
    return {"ok": v.ok, "condition": v.condition,
            "probe": None if v.probe is None else object_json(C, v.probe),
            "morphism": optional_morphism(C, v.morphism), "detail": v.detail}


def cmd_kernel(session: Session, args, opts: Options) -> Report:
    """``kernel u [k]``: check the computed kernel, or the candidate embedding ``k``."""
    name, *cand = args
    C = session.category
    u = session.get_morphism(name)
    if cand:
        k = SubobjectPair(session.get_morphism(cand[0]).source, session.get_morphism(cand[0]))
        if k.embed.target != u.source:
            raise UsageError(f"{cand[0]} must end at the source of {name}")
    else:
        k = C.kernel(u)
    cond = homcheck.kernel_conditions(C, u, k, **_probe_kw(opts))
    exact = homcheck.kernel_exactness(C, u, k, **_probe_kw(opts))
    r = _report(session, "kernel", args)
    r.results = {"kernel": subobject_json(C, k), "conditions": _verdict_json(C, cond),
                 "exactness": _verdict_json(C, exact)}
    r.ok = cond.ok and exact.ok
    return r


def cmd_cokernel(session: Session, args, opts: Options) -> Report:
    """``cokernel u [q]``: check the computed cokernel, or the candidate projection ``q``."""
    name, *cand = args
    C = session.category
    u = session.get_morphism(name)
    if cand:
        q = QuotientPair(session.get_morphism(cand[0]).target, session.get_morphism(cand[0]))
        if q.project.source != u.target:
            raise UsageError(f"{cand[0]} must start at the target of {name}")
    else:
        q = C.cokernel(u)
    cond = homcheck.cokernel_conditions(C, u, q, **_probe_kw(opts))
    exact = homcheck.cokernel_exactness(C, u, q, **_probe_kw(opts))
    r = _report(session, "cokernel", args)
    r.results = {"cokernel": quotient_json(C, q), "conditions": _verdict_json(C, cond),
                 "exactness": _verdict_json(C, exact)}
    r.ok = cond.ok and exact.ok
    return r


def cmd_factor(session: Session, args, opts: Options) -> Report:
    (name,) = args
    C = session.category
    u = session.get_morphism(name)
    r = _report(session, "factor", args)
    r.results = {"morphism": morphism_json(C, u), **factor_json(C, K.canonical_factor(C, u))}
    return r


def _lattice(session: Session, args, which: str) -> Report:
    a, b = args
    C = session.category
    S1, S2 = _subobject(session, a), _subobject(session, b)
    if S1.ambient != S2.ambient:
        raise UsageError(f"{a} and {b} are subobjects of different objects")
    op = K.meet_subobjects if which == "meet" else K.join_subobjects
    res = op(C, S1, S2)
    r = _report(session, which, args)
    r.results = {which: subobject_json(C, res.sub),
                 "mediators": [morphism_json(C, m) for m in res.mediators]}
    return r


def cmd_meet(session, args, opts):
    return _lattice(session, args, "meet")


def cmd_join(session, args, opts):
    return _lattice(session, args, "join")


def _iso_json(C, rep: K.IsoTheoremReport) -> dict:
    return {"morphism": morphism_json(C, rep.morphism), "bijective": rep.bijective,
            "iso": rep.iso, "inverse": optional_morphism(C, rep.inverse)}


def cmd_iso2(session: Session, args, opts: Options) -> Report:
    a, b = args
    C = session.category
    S1, S2 = _subobject(session, a), _subobject(session, b)
    if S1.ambient != S2.ambient:
        raise UsageError(f"{a} and {b} are subobjects of different objects")
    rep = K.second_iso(C, S1.ambient, S1, S2)
    w = rep.witnesses
    r = _report(session, "iso2", args)
    r.results = {**_iso_json(C, rep),
                 "meet": subobject_json(C, w["meet"].sub),
                 "join": subobject_json(C, w["join"].sub),
                 "left_quotient": quotient_json(C, w["left"]),
                 "right_quotient": quotient_json(C, w["right"])}
    r.ok = rep.bijective
    return r


def cmd_iso3(session: Session, args, opts: Options) -> Report:
    b, a = args  # A'' then A'
    C = session.category
    S2 = _subobject(session, b)
    S1 = _subobject(session, a)
    if S1.ambient == S2.sub:
        inner = S1
    elif S1.ambient == S2.ambient:
        w = C.subobject_leq(S1, S2)
        if w is None:
            raise UsageError(f"{a} is not contained in {b}")
        inner = SubobjectPair(S1.sub, w)
    else:
        raise UsageError(f"{a} must be a subobject of {b} or of its ambient object")
    rep = K.third_iso(C, S2.ambient, S2, inner)
    wt = rep.witnesses
    r = _report(session, "iso3", args)
    r.results = {**_iso_json(C, rep),
                 "refinement": morphism_json(C, wt["v"]),
                 "ker_v": subobject_json(C, wt["ker_v"]),
                 "quotient_iso": morphism_json(C, wt["iso"]),
                 "quotient_iso_inverse": morphism_json(C, wt["iso_inverse"])}
    r.ok = rep.bijective
    return r


def cmd_refine(session: Session, args, opts: Options) -> Report:
    a, b = args
    C = session.category
    S1, S2 = _subobject(session, a), _subobject(session, b)
    if S1.ambient != S2.ambient:
        raise UsageError(f"{a} and {b} are subobjects of different objects")
    v = K.refinement(C, S1.ambient, S1, S2)
    r = _report(session, "refine", args)
    r.results = {"refinement": morphism_json(C, v), "surjective": C.is_surjective(v),
                 "strict": K.is_strict(C, v)}
    return r


def cmd_hom(session: Session, args, opts: Options) -> Report:
    a, b = args
    C = session.category
    X, Y = session.get_object(a), session.get_object(b)
    H = homcheck.realize_hom(C, X, Y)
    r = _report(session, "hom", args)
    r.results = {"source": object_json(C, X), "target": object_json(C, Y), "size": H.size,
                 "generators": [{"matrix": g.data.tolist(), "order": n} for g, n in H.basis],
                 "elements": ([m.data.tolist() for m in H] if H.enumerated
                              and H.size <= HOM_LISTING_LIMIT else None)}
    return r


SESSION_COMMANDS = {
    "analyze": (cmd_analyze, 1), "kernel": (cmd_kernel, (1, 2)),
    "cokernel": (cmd_cokernel, (1, 2)),
    "factor": (cmd_factor, 1), "meet": (cmd_meet, 2), "join": (cmd_join, 2),
    "iso2": (cmd_iso2, 2), "iso3": (cmd_iso3, 2), "refine": (cmd_refine, 2), "hom": (cmd_hom, 2),
}


def run(command: str, session: Session, args, opts: Options | None = None) -> Report:
    opts = opts or Options()
    if command not in SESSION_COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    fn, arity = SESSION_COMMANDS[command]
    lo, hi = arity if isinstance(arity, tuple) else (arity, arity)
    if not lo <= len(args) <= hi:
        want = str(lo) if lo == hi else f"{lo} or {hi}"
        raise UsageError(f"{command} takes {want} argument(s), got {len(args)}")
    try:
        return fn(session, list(args), opts)
    except SessionError as exc:
        raise UsageError(exc.message) from None
    except PreconditionError as exc:
        raise UsageError(f"precondition violated: {exc}") from None
