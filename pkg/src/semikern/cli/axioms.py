"""The axiom suite behind ``semikern check-axioms``.

Random phase: for each sample draw objects ``A, B, C, X`` and morphisms
``u: A -> B``, ``v: B -> C``, ``f, g: A -> B``, ``x: X -> A`` and check the
preadditive laws, biproduct identities, kernel and cokernel universal
properties over the probe family, the canonical factorization and its
bijectivity, strictness of kernel and cokernel legs, and the order-theoretic
facts about kernels, cokernels, images and coimages.

Exhaustive phase: every morphism between objects of size at most
``exhaustive_dim`` is factored; any non-strict one is a witness that the
instance is not abelian.
"""

from __future__ import annotations

import random
import traceback

from .. import constructions as K
from .. import homcheck
from ..catcore import Category, Morphism
from .report import Report, category_json, morphism_json
from .sampling import all_morphisms, enumerate_objects, witness_session
from .session import emit_session

MAX_LISTED_FAILURES = 10

CHECKS = (
    "preadditive", "zero_object", "biproduct", "kernel_universal", "cokernel_universal",
    "factorization", "u_bar_bijective", "strict_legs", "mono_coimage", "epi_image",
    "kernel_monotone", "cokernel_monotone", "order_reversal", "orthogonality",
    "strict_roundtrip", "zero_kernel",
)


class _Tally:
    def __init__(self, kind, p):
        self.kind, self.p = kind, p
        self.counts = {c: [0, 0] for c in CHECKS}
        self.failures = []

    def record(self, check: str, ok: bool, morphisms: dict[str, Morphism], detail: str = ""):
        self.counts[check][0 if ok else 1] += 1
        if not ok and len(self.failures) < MAX_LISTED_FAILURES:
            try:
                text = emit_session(witness_session(self.kind, self.p, morphisms))
            except Exception:  # the reproducer is best-effort, the failure is not
                text = None
            self.failures.append({"check": check, "detail": detail, "session": text})

    def run(self, check: str, fn, morphisms: dict[str, Morphism]):
        try:
            ok = bool(fn())
            detail = ""
        except Exception as exc:
            ok = False
            detail = f"{type(exc).__name__}: {exc}"
            if not str(exc):
                detail += " " + traceback.format_exc(limit=2).splitlines()[-1]
        self.record(check, ok, morphisms, detail)


def _preadditive(C: Category, u, f, g, v, x) -> bool:
    add, comp, z = C.add, C.compose, C.zero_morphism(u.source, u.target)
    return all([
        add(f, g) == add(g, f),
        add(add(f, g), u) == add(f, add(g, u)),
        add(f, z) == f,
        add(f, C.neg(f)) == z,
        comp(v, add(f, g)) == add(comp(v, f), comp(v, g)),
        comp(add(f, g), x) == add(comp(f, x), comp(g, x)),
        comp(comp(v, u), x) == comp(v, comp(u, x)),
        comp(u, C.identity(u.source)) == u == comp(C.identity(u.target), u),
    ])


def _zero_object(C: Category, A) -> bool:
    Z = C.zero_object()
    return (C.is_zero_object(Z) and C.hom_size(Z, A) == 1 and C.hom_size(A, Z) == 1
            and C.is_zero_object(A) == (C.identity(A) == C.zero_morphism(A, A)))


def _biproduct(C: Category, rng, A, B, X) -> bool:
    b = C.biproduct(A, B)
    comp, add = C.compose, C.add
    ident = [
        comp(b.p_A, b.q_A) == C.identity(A), comp(b.p_B, b.q_B) == C.identity(B),
        C.is_zero(comp(b.p_A, b.q_B)), C.is_zero(comp(b.p_B, b.q_A)),
        add(comp(b.q_A, b.p_A), comp(b.q_B, b.p_B)) == C.identity(b.object),
    ]
    f1, g1 = C.random_morphism(rng, X, A), C.random_morphism(rng, X, B)
    h = add(comp(b.q_A, f1), comp(b.q_B, g1))
    f2, g2 = C.random_morphism(rng, A, X), C.random_morphism(rng, B, X)
    k = add(comp(f2, b.p_A), comp(g2, b.p_B))
    universal = [comp(b.p_A, h) == f1, comp(b.p_B, h) == g1,
                 comp(k, b.q_A) == f2, comp(k, b.q_B) == g2]
    return all(ident) and all(universal)


def _mono_coimage(C, u):
    f = K.canonical_factor(C, u)
    return (not f.injective) or C.is_isomorphism(f.coim.project) is not None


def _epi_image(C, u):
    f = K.canonical_factor(C, u)
    return (not f.surjective) or C.is_isomorphism(f.im.embed) is not None


def _kernel_monotone(C, u, v):
    ku, kvu = C.kernel(u), C.kernel(C.compose(v, u))
    if C.subobject_leq(ku, kvu) is None:
        return False
    return (not C.is_injective(v)) or C.subobjects_equal(ku, kvu)


def _cokernel_monotone(C, u, v):
    cv, cvu = C.cokernel(v), C.cokernel(C.compose(v, u))
    if C.quotient_leq(cv, cvu) is None:
        return False
    return (not C.is_surjective(u)) or C.quotients_equal(cv, cvu)


def _order_reversal(C, u, v):
    # Ker(u) <= Ker(vu) reverses to their cokernels, and dually for quotients
    S1, S2 = C.kernel(u), C.kernel(C.compose(v, u))
    a = C.quotient_leq(C.cokernel(S2.embed), C.cokernel(S1.embed)) is not None
    Q1, Q2 = C.cokernel(v), C.cokernel(C.compose(v, u))
    b = C.subobject_leq(C.kernel(Q2.project), C.kernel(Q1.project)) is not None
    return a and b


def _orthogonality(C, u, v):
    a, b, c = K.orthogonality_check(C, u, v)
    j = C.cokernel(u).project
    return a == b == c and all(K.orthogonality_check(C, u, j))


def _strict_roundtrip(C, u):
    k, q = C.kernel(u), C.cokernel(u)
    return (C.subobjects_equal(C.kernel(C.cokernel(k.embed).project), k)
            and C.quotients_equal(C.cokernel(C.kernel(q.project).embed), q))


def _zero_kernel(C, u):
    z = C.zero_morphism(u.source, u.target)
    ok_zero = C.is_isomorphism(C.kernel(z).embed) is not None
    return ok_zero and ((C.is_isomorphism(C.kernel(u).embed) is None) or C.is_zero(u))


def check_axioms(C: Category, kind: str, p: int | None, *, seed: int = 0, samples: int = 300,
                 max_dim: int = 2, paranoid: bool = False,
                 exhaustive_dim: int | None = None) -> Report:
    rng = random.Random(seed)
    T = _Tally(kind, p)
    probe_kw = {"paranoid": paranoid, "rng": random.Random(seed + 1), "max_dim": max_dim}
    nonstrict = None
    for _ in range(samples):
        A, B, D, X = (C.random_object(rng, max_dim) for _ in range(4))
        u = C.random_morphism(rng, A, B)
        v = C.random_morphism(rng, B, D)
        f, g = C.random_morphism(rng, A, B), C.random_morphism(rng, A, B)
        x = C.random_morphism(rng, X, A)
        ms = {"u": u, "v": v}
        T.run("preadditive", lambda: _preadditive(C, u, f, g, v, x),
              {"u": u, "f": f, "g": g, "v": v, "x": x})
        T.run("zero_object", lambda: _zero_object(C, A), {"u": u})
        T.run("biproduct", lambda: _biproduct(C, rng, A, B, X), {"u": u})
        T.run("kernel_universal",
              lambda: homcheck.kernel_conditions(C, u, C.kernel(u), **probe_kw), {"u": u})
        T.run("cokernel_universal",
              lambda: homcheck.cokernel_conditions(C, u, C.cokernel(u), **probe_kw), {"u": u})
        fac = None
        try:
            fac = K.canonical_factor(C, u)
            T.record("factorization", True, ms)
        except Exception as exc:
            T.record("factorization", False, {"u": u}, f"{type(exc).__name__}: {exc}")
        if fac is not None:
            T.record("u_bar_bijective", fac.u_bar_bijective, {"u": u})
            if not fac.strict and nonstrict is None:
                nonstrict = u
        T.run("strict_legs", lambda: K.is_strict(C, C.kernel(u).embed)
              and K.is_strict(C, C.cokernel(u).project), {"u": u})
        T.run("mono_coimage", lambda: _mono_coimage(C, u), {"u": u})
        T.run("epi_image", lambda: _epi_image(C, u), {"u": u})
        T.run("kernel_monotone", lambda: _kernel_monotone(C, u, v), ms)
        T.run("cokernel_monotone", lambda: _cokernel_monotone(C, u, v), ms)
        T.run("order_reversal", lambda: _order_reversal(C, u, v), ms)
        T.run("orthogonality", lambda: _orthogonality(C, u, v), ms)
        T.run("strict_roundtrip", lambda: _strict_roundtrip(C, u), {"u": u})
        T.run("zero_kernel", lambda: _zero_kernel(C, u), {"u": u})

    if exhaustive_dim is None:
        exhaustive_dim = min(max_dim, 2 if kind in ("vect", "lintop") else 1)
    n_exhaustive = 0
    for u in all_morphisms(C, exhaustive_dim):
        n_exhaustive += 1
        try:
            fac = K.canonical_factor(C, u)
        except Exception as exc:
            T.record("factorization", False, {"u": u}, f"{type(exc).__name__}: {exc}")
            continue
        T.record("factorization", True, {"u": u})
        T.record("u_bar_bijective", fac.u_bar_bijective, {"u": u})
        if not fac.strict and nonstrict is None:
            nonstrict = u

    witness = None
    if nonstrict is not None:
        fac = K.canonical_factor(C, nonstrict)
        witness = {"morphism": morphism_json(C, nonstrict),
                   "u_bar": morphism_json(C, fac.u_bar),
                   "session": emit_session(witness_session(kind, p, {"u": nonstrict})),
                   "replay": "factor u"}
    semiabelian = all(T.counts[c][1] == 0 for c in CHECKS)
    r = Report("check-axioms", [], category_json(C, kind, p))
    r.results = {
        "seed": seed, "samples": samples, "max_dim": max_dim, "paranoid": paranoid,
        "exhaustive": {"max_dim": exhaustive_dim, "morphisms": n_exhaustive,
                       "objects": len(enumerate_objects(C, exhaustive_dim))},
        "checks": {c: {"passed": T.counts[c][0], "failed": T.counts[c][1]} for c in CHECKS},
        "failures": T.failures,
        "semiabelian": semiabelian,
        "abelian": semiabelian and witness is None,
        "non_abelian_witness": witness,
    }
    r.ok = semiabelian
    return r
