"""Generic constructions over any :class:`~semikern.catcore.Category`.

Everything here uses only the category contract (kernels, cokernels,
biproducts, lift/descend), so the same code runs in every instance and in
dual categories. Each construction follows the universal-property argument
step by step and checks its identities exactly before returning; conclusions
of the form "X and Y are isomorphic" come with witness morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catcore import (
    Category,
    CategoryError,
    EndpointMismatch,
    Morphism,
    PreconditionError,
    QuotientPair,
    SubobjectPair,
    dualize,
    opposite,
)


class ConstructionError(CategoryError):
    """A universal property failed: the instance violates its contract."""


@dataclass(frozen=True)
class FactorizationReport:
    """``u = i' u_bar j'`` through ``Coim(u)`` and ``Im(u)``."""

    u: Morphism
    ker: SubobjectPair
    coker: QuotientPair
    coim: QuotientPair
    im: SubobjectPair
    u_bar: Morphism
    injective: bool
    surjective: bool
    u_bar_bijective: bool
    strict: bool
    u_bar_inverse: Morphism | None

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@dataclass(frozen=True)
class MeetJoinResult:
    sub: SubobjectPair
    mediators: tuple[Morphism, Morphism]


@dataclass(frozen=True)
class IsoTheoremReport:
    morphism: Morphism
    bijective: bool
    inverse: Morphism | None
    witnesses: dict

    @property
    def iso(self) -> bool:
        return self.inverse is not None


def _require(cond: bool, what: str):
    if not cond:
        raise ConstructionError(what)


def image(C: Category, u: Morphism) -> SubobjectPair:
    """``Im(u) = Ker(Coker(u))``."""
    return C.kernel(C.cokernel(u).project)


def coimage(C: Category, u: Morphism) -> QuotientPair:
    """``Coim(u) = Coker(Ker(u))``."""
    return C.cokernel(C.kernel(u).embed)


def canonical_factor(C: Category, u: Morphism) -> FactorizationReport:
    ker = C.kernel(u)
    coker = C.cokernel(u)
    coim = C.cokernel(ker.embed)
    im = C.kernel(coker.project)
    # u kills Ker(u), so it factors through the cokernel of the kernel: u = v j'
    v = C.descend(u, coim.project)
    _require(v is not None and C.compose(v, coim.project) == u,
             "u does not factor through its coimage")
    # j u = 0 and j' is surjective, so j v = 0 and v factors through Im(u): v = i' u_bar
    _require(C.is_zero(C.compose(coker.project, v)), "Coker(u) does not kill v")
    u_bar = C.lift(v, im.embed)
    _require(u_bar is not None, "v does not factor through the image")
    _require(C.compose(im.embed, C.compose(u_bar, coim.project)) == u,
             "u != i' u_bar j'")
    inv = C.is_isomorphism(u_bar)
    return FactorizationReport(
        u=u, ker=ker, coker=coker, coim=coim, im=im, u_bar=u_bar,
        injective=C.is_zero_object(ker.sub),
        surjective=C.is_zero_object(coker.quot),
        u_bar_bijective=C.is_bijective(u_bar),
        strict=inv is not None,
        u_bar_inverse=inv,
    )


def is_strict(C: Category, u: Morphism) -> bool:
    return canonical_factor(C, u).strict


def orthogonality_check(C: Category, u: Morphism, v: Morphism) -> tuple[bool, bool, bool]:
    """Evaluate ``v u = 0``, ``Im(u) <= Ker(v)`` and ``Coim(v) <= Coker(u)`` separately."""
    C.check_composable(v, u)
    a = C.is_zero(C.compose(v, u))
    b = C.subobject_leq(image(C, u), C.kernel(v)) is not None
    c = C.quotient_leq(coimage(C, v), C.cokernel(u)) is not None
    return a, b, c


def require_strict_subobject(C: Category, S: SubobjectPair, what: str = "subobject"):
    if not C.is_injective(S.embed):
        raise PreconditionError(f"{what} embedding is not injective")
    if not is_strict(C, S.embed):
        raise PreconditionError(f"{what} is not strict")


def quotient_by(C: Category, S: SubobjectPair, check: bool = True) -> QuotientPair:
    """``A / A'`` for a strict subobject ``A'`` of ``A``."""
    if check:
        require_strict_subobject(C, S)
    Q = C.cokernel(S.embed)
    _require(C.subobjects_equal(C.kernel(Q.project), S), "Ker(A -> A/A') != A'")
    return Q


def meet_subobjects(C: Category, S1: SubobjectPair, S2: SubobjectPair,
                    check: bool = True) -> MeetJoinResult:
    """Infimum of two strict subobjects via ``Ker(j' i'')``.

    ``j' = Coker(i')``, ``v = j' i''``; the meet is ``Ker(v)`` embedded by
    ``i'' i``. The mediator into ``A'`` exists because ``j'`` kills ``i'' i``
    and ``A'`` is the kernel of ``j'``.
    """
    if S1.ambient != S2.ambient:
        raise EndpointMismatch("subobjects of different objects")
    if check:
        require_strict_subobject(C, S1, "first subobject")
        require_strict_subobject(C, S2, "second subobject")
    if C.is_zero_object(S1.sub) or C.is_zero_object(S2.sub):
        Z = C.zero_subobject(S1.ambient)
        return MeetJoinResult(Z, (C.zero_morphism(Z.sub, S1.sub), C.zero_morphism(Z.sub, S2.sub)))
    j1 = C.cokernel(S1.embed).project
    v = C.compose(j1, S2.embed)
    K = C.kernel(v)
    embed = C.compose(S2.embed, K.embed)
    _require(C.is_zero(C.compose(j1, embed)), "j' does not kill the meet")
    w = C.lift(embed, S1.embed)
    _require(w is not None, "meet does not factor through A'")
    return MeetJoinResult(SubobjectPair(K.sub, embed), (w, K.embed))


def join_subobjects(C: Category, S1: SubobjectPair, S2: SubobjectPair,
                    check: bool = True) -> MeetJoinResult:
    """Supremum as the image of ``[i' i''] : A' x A'' -> A``."""
    if S1.ambient != S2.ambient:
        raise EndpointMismatch("subobjects of different objects")
    if check:
        require_strict_subobject(C, S1, "first subobject")
        require_strict_subobject(C, S2, "second subobject")
    b = C.biproduct(S1.sub, S2.sub)
    pair = C.add(C.compose(S1.embed, b.p_A), C.compose(S2.embed, b.p_B))
    J = image(C, pair)
    w1 = C.lift(S1.embed, J.embed)
    w2 = C.lift(S2.embed, J.embed)
    _require(w1 is not None and w2 is not None, "inputs do not factor through the join")
    return MeetJoinResult(J, (w1, w2))


def join_via_dual(C: Category, S1: SubobjectPair, S2: SubobjectPair) -> SubobjectPair:
    """The join read off the opposite category.

    The cokernels of the two embeddings are subobjects of ``A`` in the dual;
    their meet there is a quotient of ``A``, whose kernel is the join.
    """
    D = dualize(C)
    Q1, Q2 = C.cokernel(S1.embed), C.cokernel(S2.embed)
    M = meet_subobjects(D, opposite(Q1), opposite(Q2))
    return C.kernel(opposite(M.sub).project)


def refinement(C: Category, A, S1: SubobjectPair, S2: SubobjectPair,
               check: bool = True) -> Morphism:
    """The surjection ``A/A' -> A/A''`` for strict ``A' <= A''``, with ``v j' = j''``."""
    if S1.ambient != A or S2.ambient != A:
        raise EndpointMismatch("subobjects are not subobjects of A")
    if check:
        require_strict_subobject(C, S1, "A'")
        require_strict_subobject(C, S2, "A''")
    if C.subobject_leq(S1, S2) is None:
        raise PreconditionError("A' <= A'' does not hold")
    j1 = C.cokernel(S1.embed).project
    j2 = C.cokernel(S2.embed).project
    v = C.descend(j2, j1)
    _require(v is not None and C.compose(v, j1) == j2, "j'' does not factor through j'")
    return v


def second_iso(C: Category, A, S1: SubobjectPair, S2: SubobjectPair,
               check: bool = True) -> IsoTheoremReport:
    """The bijective morphism ``A''/(A' meet A'') -> (A' join A'')/A'``.

    Built as the canonical factor of ``u = l k`` where ``k: A'' -> A' join A''``
    and ``l`` is the quotient of the join by ``A'``, both read inside the join.
    """
    if S1.ambient != A or S2.ambient != A:
        raise EndpointMismatch("subobjects are not subobjects of A")
    if check:
        require_strict_subobject(C, S1, "A'")
        require_strict_subobject(C, S2, "A''")
    J = join_subobjects(C, S1, S2, check=False)
    M = meet_subobjects(C, S1, S2, check=False)
    a1, k = J.mediators  # A' -> join, A'' -> join
    ell = C.cokernel(a1).project
    u = C.compose(ell, k)
    f = canonical_factor(C, u)
    # source: A''/(A' meet A'') and Coim(u) are the same quotient of A''
    meet_in_S2 = SubobjectPair(M.sub.sub, M.mediators[1])
    left = C.cokernel(meet_in_S2.embed)
    theta = C.quotient_leq(f.coim, left)  # theta left.project = coim.project
    theta_back = C.quotient_leq(left, f.coim)
    _require(theta is not None and theta_back is not None,
             "Coim(u) != A''/(A' meet A'')")
    # target: Im(u) embeds into (A' join A'')/A' by a bijection
    phi = C.compose(f.im.embed, C.compose(f.u_bar, theta))
    bij = C.is_bijective(phi)
    return IsoTheoremReport(
        morphism=phi, bijective=bij, inverse=C.is_isomorphism(phi),
        witnesses={"join": J, "meet": M, "u": u, "factor": f,
                   "left": left, "right": QuotientPair(ell.target, ell)},
    )


def third_iso(C: Category, A, S2: SubobjectPair, S1_in_S2: SubobjectPair,
              check: bool = True) -> IsoTheoremReport:
    """``A''/A' -> Ker(v)`` bijective and ``(A/A')/Ker(v) = A/A''``.

    ``S2 = (A'', i'')`` is a strict subobject of ``A`` and ``S1_in_S2 =
    (A', i)`` a strict subobject of ``A''``; ``v: A/A' -> A/A''`` is the
    refinement map.
    """
    if S2.ambient != A or S1_in_S2.ambient != S2.sub:
        raise EndpointMismatch("expected A' <= A'' <= A")
    if check:
        require_strict_subobject(C, S2, "A''")
        require_strict_subobject(C, S1_in_S2, "A'")
    i2, i = S2.embed, S1_in_S2.embed
    S1 = SubobjectPair(S1_in_S2.sub, C.compose(i2, i))
    if check:
        require_strict_subobject(C, S1, "A' in A")
    j1 = C.cokernel(S1.embed).project
    v = refinement(C, A, S1, S2, check=False)
    alpha = C.compose(j1, i2)
    ker_alpha = C.kernel(alpha)
    _require(C.subobjects_equal(image(C, i), ker_alpha), "Im(i) != Ker(alpha)")
    ker_v = C.kernel(v)
    fa = canonical_factor(C, alpha)
    im_to_kv = C.subobject_leq(fa.im, ker_v)
    _require(im_to_kv is not None and C.subobject_leq(ker_v, fa.im) is not None,
             "Im(alpha) != Ker(v)")
    # A''/A' and Coim(alpha) are the same quotient of A''
    q = C.cokernel(i)
    theta = C.quotient_leq(fa.coim, q)
    _require(theta is not None and C.quotient_leq(q, fa.coim) is not None,
             "Coim(alpha) != A''/A'")
    phi = C.compose(im_to_kv, C.compose(fa.u_bar, theta))
    c = C.cokernel(ker_v.embed).project  # A/A' -> (A/A')/Ker(v)
    w = C.descend(v, c)
    w_inv = C.descend(c, v)
    _require(w is not None and w_inv is not None, "(A/A')/Ker(v) and A/A'' not comparable")
    _require(C.compose(w_inv, w) == C.identity(w.source)
             and C.compose(w, w_inv) == C.identity(w.target),
             "witnesses do not compose to identities")
    return IsoTheoremReport(
        morphism=phi, bijective=C.is_bijective(phi), inverse=C.is_isomorphism(phi),
        witnesses={"v": v, "alpha": alpha, "ker_v": ker_v, "iso": w, "iso_inverse": w_inv,
                   "A1": S1, "A_over_A1": QuotientPair(j1.target, j1)},
    )
