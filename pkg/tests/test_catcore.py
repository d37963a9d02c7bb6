import itertools
import random

import pytest

from semikern.catcore import (
    Dual,
    EndpointMismatch,
    InvalidMorphism,
    SubobjectPair,
    dualize,
    flip,
    opposite,
)
from semikern.exactlin import Matrix
from semikern.instances import Finab, Vect, decorate

from oracles import kernel_set

V2 = Vect(2)
G = Finab()
L2 = decorate(V2, "lintop")


def vm(rows, cols=None, C=V2):
    data = Matrix.from_rows(rows, cols)
    return C.morphism(C.obj(data.cols), C.obj(data.rows), data)


def small_vect_morphisms(C=V2, max_dim=2):
    objs = [C.obj(d) for d in range(max_dim + 1)]
    for A, B in itertools.product(objs, repeat=2):
        yield from C.hom_elements(A, B)


# -- composition and Hom groups -----------------------------------------------

def test_compose_examples():
    u = vm([[1, 0], [0, 1]])
    v = vm([[1, 1]])
    assert V2.compose(v, u) == v
    assert V2.compose(V2.identity(v.target), v) == v
    assert V2.is_zero(V2.compose(V2.zero_morphism(v.target, v.target), v))


def test_compose_rejects_mismatched_endpoints():
    with pytest.raises(EndpointMismatch):
        V2.compose(vm([[1, 1]]), vm([[1]]))


def test_hom_group_examples():
    u = vm([[1, 1], [0, 1]])
    z = V2.zero_morphism(u.source, u.target)
    assert V2.add(u, V2.neg(u)) == z
    assert V2.add(z, u) == u
    assert V2.add(u, u) == z  # characteristic 2


def test_add_rejects_non_parallel():
    with pytest.raises(EndpointMismatch):
        V2.add(vm([[1, 1]]), vm([[1]]))


def test_invalid_morphisms_are_rejected():
    with pytest.raises(InvalidMorphism):
        V2.morphism(V2.obj(2), V2.obj(1), [[1, 1, 1]])
    with pytest.raises(InvalidMorphism):
        G.morphism(G.obj(2), G.obj(4), [[1]])


def test_abelian_group_laws_and_bilinearity_exhaustive():
    objs = [V2.obj(d) for d in range(3)]
    for A, B in itertools.product(objs, repeat=2):
        H = list(V2.hom_elements(A, B))
        z = V2.zero_morphism(A, B)
        for f, g in itertools.product(H, repeat=2):
            assert V2.add(f, g) == V2.add(g, f)
            assert V2.add(f, z) == f
            assert V2.add(f, V2.neg(f)) == z
            for h in H:
                assert V2.add(V2.add(f, g), h) == V2.add(f, V2.add(g, h))
        for C in objs:
            Hc = list(V2.hom_elements(B, C))
            for f, g in itertools.product(H, repeat=2):
                for v in Hc:
                    assert V2.compose(v, V2.add(f, g)) == V2.add(V2.compose(v, f), V2.compose(v, g))
            Hx = list(V2.hom_elements(C, A))
            for x in Hx:
                for f, g in itertools.product(H, repeat=2):
                    assert V2.compose(V2.add(f, g), x) == V2.add(V2.compose(f, x), V2.compose(g, x))


# -- kernels and cokernels ---------------------------------------------------------

def test_vect_kernel_example():
    K = V2.kernel(vm([[1, 1]]))
    assert K.sub == V2.obj(1)
    assert K.embed.data.tolist() == [[1], [1]]
    assert {(1, 1), (0, 0)} == kernel_set([[1, 1]], (2, 2), (2,))


def test_identity_has_zero_kernel_and_cokernel():
    for C, A in [(V2, V2.obj(2)), (G, G.obj(2, 4)), (L2, L2.chaotic(V2.obj(2)))]:
        u = C.identity(A)
        assert C.is_zero_object(C.kernel(u).sub)
        assert C.is_zero_object(C.cokernel(u).quot)


def test_finab_kernel_and_cokernel_examples():
    u = G.morphism(G.obj(2), G.obj(4), [[2]])
    assert G.is_zero_object(G.kernel(u).sub)
    assert G.cokernel(u).quot == G.obj(2)
    w = G.morphism(G.obj(4), G.obj(2), [[1]])
    K = G.kernel(w)
    assert K.sub == G.obj(2) and K.embed.data.tolist() == [[2]]
    assert G.is_zero_object(G.cokernel(w).quot)


def test_cokernel_of_zero_is_identity():
    A, B = V2.obj(1), V2.obj(2)
    Q = V2.cokernel(V2.zero_morphism(A, B))
    assert Q.quot == B and Q.project == V2.identity(B)


def test_composites_with_kernel_and_cokernel_vanish():
    rng = random.Random(5)
    for C in (V2, Vect(3), G, L2, decorate(G)):
        for _ in range(40):
            A, B = C.random_object(rng, 3), C.random_object(rng, 3)
            u = C.random_morphism(rng, A, B)
            assert C.is_zero(C.compose(u, C.kernel(u).embed))
            assert C.is_zero(C.compose(C.cokernel(u).project, u))


# -- biproducts ----------------------------------------------------------------

@pytest.mark.parametrize("C", [V2, Vect(3), G, L2, decorate(G)], ids=lambda c: c.name)
def test_biproduct_identities(C):
    rng = random.Random(11)
    for _ in range(25):
        A, B = C.random_object(rng, 2), C.random_object(rng, 2)
        b = C.biproduct(A, B)
        assert C.compose(b.p_A, b.q_A) == C.identity(A)
        assert C.compose(b.p_B, b.q_B) == C.identity(B)
        assert C.is_zero(C.compose(b.p_A, b.q_B)) and C.is_zero(C.compose(b.p_B, b.q_A))
        assert C.add(C.compose(b.q_A, b.p_A), C.compose(b.q_B, b.p_B)) == C.identity(b.object)


def test_vect_biproduct_dimension_and_zero_factor():
    b = V2.biproduct(V2.obj(2), V2.obj(1))
    assert b.object.dim == 3
    b0 = V2.biproduct(V2.obj(2), V2.zero_object())
    assert V2.is_isomorphism(b0.p_A) is not None


def test_finab_biproduct_is_reduced_to_invariant_factors():
    assert G.biproduct(G.obj(2), G.obj(3)).object == G.obj(6)
    assert G.biproduct(G.obj(2, 4), G.obj(2)).object == G.obj(2, 2, 4)


# -- zero objects, isomorphisms, mono/epi ----------------------------------------

def test_zero_object_detection():
    assert V2.is_zero_object(V2.obj(0))
    assert not V2.is_zero_object(V2.obj(1))
    assert G.is_zero_object(G.obj())


def test_is_isomorphism_with_witness():
    A = V2.obj(2)
    inv = V2.is_isomorphism(V2.identity(A))
    assert inv == V2.identity(A)
    u = vm([[1, 1], [0, 1]])
    w = V2.is_isomorphism(u)
    assert V2.compose(u, w) == V2.identity(A) and V2.compose(w, u) == V2.identity(A)
    assert V2.is_isomorphism(vm([[1, 1], [1, 1]])) is None
    X = V2.obj(2)
    f = L2.morphism(L2.discrete(X), L2.chaotic(X), [[1, 0], [0, 1]])
    assert L2.is_isomorphism(f) is None


def test_mono_epi_flags():
    X = V2.obj(2)
    f = L2.morphism(L2.discrete(X), L2.chaotic(X), [[1, 0], [0, 1]])
    assert L2.is_bijective(f)
    assert not V2.is_injective(V2.zero_morphism(V2.obj(1), V2.obj(2)))
    s = vm([[1, 1]])
    assert V2.is_surjective(s) and not V2.is_injective(s)


# -- subobject and quotient preorders ------------------------------------------------

def test_subobject_leq_examples():
    A = V2.obj(2)
    S = V2.as_subobject(vm([[1], [0]]))
    assert V2.subobject_leq(S, S) == V2.identity(S.sub)
    assert V2.subobject_leq(V2.zero_subobject(A), S) is not None
    T = V2.as_subobject(vm([[0], [1]]))
    assert V2.subobject_leq(S, T) is None


def test_subobject_leq_needs_common_ambient():
    with pytest.raises(EndpointMismatch):
        V2.subobject_leq(V2.full_subobject(V2.obj(1)), V2.full_subobject(V2.obj(2)))


def test_kernel_grows_under_composition():
    rng = random.Random(3)
    for C in (V2, G, L2):
        for _ in range(40):
            A, B, D = (C.random_object(rng, 2) for _ in range(3))
            u, v = C.random_morphism(rng, A, B), C.random_morphism(rng, B, D)
            ku, kvu = C.kernel(u), C.kernel(C.compose(v, u))
            assert C.subobject_leq(ku, kvu) is not None
            if C.is_injective(v):
                assert C.subobjects_equal(ku, kvu)
            cv, cvu = C.cokernel(v), C.cokernel(C.compose(v, u))
            assert C.quotient_leq(cv, cvu) is not None
            if C.is_surjective(u):
                assert C.quotients_equal(cv, cvu)


def test_subobject_order_reverses_on_cokernels():
    for C, A in [(V2, V2.obj(2)), (G, G.obj(2, 4)), (L2, L2.obj(V2.obj(2), V2.sub_span(V2.obj(2), [[1, 1]])))]:
        base = getattr(C, "base", C)
        bA = getattr(A, "base", A)
        subs = [C.induced(base.embedding(S).embed, A) if base is not C else base.embedding(S)
                for S in base.all_subs(bA)]
        for S1, S2 in itertools.product(subs, repeat=2):
            if C.subobject_leq(S1, S2) is not None:
                assert C.quotient_leq(C.cokernel(S2.embed), C.cokernel(S1.embed)) is not None


def test_kernel_iso_forces_zero_morphism():
    for u in small_vect_morphisms():
        if V2.is_isomorphism(V2.kernel(u).embed) is not None:
            assert V2.is_zero(u)


# -- duals -----------------------------------------------------------------------

def test_dual_swaps_kernels_and_cokernels():
    D = dualize(V2)
    u = vm([[1, 1]])
    ud = flip(u)
    K = D.kernel(ud)
    Q = V2.cokernel(u)
    assert K.sub == Q.quot and flip(K.embed) == Q.project
    assert D.is_injective(ud) == V2.is_surjective(u)
    assert D.is_surjective(ud) == V2.is_injective(u)


def test_double_dual_agrees_with_base():
    DD = Dual(Dual(V2))
    for u in small_vect_morphisms():
        assert DD.kernel(u) == V2.kernel(u)
        assert DD.cokernel(u) == V2.cokernel(u)
        assert DD.is_isomorphism(u) == V2.is_isomorphism(u)


def test_dual_invariants_hold():
    rng = random.Random(7)
    for C in (dualize(V2), dualize(G), dualize(L2)):
        for _ in range(30):
            A, B = C.random_object(rng, 2), C.random_object(rng, 2)
            u = C.random_morphism(rng, A, B)
            assert C.is_zero(C.compose(u, C.kernel(u).embed))
            assert C.is_zero(C.compose(C.cokernel(u).project, u))
            b = C.biproduct(A, B)
            assert C.compose(b.p_A, b.q_A) == C.identity(A)
            assert C.add(C.compose(b.q_A, b.p_A), C.compose(b.q_B, b.p_B)) == C.identity(b.object)


def test_opposite_round_trips():
    S = V2.as_subobject(vm([[1], [0]]))
    assert opposite(opposite(S)) == S
    assert isinstance(opposite(opposite(S)), SubobjectPair)


def test_hom_elements_are_complete_and_distinct():
    A, B = V2.obj(1), V2.obj(2)
    H = list(V2.hom_elements(A, B))
    assert len(H) == len(set(H)) == 4
    assert G.hom_size(G.obj(2), G.obj(4)) == 2
