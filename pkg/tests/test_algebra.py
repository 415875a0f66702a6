import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieindex.algebra import (
    LieAlgebra,
    SeriesKind,
    TriBool,
    abelian,
    classify_basic,
    direct_sum,
    is_isomorphic,
    quotient,
    subalgebra_algebra,
    subquotient,
    validate_algebra,
    verify_isomorphism,
)
from lieindex.catalog import affine2, heisenberg3, nilp4, sl2, so3q
from lieindex.errors import DuplicatePair, FieldMismatch, IndexOutOfRange, JacobiViolation, NotAnIdeal
from lieindex.fields import GF, Q
from lieindex.linalg import enumerate_subspaces
from lieindex.randomgen import random_algebra

from .conftest import small_algebras, subspaces


def brute_centralizer(L, s):
    return {v for v in L.full().vectors() if all(not any(L.bracket(v, b)) for b in s.basis)}


def brute_idealizer(L, s):
    return {v for v in L.full().vectors() if all(s.contains(L.bracket(v, b)) for b in s.basis)}


def test_jacobi_violation_names_triple():
    # [x,y]=x, [y,z]=x, [x,z]=y fails Jacobi
    with pytest.raises(JacobiViolation) as info:
        LieAlgebra(Q, 3, {(0, 1): (1, 0, 0), (1, 2): (1, 0, 0), (0, 2): (0, 1, 0)}, ["x", "y", "z"])
    assert info.value.names == ("x", "y", "z")
    assert info.value.triple == (0, 1, 2)
    assert "x, y, z" in str(info.value)


def test_validate_rejects_malformed_tables():
    with pytest.raises(DuplicatePair):
        validate_algebra([(0, 1, (0, 1)), (0, 1, (0, 1))], Q, 2)
    with pytest.raises(DuplicatePair):
        validate_algebra([(1, 0, (0, 1))], Q, 2)
    with pytest.raises(IndexOutOfRange):
        validate_algebra([(0, 2, (0, 1))], Q, 2)
    L = validate_algebra([(0, 1, (0, 1))], GF(3), 2, ["x", "y"])
    assert L == affine2(GF(3))


@given(small_algebras(), st.data())
def test_bracket_is_bilinear_and_alternating(L, data):
    n = L.dim
    x = data.draw(st.tuples(*[st.integers(0, L.field.p - 1)] * n))
    y = data.draw(st.tuples(*[st.integers(0, L.field.p - 1)] * n))
    assert not any(L.bracket(x, x))
    neg = tuple((-c) % L.field.p for c in L.bracket(y, x))
    assert L.bracket(x, y) == neg
    z = tuple((a + b) % L.field.p for a, b in zip(x, y))
    lhs = L.bracket(z, y)
    assert lhs == L.bracket(x, y)


@given(small_algebras())
def test_ad_matrix_columns(L):
    x = L.basis_vector(0)
    A = L.ad_matrix(x)
    for j in range(L.dim):
        assert tuple(A[i][j] for i in range(L.dim)) == L.bracket(x, L.basis_vector(j))


@given(small_algebras(), st.data())
def test_closure_is_idempotent_subalgebra(L, data):
    s = data.draw(subspaces(L.field, L.dim))
    c = L.closure(s)
    assert s <= c and L.is_subalgebra(c) and L.closure(c) == c


@given(small_algebras(), st.data())
def test_centralizer_and_idealizer_match_brute_force(L, data):
    s = data.draw(subspaces(L.field, L.dim))
    assert set(L.centralizer(s).vectors()) == brute_centralizer(L, s)
    assert set(L.idealizer(s).vectors()) == brute_idealizer(L, s)


@given(small_algebras(), st.data())
def test_core_is_largest_contained_ideal(L, data):
    s = data.draw(subspaces(L.field, L.dim))
    k = L.core(s)
    assert k <= s and L.is_ideal(k)
    for I in enumerate_subspaces(L.dim, L.field):
        if I <= s and L.is_ideal(I):
            assert I <= k


def test_series_examples():
    N = nilp4(GF(3))
    assert N.series(SeriesKind.DERIVED).dims == (4, 2, 0)
    assert N.series(SeriesKind.LOWER_CENTRAL).dims == (4, 2, 1, 0)
    assert N.series("derived").stable_term.is_zero
    S = sl2(GF(5))
    assert S.series(SeriesKind.DERIVED).dims == (3,)


def test_classify_basic_examples():
    assert classify_basic(heisenberg3(GF(2))).nilpotent
    f = classify_basic(affine2(Q))
    assert f.solvable and not f.nilpotent and f.completely_solvable
    f = classify_basic(so3q())
    assert not (f.abelian or f.nilpotent or f.solvable or f.completely_solvable)


def test_killing_form_so3q_is_negative_definite():
    K = so3q().killing_form()
    assert K == [[-2, 0, 0], [0, -2, 0], [0, 0, -2]]


def test_quotient_and_lift():
    H = heisenberg3(GF(3))
    Z = H.center()
    qm = quotient(H, Z)
    assert qm.quotient.dim == 2 and not qm.quotient.table
    v = (1, 2, 1)
    assert qm.project(qm.lift(qm.project(v))) == qm.project(v)
    assert qm.preimage(qm.quotient.zero()) == Z
    with pytest.raises(NotAnIdeal):
        quotient(H, H.span([(1, 0, 0)]))


@given(small_algebras(), st.data())
def test_quotient_projection_is_a_homomorphism(L, data):
    ideals = [I for I in enumerate_subspaces(L.dim, L.field) if L.is_ideal(I)]
    I = data.draw(st.sampled_from(ideals))
    qm = quotient(L, I)
    for a, b in itertools.combinations(range(L.dim), 2):
        x, y = L.basis_vector(a), L.basis_vector(b)
        assert qm.project(L.bracket(x, y)) == qm.quotient.bracket(qm.project(x), qm.project(y))


def test_subalgebra_and_subquotient():
    N = nilp4(GF(3))
    C = N.span([(1, 0, 0, 0), (0, 0, 1, 0)])
    A = subalgebra_algebra(N, C)
    assert A.dim == 2 and not A.table
    assert subquotient(N, C, N.zero()).dim == 2


def test_direct_sum():
    L = direct_sum(affine2(GF(5)), sl2(GF(5)))
    assert L.dim == 5 and L.names == ("x", "y", "h", "e", "f")
    with pytest.raises(FieldMismatch):
        direct_sum(affine2(GF(5)), affine2(GF(3)))


def test_isomorphism_of_relabelled_affine():
    A = affine2(GF(5))
    B = LieAlgebra(GF(5), 2, {(0, 1): (2, 0)})  # [u,v] = 2u
    res = is_isomorphic(A, B)
    assert res.verdict is TriBool.YES and verify_isomorphism(A, B, res.witness)
    assert is_isomorphic(A, abelian(2, GF(5))).verdict is TriBool.NO


def test_rational_two_dimensional_witness():
    A = affine2(Q)
    B = LieAlgebra(Q, 2, {(0, 1): (Fraction(1, 2), Fraction(3))})
    res = is_isomorphic(A, B)
    assert res.verdict is TriBool.YES and verify_isomorphism(A, B, res.witness)


@pytest.mark.parametrize("seed", range(40))
def test_two_dimensional_random_tables_are_abelian_or_affine(seed):
    for F in (GF(2), GF(3)):
        L = random_algebra(2, F, seed)
        hits = [is_isomorphic(L, M).verdict for M in (abelian(2, F), affine2(F))]
        assert sorted(h.value for h in hits) == ["no", "yes"]


def test_sl2_not_isomorphic_to_heisenberg():
    assert is_isomorphic(sl2(GF(3)), heisenberg3(GF(3))).verdict is TriBool.NO


def test_tribool_refuses_truthiness():
    with pytest.raises(TypeError):
        bool(TriBool.UNKNOWN)
