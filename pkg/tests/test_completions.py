import pytest
from hypothesis import given

from lieindex.algebra import TriBool, abelian
from lieindex.catalog import affine2, ex31, ex41, heisenberg3, nilp4, sl2, so3q
from lieindex.completions import (
    core,
    has_abelian_ideal_completion,
    ideal_completions,
    ideal_index,
    index_complex,
    is_c_ideal,
    is_completion,
    is_maximal,
    phi_star,
    strict_core,
)
from lieindex.errors import InternalInconsistency, NotASubalgebra, StrictCoreUnsupported, Unsupported
from lieindex.fields import GF, Q
from lieindex.lattice import build_lattice, radical

from .conftest import small_algebras


def span(L, *rows):
    return L.span(rows)


def test_nilp4_completions():
    N = nilp4(GF(3))
    M = span(N, (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    ic = index_complex(N, M)
    C1, C2 = span(N, (1, 0, 0, 0)), span(N, (1, 0, 0, 0), (0, 0, 1, 0))
    r1, r2 = ic.record(C1), ic.record(C2)
    assert r1.strict_core.is_zero and r2.strict_core.is_zero
    assert (r1.quotient_dim, r2.quotient_dim) == (1, 2)
    assert r1.is_subideal and r2.is_subideal
    assert ic.eta == 1


def test_strict_core_differs_from_core_on_lines():
    N = nilp4(GF(3))
    d = span(N, (0, 0, 0, 1))
    assert core(N, d) == d
    assert strict_core(N, d).is_zero
    cd = span(N, (0, 0, 1, 0), (0, 0, 0, 1))
    assert strict_core(N, cd) == d


def test_strict_core_over_q_needs_ideal_lattice():
    H = heisenberg3(Q)
    with pytest.raises(StrictCoreUnsupported):
        strict_core(H, span(H, (1, 0, 0), (0, 0, 1)) + span(H, (0, 1, 0)))
    # non-ideals only need the core
    assert strict_core(H, span(H, (1, 0, 0))).is_zero


def test_opening_example_gf3():
    A = affine2(GF(3))
    M = span(A, (1, 1))
    ic = index_complex(A, M)
    x, y = span(A, (1, 0)), span(A, (0, 1))
    assert ic.record(x).is_maximal_in_IM and not ic.record(x).is_ideal
    assert ic.record(y).is_ideal
    assert ic.eta == 1


def test_is_completion_requires_maximal():
    A = affine2(GF(3))
    with pytest.raises(InternalInconsistency):
        is_completion(A, span(A, (1, 0)), A.zero())
    with pytest.raises(NotASubalgebra):
        index_complex(A, A.zero())


def test_index_complex_refused_over_q():
    A = affine2(Q)
    with pytest.raises(Unsupported):
        index_complex(A, span(A, (1, 1)))


def test_sl2_borel_eta():
    S = sl2(GF(5))
    borel = span(S, (1, 0, 0), (0, 1, 0))
    assert is_maximal(S, borel) is TriBool.YES
    assert ideal_index(S, borel) == 3
    assert is_c_ideal(S, borel) is TriBool.NO
    assert not has_abelian_ideal_completion(S, borel)


def test_maximality_over_q():
    L = ex31()
    diag = L.span([(1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1)])
    assert is_maximal(L, diag) is TriBool.YES
    E = ex41()
    assert is_maximal(E, span(E, (1, 0, 0, 0), (0, 1, 0, 0))) is TriBool.YES
    # <a> lies in <a, e1>, so it is not maximal
    assert is_maximal(E, span(E, (1, 0, 0, 0))) is TriBool.NO
    with pytest.raises(NotASubalgebra):
        is_maximal(E, span(E, (0, 1, 0, 0), (0, 0, 1, 0)))


def test_ex31_ideal_completions():
    L = ex31()
    diag = L.span([(1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1)])
    comps = ideal_completions(L, diag)
    assert len(comps) == 2 and all(k.is_zero for _, k in comps)
    assert ideal_index(L, diag) == 3
    assert not has_abelian_ideal_completion(L, diag)


def test_phi_star_examples():
    from lieindex.catalog import affine2_sl2

    L = affine2_sl2(GF(5))
    _, phis = phi_star(L, {5: 5})
    assert phis == radical(L, {5: 5}) == L.span([L.basis_vector(0), L.basis_vector(1)])
    with pytest.raises(Unsupported):
        phi_star(so3q())


@given(small_algebras())
def test_index_complex_invariants(L):
    for m in build_lattice(L).maximal_subalgebras:
        ic = index_complex(L, m)
        assert ic.ideal_records
        assert {r.quotient_dim for r in ic.ideal_records} == {ic.eta}
        for r in ic.records:
            assert not r.space <= m and r.strict_core <= m and r.strict_core < r.space
            assert L.closure(m + r.space).is_full
            if r.is_ideal:
                assert r.is_maximal_in_IM  # any larger subalgebra has C inside its strict core
            if r.in_S_of_M:
                assert r.is_subideal and (m + r.space).is_full
        assert any(r.is_maximal_in_IM for r in ic.records)


@given(small_algebras())
def test_strict_core_of_ideals_by_enumeration(L):
    ideals = build_lattice(L).ideals
    for b in ideals:
        want = L.zero()
        for I in ideals:
            if I < b:
                want = want + I
        assert strict_core(L, b) == want


def test_abelian_algebras_have_only_line_completions():
    A = abelian(3, GF(2))
    for m in build_lattice(A).maximal_subalgebras:
        ic = index_complex(A, m)
        assert all(r.space.dim == 1 for r in ic.records)
