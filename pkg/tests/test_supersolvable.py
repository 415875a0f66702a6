from fractions import Fraction

from hypothesis import given

from lieindex.algebra import TriBool, abelian, classify_basic
from lieindex.catalog import affine2, ex41, heisenberg3, nilp4, sl2, so3q
from lieindex.completions import ideal_index
from lieindex.fields import GF, Q
from lieindex.lattice import build_lattice
from lieindex.supersolvable import (
    charpoly_rational_roots,
    common_eigenspaces,
    is_supersolvable,
    one_dim_ideals_by_lines,
)

from .conftest import small_algebras


def test_rational_roots():
    M = [[Fraction(2), Fraction(0)], [Fraction(1), Fraction(-1, 2)]]
    assert charpoly_rational_roots(M) == [Fraction(-1, 2), Fraction(2)]
    rot = [[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(0)]]
    assert charpoly_rational_roots(rot) == []


def test_examples():
    assert is_supersolvable(nilp4(GF(3))) is TriBool.YES
    assert is_supersolvable(ex41()) is TriBool.NO
    assert is_supersolvable(sl2(GF(5))) is TriBool.NO
    assert is_supersolvable(so3q()) is TriBool.NO
    assert is_supersolvable(affine2(Q)) is TriBool.YES
    assert is_supersolvable(heisenberg3(Q)) is TriBool.YES


def test_depth_exhaustion_is_unknown():
    assert is_supersolvable(abelian(3, GF(2)), max_depth=2) is TriBool.UNKNOWN


@given(small_algebras())
def test_common_eigenspaces_cover_the_line_scan(L):
    lines = set(one_dim_ideals_by_lines(L))
    spaces = common_eigenspaces(L)
    for line in lines:
        assert sum(1 for s in spaces if line <= s) == 1
    for s in spaces:
        for v in s.vectors():
            if any(v):
                assert L.span([v]) in lines


@given(small_algebras(fields=(GF(2), GF(3), GF(5))))
def test_agrees_with_ideal_index_criterion(L):
    verdict = is_supersolvable(L)
    etas = [ideal_index(L, m) for m in build_lattice(L).maximal_subalgebras]
    assert (verdict is TriBool.YES) == all(e == 1 for e in etas)
    if verdict is TriBool.YES:
        assert classify_basic(L).solvable
    if classify_basic(L).nilpotent:
        assert verdict is TriBool.YES
