from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieindex.fields import GF, Q, FieldSpec, is_prime

from .conftest import PRIME_FIELDS, scalars


def test_is_prime_small_table():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p", [0, 1, 4, 9, 65536, 65537])
def test_rejects_bad_characteristics(p):
    if p == 0:
        assert FieldSpec(0) == Q
        return
    with pytest.raises(ValueError):
        FieldSpec(p)


def test_names_and_json():
    assert Q.name == "Q" and GF(7).name == "GF(7)"
    for F in (Q, GF(2), GF(7)):
        assert FieldSpec.from_json(F.to_json()) == F
    assert FieldSpec.from_json("gf5") == GF(5)
    assert FieldSpec.from_json("GF(3)") == GF(3)


def test_parse_and_format():
    assert Q.parse("-3/6") == Fraction(-1, 2)
    assert Q.format(Fraction(4, 2)) == "2"
    assert GF(5).parse("-1") == 4
    assert GF(5).parse("1/2") == 3
    with pytest.raises(ValueError):
        Q.parse("")
    with pytest.raises(ZeroDivisionError):
        GF(5).parse("1/5")


@pytest.mark.parametrize("F", PRIME_FIELDS, ids=str)
def test_inverse_table(F):
    for a in range(1, F.p):
        assert a * F.inv(a) % F.p == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@given(st.sampled_from(PRIME_FIELDS + [Q]).flatmap(lambda F: st.tuples(st.just(F), scalars(F), scalars(F), scalars(F))))
def test_field_axioms(data):
    F, a, b, c = data
    add = (lambda x, y: (x + y) % F.p) if F.p else (lambda x, y: x + y)
    mul = (lambda x, y: x * y % F.p) if F.p else (lambda x, y: x * y)
    assert add(a, b) == add(b, a)
    assert mul(a, mul(b, c)) == mul(mul(a, b), c)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    if a:
        assert mul(a, F.inv(a)) == F.one


@given(st.sampled_from(PRIME_FIELDS + [Q]).flatmap(lambda F: st.tuples(st.just(F), scalars(F))))
def test_format_parse_roundtrip(data):
    F, a = data
    assert F.parse(F.format(a)) == F.coerce(a)
