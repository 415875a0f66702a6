from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lieindex.fields import GF, Q, FieldSpec
from lieindex.linalg import Subspace
from lieindex.randomgen import random_algebra

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

PRIME_FIELDS = [GF(2), GF(3), GF(5)]
ALL_FIELDS = PRIME_FIELDS + [Q]


def scalars(F: FieldSpec):
    if F.p:
        return st.integers(0, F.p - 1)
    return st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def vectors(F: FieldSpec, n: int):
    return st.tuples(*[scalars(F) for _ in range(n)])


@st.composite
def subspaces(draw, F: FieldSpec, n: int, max_rows: int | None = None):
    rows = draw(st.lists(vectors(F, n), max_size=max_rows if max_rows is not None else n + 1))
    return Subspace.span(F, n, rows)


@st.composite
def small_algebras(draw, fields=(GF(2), GF(3)), max_dim: int = 3):
    F = draw(st.sampled_from(list(fields)))
    dim = draw(st.integers(1, max_dim))
    seed = draw(st.integers(0, 10_000))
    return random_algebra(dim, F, seed)


@pytest.fixture(params=ALL_FIELDS, ids=lambda F: F.name)
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
