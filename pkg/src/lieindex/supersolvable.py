"""One-dimensional ideals and the supersolvability decision."""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from .algebra import LieAlgebra, TriBool, quotient
from .linalg import Subspace, nullspace

MAX_DEPTH = 64


def charpoly_rational_roots(matrix: list[list[Fraction]]) -> list[Fraction]:
    """Distinct rational eigenvalues of a rational matrix, in increasing order."""
    n = len(matrix)
    if n == 0:
        return []
    x = sympy.Symbol("x")
    poly = sympy.Matrix(n, n, lambda i, j: sympy.Rational(matrix[i][j].numerator, matrix[i][j].denominator)).charpoly(x)
    roots = set()
    for factor, _ in sympy.factor_list(poly.as_expr(), x)[1]:
        f = sympy.Poly(factor, x)
        if f.degree() == 1:
            a, b = f.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.add(Fraction(int(r.p), int(r.q)))
    return sorted(roots)


def _eigenspace(L: LieAlgebra, i: int, lam) -> Subspace:
    ad = L.ad_matrix(L.basis_vector(i))
    eqs = [[ad[r][c] - (lam if r == c else 0) for c in range(L.dim)] for r in range(L.dim)]
    return nullspace(eqs, L.field, L.dim)


def common_eigenspaces(L: LieAlgebra) -> list[Subspace]:
    """Nonzero spaces ``∩_i ker(ad b_i - λ_i)`` over all eigenvalue tuples.

    Every nonzero vector in one of them spans a one-dimensional ideal, and
    every one-dimensional ideal lies in exactly one of them.
    """
    n = L.dim
    if n == 0:
        return []
    f = L.field
    out = []

    def branch(i: int, cur: Subspace):
        if cur.is_zero:
            return
        if i == n:
            out.append(cur)
            return
        if f.p:
            values = range(f.p)
        else:
            values = charpoly_rational_roots(L.ad_matrix(L.basis_vector(i)))
        for lam in values:
            branch(i + 1, cur & _eigenspace(L, i, lam))

    branch(0, L.full())
    return out


def one_dim_ideal(L: LieAlgebra):
    """A vector spanning a one-dimensional ideal of ``L``, or ``None``."""
    for space in common_eigenspaces(L):
        return space.basis[0]
    return None


def one_dim_ideals_by_lines(L: LieAlgebra) -> list[Subspace]:
    """All one-dimensional ideals of a finite-field algebra by scanning every line."""
    p = L.field.p
    found = []
    for v in itertools.product(range(p), repeat=L.dim):
        if not any(v):
            continue
        lead = next(c for c in v if c)
        if lead != 1:
            continue
        line = Subspace(L.field, L.dim, (v,))
        if L.is_ideal(line):
            found.append(line)
    return found


def is_supersolvable(L: LieAlgebra, max_depth: int = MAX_DEPTH) -> TriBool:
    """Peel off one-dimensional ideals until nothing is left.

    Any one-dimensional ideal may be used: quotients of supersolvable
    algebras are supersolvable and chains pull back along the projection.
    """
    cur = L
    for _ in range(max_depth):
        if cur.dim == 0:
            return TriBool.YES
        if cur.field.p:
            lines = one_dim_ideals_by_lines(cur)
            v = lines[0].basis[0] if lines else None
        else:
            v = one_dim_ideal(cur)
        if v is None:
            return TriBool.NO
        cur = quotient(cur, cur.span([v])).quotient
    return TriBool.UNKNOWN
