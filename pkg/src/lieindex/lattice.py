"""Subalgebra and ideal lattices, subideals, Frattini ideals and radicals.

Over a prime field everything is exhaustive enumeration.  Over the
rationals only ideal lattices of reductive algebras (centre of dimension at
most one plus a semisimple derived algebra) are available; those are
decided through the simple-component decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import sympy

from .algebra import LieAlgebra, subalgebra_algebra
from .errors import InternalInconsistency, Unsupported, WrongDimension
from .linalg import Subspace, enumerate_subspaces, nullspace
from .supersolvable import common_eigenspaces


@dataclass(frozen=True)
class LatticeIndex:
    algebra: LieAlgebra
    ideals: tuple
    minimal_ideals: tuple
    subalgebras: tuple | None = None  # None when not enumerable (rationals)
    maximal_subalgebras: tuple | None = None

    @property
    def exhaustive(self) -> bool:
        return self.subalgebras is not None


def _bounds_key(bounds: Mapping[int, int] | None):
    return tuple(sorted(bounds.items())) if bounds else ()


def build_lattice(L: LieAlgebra, bounds: Mapping[int, int] | None = None) -> LatticeIndex:
    """Enumerate subalgebras, ideals, maximal subalgebras and minimal ideals.

    Raises ``BoundExceeded`` past the enumeration limits and ``Unsupported``
    for rational algebras that are not reductive with a centre of dimension
    at most one.
    """
    return _build_cached(L, _bounds_key(bounds))


@lru_cache(maxsize=8192)
def _build_cached(L: LieAlgebra, bounds_key) -> LatticeIndex:
    if not L.field.p:
        ideals, minimal = rational_ideals(L)
        return LatticeIndex(L, ideals, minimal)
    subs = enumerate_subspaces(L.dim, L.field, bounds=dict(bounds_key))
    subalgebras = tuple(s for s in subs if s.dim <= 1 or L.is_subalgebra(s))
    ideals = tuple(s for s in subalgebras if L.is_ideal(s))
    full = L.full()
    proper = [s for s in subalgebras if s != full]
    maximal = tuple(
        s for s in proper if not any(t.dim > s.dim and s <= t for t in proper)
    )
    minimal = tuple(
        s
        for s in ideals
        if not s.is_zero and not any(0 < t.dim < s.dim and t <= s for t in ideals)
    )
    return LatticeIndex(L, ideals, minimal, subalgebras, maximal)


# -- rational ideal lattices ------------------------------------------------------


def _matpoly(poly_coeffs: list[Fraction], T: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(T)
    result = [[Fraction(0)] * n for _ in range(n)]
    for c in poly_coeffs:
        # result = result * T + c I
        result = [
            [sum(result[i][k] * T[k][j] for k in range(n)) + (c if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return result


def _irreducible_factors(T: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(T)
    x = sympy.Symbol("x")
    M = sympy.Matrix(n, n, lambda i, j: sympy.Rational(T[i][j].numerator, T[i][j].denominator))
    out = []
    for factor, _ in sympy.factor_list(M.charpoly(x).as_expr(), x)[1]:
        coeffs = sympy.Poly(factor, x).all_coeffs()
        out.append([Fraction(int(c.p), int(c.q)) for c in map(sympy.Rational, coeffs)])
    return out


def simple_components(S: LieAlgebra) -> list[Subspace]:
    """Split a semisimple rational algebra into its simple ideals.

    The commutant of ``ad S`` is a product of fields, one per simple ideal;
    kernels of irreducible factors of commutant elements separate them.
    """
    m = S.dim
    if m == 0:
        return []
    ads = [S.ad_matrix(S.basis_vector(i)) for i in range(m)]
    # unknown T flattened row-major; equations (T A - A T)[r][c] = 0
    eqs = []
    for A in ads:
        for r in range(m):
            for c in range(m):
                row = [Fraction(0)] * (m * m)
                for k in range(m):
                    row[r * m + k] += A[k][c]
                    row[k * m + c] -= A[r][k]
                if any(row):
                    eqs.append(row)
    commutant = nullspace(eqs, S.field, m * m)
    mats = [[[row[r * m + c] for c in range(m)] for r in range(m)] for row in commutant.basis]
    probes = list(mats)
    for a, b in itertools.combinations(range(len(mats)), 2):
        probes.append([[mats[a][r][c] + (b + 2) * mats[b][r][c] for c in range(m)] for r in range(m)])
    pieces = [S.full()]
    for T in probes:
        if len(pieces) == m:
            break
        kernels = []
        for f in _irreducible_factors(T):
            P = _matpoly(f, T)
            kernels.append(nullspace(P, S.field, m))
        refined = []
        for piece in pieces:
            for K in kernels:
                part = piece & K
                if not part.is_zero:
                    refined.append(part)
        if sum(p.dim for p in refined) != sum(p.dim for p in pieces):
            raise InternalInconsistency("commutant element is not semisimple")
        pieces = refined
    for piece in pieces:
        if not S.is_ideal(piece) or S.product_space(piece, piece) != piece:
            raise InternalInconsistency("simple-component split produced a non-simple piece")
    return sorted(pieces, key=lambda s: s.sort_key)


def _small_rational_ideals(L: LieAlgebra) -> tuple[tuple, tuple]:
    # in dimension <= 2 the proper nonzero ideals are exactly the 1-dim ideals
    lines = []
    for space in common_eigenspaces(L):
        if space.dim > 1:
            raise Unsupported("infinitely many one-dimensional ideals over Q")
        lines.append(space)
    if L.dim == 2:
        ideals = [L.zero()] + lines + [L.full()]
        minimal = lines or [L.full()]
    else:
        ideals = [L.zero(), L.full()] if L.dim else [L.zero()]
        minimal = [L.full()] if L.dim else []
    key = lambda s: s.sort_key
    return tuple(sorted(set(ideals), key=key)), tuple(sorted(minimal, key=key))


def rational_ideals(L: LieAlgebra) -> tuple[tuple, tuple]:
    """All ideals and the minimal ideals of a rational algebra.

    Supported: dimension at most two, and reductive algebras whose centre
    has dimension at most one.
    """
    if L.dim <= 2:
        return _small_rational_ideals(L)
    Z = L.center()
    D = L.derived_algebra()
    if not (Z & D).is_zero or Z.dim + D.dim != L.dim:
        raise Unsupported("rational ideal lattice needs L = Z(L) ⊕ L², which fails here")
    if Z.dim > 1:
        raise Unsupported("centre of dimension > 1 has infinitely many ideals over Q")
    Dalg = subalgebra_algebra(L, D)
    if not killing_radical(Dalg).is_zero:
        raise Unsupported("derived algebra is not semisimple")
    comps = []
    for piece in simple_components(Dalg):
        rows = []
        for coeffs in piece.basis:
            v = [Fraction(0)] * L.dim
            for c, r in zip(coeffs, D.basis):
                if c:
                    v = [a + c * b for a, b in zip(v, r)]
            rows.append(v)
        comps.append(L.span(rows))
    generators = comps + ([Z] if Z.dim else [])
    ideals = set()
    for k in range(len(generators) + 1):
        for chosen in itertools.combinations(generators, k):
            acc = L.zero()
            for g in chosen:
                acc = acc + g
            ideals.add(acc)
    for I in ideals:
        if not L.is_ideal(I):
            raise InternalInconsistency("component sum is not an ideal")
    minimal = tuple(sorted(generators, key=lambda s: s.sort_key))
    return tuple(sorted(ideals, key=lambda s: s.sort_key)), minimal


# -- subideals ------------------------------------------------------------------------


def idealizer_tower(L: LieAlgebra, b: Subspace) -> list[Subspace]:
    tower = [b]
    while True:
        nxt = L.idealizer(tower[-1])
        if nxt == tower[-1]:
            return tower
        tower.append(nxt)


def ideal_closure(L: LieAlgebra, b: Subspace, within: Subspace) -> Subspace:
    """Smallest subspace containing ``b`` and stable under ``ad within``."""
    cur = b
    while True:
        nxt = cur + L.product_space(within, cur)
        if nxt == cur:
            return cur
        cur = nxt


def ideal_closure_series(L: LieAlgebra, b: Subspace) -> list[Subspace]:
    """``L = B_0 ⊇ B_1 ⊇ ...`` with ``B_{i+1}`` the ideal closure of ``b`` in ``B_i``."""
    series = [L.full()]
    while True:
        nxt = ideal_closure(L, b, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_subideal(L: LieAlgebra, b: Subspace) -> bool:
    """``b`` is a subideal iff the ideal-closure series descends all the way to it.

    The ascending idealizer tower reaching ``L`` is sufficient but not necessary.
    """
    if not L.is_subalgebra(b):
        return False
    return ideal_closure_series(L, b)[-1] == b


# -- Frattini and radicals ------------------------------------------------------------


def frattini(L: LieAlgebra, bounds=None) -> tuple[Subspace, Subspace]:
    """``(F(L), φ(L))``: intersection of the maximal subalgebras and its core."""
    if not L.field.p:
        raise Unsupported("Frattini subalgebra needs the maximal subalgebras (finite fields only)")
    lat = build_lattice(L, bounds)
    F = L.full()
    for M in lat.maximal_subalgebras:
        F = F & M
    return F, L.core(F)


def killing_radical(L: LieAlgebra) -> Subspace:
    """``{x : κ(x, L²) = 0}``; the solvable radical in characteristic zero."""
    gram = L.killing_form()
    D = L.derived_algebra()
    eqs = []
    for y in D.basis:
        eqs.append([sum(gram[i][j] * y[j] for j in range(L.dim)) for i in range(L.dim)])
    return nullspace(eqs, L.field, L.dim)


def radical(L: LieAlgebra, bounds=None) -> Subspace:
    """Largest solvable ideal."""
    if L.field.p:
        lat = build_lattice(L, bounds)
        solv = [I for I in lat.ideals if L.is_solvable_subspace(I)]
        R = max(solv, key=lambda s: s.dim)
        if not all(I <= R for I in solv):
            raise InternalInconsistency("largest solvable ideal does not contain all solvable ideals")
        return R
    R = killing_radical(L)
    if not L.is_ideal(R) or not L.is_solvable_subspace(R):
        raise InternalInconsistency("Killing-form radical is not a solvable ideal")
    return R


def nilradical(L: LieAlgebra, bounds=None) -> Subspace:
    """Largest nilpotent ideal."""
    if not L.field.p:
        raise Unsupported("nilradical is computed by enumeration (finite fields only)")
    lat = build_lattice(L, bounds)
    nil = [I for I in lat.ideals if L.is_nilpotent_subspace(I)]
    N = max(nil, key=lambda s: s.dim)
    if not all(I <= N for I in nil):
        raise InternalInconsistency("largest nilpotent ideal does not contain all nilpotent ideals")
    return N


def _leading_minors(gram: list[list[Fraction]]) -> list[Fraction]:
    n = len(gram)
    out = []
    for k in range(1, n + 1):
        M = sympy.Matrix(k, k, lambda i, j: sympy.Rational(gram[i][j].numerator, gram[i][j].denominator))
        det = sympy.Rational(M.det())
        out.append(Fraction(int(det.p), int(det.q)))
    return out


def is_definite(gram: list[list[Fraction]]) -> bool:
    minors = _leading_minors(gram)
    positive = all(m > 0 for m in minors)
    negative = all((m < 0) if k % 2 == 0 else (m > 0) for k, m in enumerate(minors))
    return positive or negative


def is_nonsplit_simple_3dim(L: LieAlgebra) -> bool:
    """Perfect, no proper nonzero ideals, and no two-dimensional subalgebra."""
    if L.field.p:
        raise Unsupported("non-split certification is implemented over the rationals")
    if L.dim != 3:
        raise WrongDimension(f"expected a 3-dimensional algebra, got dimension {L.dim}")
    if not L.derived_algebra().is_full:
        return False
    # perfect rules out 2-dim ideals (they would contain L² = L)
    if common_eigenspaces(L):
        return False
    return is_definite(L.killing_form())
