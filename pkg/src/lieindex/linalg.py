"""Exact row reduction and canonical subspaces over GF(p) and Q."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatch, BoundExceeded, RaggedRows, Unsupported
from .fields import FieldSpec, Scalar

Vector = tuple  # tuple of Scalars

DEFAULT_BOUNDS: Mapping[int, int] = {2: 6, 3: 5, 5: 4}


def max_ambient_dim(p: int, bounds: Mapping[int, int] | None = None) -> int:
    """Largest ambient dimension that may be enumerated exhaustively over GF(p)."""
    if bounds and p in bounds:
        return bounds[p]
    if p in DEFAULT_BOUNDS:
        return DEFAULT_BOUNDS[p]
    return 3 if p < 12 else 2


def _rref_mod(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    m = rows
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        pr = r
        while pr < nrows and m[pr][c] == 0:
            pr += 1
        if pr == nrows:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        row = m[r]
        piv = row[c]
        if piv != 1:
            inv = pow(piv, p - 2, p)
            row = [x * inv % p for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    other = m[i]
                    m[i] = [(a - f * b) % p for a, b in zip(other, row)]
        r += 1
    return m[:r]


def _rref_frac(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    m = rows
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        pr = r
        while pr < nrows and m[pr][c] == 0:
            pr += 1
        if pr == nrows:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        row = m[r]
        piv = row[c]
        if piv != 1:
            row = [x / piv for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], row)]
        r += 1
    return m[:r]


def reduce(rows: Sequence[Sequence], field: FieldSpec, ncols: int | None = None):
    """Return ``(rref, rank)`` for ``rows``; zero rows are dropped from ``rref``."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required when there are no rows")
        ncols = len(rows[0])
    work = []
    for row in rows:
        if len(row) != ncols:
            raise RaggedRows(f"expected rows of length {ncols}, got {len(row)}")
        work.append([field.coerce(x) for x in row])
    if field.p:
        out = _rref_mod(work, ncols, field.p)
    else:
        out = _rref_frac(work, ncols)
    rref = tuple(tuple(r) for r in out)
    return rref, len(rref)


def nullspace(equations: Sequence[Sequence], field: FieldSpec, ncols: int) -> "Subspace":
    """Solutions ``x`` of ``eq . x = 0`` for every row ``eq``."""
    rref, _ = reduce(equations, field, ncols)
    pivots = [next(i for i, x in enumerate(r) if x != 0) for r in rref]
    pivset = set(pivots)
    basis = []
    zero, one = field.zero, field.one
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, pc in zip(rref, pivots):
            c = row[free]
            if c:
                v[pc] = (-c) % field.p if field.p else -c
        basis.append(v)
    return Subspace.span(field, ncols, basis)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held as its reduced row echelon basis.

    Equal subspaces are structurally equal, so values can be hashed and
    compared directly.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, rows: Iterable[Sequence]) -> "Subspace":
        rows = list(rows)
        if not rows:
            return cls(field, ambient_dim, ())
        rref, _ = reduce(rows, field, ambient_dim)
        return cls(field, ambient_dim, rref)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, tuple(unit_vector(field, ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x != 0) for r in self.basis)

    @property
    def sort_key(self):
        return (len(self.basis), self.basis)

    def residual(self, v: Sequence[Scalar]) -> list:
        """Reduce ``v`` modulo the subspace; the result vanishes on pivot columns."""
        w = list(v)
        p = self.field.p
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c:
                if p:
                    w = [(a - c * b) % p for a, b in zip(w, row)]
                else:
                    w = [a - c * b for a, b in zip(w, row)]
        return w

    def coordinates(self, v: Sequence[Scalar]) -> list:
        """Coefficients of ``v`` in the RREF basis (``v`` must lie in the subspace)."""
        return [v[pc] for pc in self.pivots]

    def contains(self, v) -> bool:
        return subspace_contains(self, v)

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return subspace_contains(other, self)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and subspace_contains(other, self)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def complement_basis(self) -> list[tuple]:
        return complement_basis(self)

    def vectors(self):
        """Every vector of the subspace (prime fields only)."""
        if not self.field.p:
            raise Unsupported("cannot list the vectors of a rational subspace")
        p = self.field.p
        n = self.ambient_dim
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, row)]
            yield tuple(v)

    def format_rows(self) -> list[list[str]]:
        return [[self.field.format(x) for x in row] for row in self.basis]

    def __repr__(self) -> str:
        rows = ", ".join("[" + " ".join(r) + "]" for r in self.format_rows())
        return f"Subspace({self.field.name}^{self.ambient_dim}: {rows})"


def unit_vector(field: FieldSpec, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise AmbientMismatch(
            f"subspaces live in {a.field.name}^{a.ambient_dim} and {b.field.name}^{b.ambient_dim}"
        )


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if b.is_zero or a.is_full:
        return a
    if a.is_zero or b.is_full:
        return b
    return Subspace.span(a.field, a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection: reduce ``[a | a]`` stacked on ``[b | 0]``."""
    _check_ambient(a, b)
    if a.is_zero or b.is_full:
        return a
    if b.is_zero or a.is_full:
        return b
    n = a.ambient_dim
    zero = (a.field.zero,) * n
    rows = [r + r for r in a.basis] + [r + zero for r in b.basis]
    rref, _ = reduce(rows, a.field, 2 * n)
    inter = [r[n:] for r in rref if not any(r[:n])]
    return Subspace.span(a.field, n, inter)


def subspace_contains(a: Subspace, v) -> bool:
    """Whether the vector or subspace ``v`` lies inside ``a``."""
    if isinstance(v, Subspace):
        _check_ambient(a, v)
        if v.dim > a.dim:
            return False
        return all(not any(a.residual(row)) for row in v.basis)
    if len(v) != a.ambient_dim:
        raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    return not any(a.residual([a.field.coerce(x) for x in v]))


def complement_basis(a: Subspace) -> list[tuple]:
    """Standard basis vectors at the non-pivot columns, in index order."""
    piv = set(a.pivots)
    return [unit_vector(a.field, a.ambient_dim, i) for i in range(a.ambient_dim) if i not in piv]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(
    ambient_dim: int,
    field: FieldSpec,
    dim_filter: int | None = None,
    bounds: Mapping[int, int] | None = None,
) -> list[Subspace]:
    """Every subspace of GF(p)^n exactly once, ordered by ``Subspace.sort_key``."""
    if not field.p:
        raise Unsupported("exhaustive subspace enumeration needs a finite field")
    limit = max_ambient_dim(field.p, bounds)
    if ambient_dim > limit:
        raise BoundExceeded(
            f"ambient dimension {ambient_dim} exceeds the enumeration bound {limit} for {field.name}"
        )
    n, p = ambient_dim, field.p
    dims = range(n + 1) if dim_filter is None else [dim_filter]
    out = []
    for k in dims:
        if not 0 <= k <= n:
            continue
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            free = [
                (r, c)
                for r, pc in enumerate(pivots)
                for c in range(pc + 1, n)
                if c not in pivset
            ]
            for values in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), x in zip(free, values):
                    rows[r][c] = x
                out.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    out.sort(key=lambda s: s.sort_key)
    return out
