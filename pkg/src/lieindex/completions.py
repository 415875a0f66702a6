"""Cores, strict cores, completions, the index complex and the ideal index."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import LieAlgebra, TriBool, subalgebra_algebra, subquotient
from .errors import InternalInconsistency, NotASubalgebra, StrictCoreUnsupported, Unsupported
from .lattice import _bounds_key, build_lattice, is_nonsplit_simple_3dim, is_subideal
from .linalg import Subspace


def core(L: LieAlgebra, b: Subspace) -> Subspace:
    """Largest ideal of ``L`` inside the subspace ``b``."""
    return L.core(b)


def _ideals(L: LieAlgebra, bounds=None) -> tuple:
    try:
        return build_lattice(L, bounds).ideals
    except Unsupported as exc:
        raise StrictCoreUnsupported(str(exc)) from exc


def strict_core(L: LieAlgebra, b: Subspace, bounds=None) -> Subspace:
    """Sum of the ideals of ``L`` that are proper subalgebras of ``b``.

    When ``b`` is not an ideal every ideal inside it is proper, so the
    strict core is the core.  For ideals the lattice is required.
    """
    if not L.is_ideal(b):
        return L.core(b)
    if b.dim <= 1:
        return L.zero()
    acc = L.zero()
    for I in _ideals(L, bounds):
        if I.dim < b.dim and I <= b:
            acc = acc + I
    return acc


def is_completion(L: LieAlgebra, c: Subspace, m: Subspace, bounds=None) -> bool:
    """``C ⊄ M`` and ``k(C) ⊆ M``, with ``<M, C> = L`` cross-checked."""
    outside = not c <= m
    generates = L.closure(m + c).is_full
    if outside != generates:
        raise InternalInconsistency("C ⊄ M disagrees with <M, C> = L; M is not maximal")
    if not outside:
        return False
    return strict_core(L, c, bounds) <= m


@dataclass(frozen=True)
class CompletionRecord:
    space: Subspace
    strict_core: Subspace
    quotient: LieAlgebra
    is_ideal: bool
    is_subideal: bool
    is_maximal_in_IM: bool
    in_S_of_M: bool

    @property
    def quotient_dim(self) -> int:
        return self.space.dim - self.strict_core.dim

    @property
    def quotient_abelian(self) -> bool:
        return not self.quotient.table


@dataclass(frozen=True)
class IndexComplex:
    algebra: LieAlgebra
    maximal: Subspace
    records: tuple
    eta: int

    @property
    def ideal_records(self) -> list[CompletionRecord]:
        return [r for r in self.records if r.is_ideal]

    @property
    def maximal_records(self) -> list[CompletionRecord]:
        return [r for r in self.records if r.is_maximal_in_IM]

    @property
    def S_records(self) -> list[CompletionRecord]:
        return [r for r in self.records if r.in_S_of_M]

    def record(self, c: Subspace) -> CompletionRecord | None:
        return next((r for r in self.records if r.space == c), None)


def _structured_maximal(L: LieAlgebra, m: Subspace) -> bool:
    """Certificates for maximality over Q that do not need enumeration.

    Two shapes are recognised: ``M`` is the graph of an isomorphism between
    two simple ideals whose sum is ``L``; or ``L = Z ⊕ S`` with ``Z ⊆ M``,
    ``S`` a non-split simple ideal of dimension 3 and ``dim(M ∩ S) = 1``.
    """
    try:
        lat = build_lattice(L)
    except Unsupported:
        return False
    comps = [I for I in lat.minimal_ideals if not L.product_space(I, I).is_zero]
    Z = L.center()
    D = L.derived_algebra()
    if len(comps) == 2 and Z.is_zero:
        s1, s2 = comps
        if (m & s1).is_zero and (m & s2).is_zero and m.dim == s1.dim == s2.dim and (s1 + s2).is_full:
            return True
    if len(comps) == 1 and Z <= m and comps[0] == D and D.dim == 3:
        S = subalgebra_algebra(L, D)
        if (m & D).dim == 1 and is_nonsplit_simple_3dim(S):
            return True
    return False


def _sample_vectors(L: LieAlgebra, count: int = 32):
    """Deterministic small-integer vectors used to refute maximality."""
    vals = [0, 1, -1, 2]
    for k, v in enumerate(itertools.product(vals, repeat=L.dim)):
        if k >= count * 4:
            return
        if any(v):
            yield tuple(L.field.coerce(x) for x in v)


def is_maximal(L: LieAlgebra, m: Subspace, bounds=None) -> TriBool:
    if not L.is_subalgebra(m):
        raise NotASubalgebra(f"{m!r} is not a subalgebra")
    if m.is_full:
        return TriBool.NO
    if L.field.p:
        return TriBool.of(m in build_lattice(L, bounds).maximal_subalgebras)
    if L.dim - m.dim == 1:
        return TriBool.YES
    if _structured_maximal(L, m):
        return TriBool.YES
    for v in _sample_vectors(L):
        if m.contains(v):
            continue
        if not L.closure(m + L.span([v])).is_full:
            return TriBool.NO
    return TriBool.UNKNOWN


@dataclass
class _SubalgebraData:
    strict_core: Subspace
    is_ideal: bool
    is_subideal: bool
    quotient: LieAlgebra | None = None


@lru_cache(maxsize=256)
def _subalgebra_data(L: LieAlgebra, bounds_key) -> dict:
    """Strict core and ideal/subideal flags for every subalgebra; independent of M."""
    bounds = dict(bounds_key) or None
    out = {}
    for c in build_lattice(L, bounds).subalgebras:
        ideal = L.is_ideal(c)
        out[c] = _SubalgebraData(strict_core(L, c, bounds), ideal, ideal or is_subideal(L, c))
    return out


def index_complex(L: LieAlgebra, m: Subspace, bounds=None) -> IndexComplex:
    """Every completion of the maximal subalgebra ``m`` with its flags."""
    if not L.field.p:
        raise Unsupported("the index complex is infinite in general over Q; use the targeted operations")
    lat = build_lattice(L, bounds)
    if m not in lat.maximal_subalgebras:
        raise NotASubalgebra(f"{m!r} is not a maximal subalgebra")
    data = _subalgebra_data(L, _bounds_key(bounds))
    found = [c for c, d in data.items() if not c <= m and d.strict_core <= m]
    # anything below a larger completion is below a maximal one
    tops: list[Subspace] = []
    for c in sorted(found, key=lambda s: -s.dim):
        if not any(c <= t for t in tops):
            tops.append(c)
    records = []
    for c in found:
        d = data[c]
        if not d.strict_core < c:
            raise InternalInconsistency("strict core of a completion is not proper")
        if d.quotient is None:
            d.quotient = subquotient(L, c, d.strict_core)
        records.append(
            CompletionRecord(
                space=c,
                strict_core=d.strict_core,
                quotient=d.quotient,
                is_ideal=d.is_ideal,
                is_subideal=d.is_subideal,
                is_maximal_in_IM=c in tops,
                in_S_of_M=d.is_subideal and (m + c).is_full,
            )
        )
    etas = {r.quotient_dim for r in records if r.is_ideal}
    if not etas:
        raise InternalInconsistency("index complex has no ideal completion")
    if len(etas) != 1:
        raise InternalInconsistency(f"ideal completions have different quotient dimensions {sorted(etas)}")
    return IndexComplex(L, m, tuple(records), etas.pop())


def ideal_completions(L: LieAlgebra, m: Subspace, bounds=None) -> list[tuple[Subspace, Subspace]]:
    """``(C, k(C))`` for every ideal completion of ``m``."""
    try:
        ideals = build_lattice(L, bounds).ideals
    except Unsupported as exc:
        raise Unsupported(f"ideal completions unavailable: {exc}") from exc
    out = []
    for c in ideals:
        if c <= m:
            continue
        k = strict_core(L, c, bounds)
        if k <= m:
            out.append((c, k))
    return out


def ideal_index(L: LieAlgebra, m: Subspace, bounds=None) -> int:
    """``dim C/k(C)`` for an ideal completion, checked across all of them."""
    comps = ideal_completions(L, m, bounds)
    if not comps:
        raise InternalInconsistency("maximal subalgebra without an ideal completion")
    etas = {c.dim - k.dim for c, k in comps}
    if len(etas) != 1:
        raise InternalInconsistency(f"ideal index not well defined: {sorted(etas)}")
    return etas.pop()


def is_c_ideal(L: LieAlgebra, b: Subspace, bounds=None) -> TriBool:
    """Is there an ideal ``C`` with ``L = B + C`` and ``B ∩ C ⊆ B_L``?"""
    try:
        ideals = build_lattice(L, bounds).ideals
    except Unsupported:
        return TriBool.UNKNOWN
    bl = L.core(b)
    for c in ideals:
        if (b + c).is_full and (b & c) <= bl:
            return TriBool.YES
    return TriBool.NO


def has_abelian_ideal_completion(L: LieAlgebra, m: Subspace, bounds=None) -> bool:
    return any(
        L.product_space(c, c) <= k for c, k in ideal_completions(L, m, bounds)
    )


def phi_star(L: LieAlgebra, bounds=None) -> tuple[Subspace, Subspace]:
    """``(F*(L), φ*(L))``."""
    if not L.field.p:
        raise Unsupported("F*(L) needs every maximal subalgebra (finite fields only)")
    lat = build_lattice(L, bounds)
    F = L.full()
    for m in lat.maximal_subalgebras:
        if not has_abelian_ideal_completion(L, m, bounds):
            F = F & m
    return F, L.core(F)
