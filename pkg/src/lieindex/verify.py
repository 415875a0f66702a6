"""Per-theorem verification over a corpus of algebras.

Each check returns normally on success, raises ``Violation`` with a
witness on failure, and raises ``Skipped`` (or an ``Unsupported``) when
the question cannot be decided exactly.  ``run_suite`` turns those into
report entries in a fixed order so identical inputs give identical output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from .algebra import (
    LieAlgebra,
    TriBool,
    classify_basic,
    is_isomorphic,
    quotient,
    subalgebra_algebra,
    verify_isomorphism,
)
from .catalog import ENTRIES, affine2, ex31, ex41, so3q
from .completions import (
    ideal_completions,
    ideal_index,
    index_complex,
    is_c_ideal,
    is_completion,
    is_maximal,
    phi_star,
    strict_core,
)
from .documents import algebra_to_doc
from .errors import BoundExceeded, LieIndexError, Unsupported
from .fields import Q, GF, FieldSpec
from .homomorph import ABELIAN, CLASSES, NILPOTENT, SOLVABLE, HomomorphClass, closure_violations
from .lattice import (
    _bounds_key,
    build_lattice,
    frattini,
    is_nonsplit_simple_3dim,
    is_subideal,
    nilradical,
    radical,
    rational_ideals,
)
from .linalg import Subspace
from .randomgen import sample_algebra
from .supersolvable import is_supersolvable

NOT_INSTANTIABLE = "field hypothesis not instantiable in exact computation"


class Violation(Exception):
    def __init__(self, message: str, **witness):
        super().__init__(message)
        self.witness = witness


class Skipped(Exception):
    pass


# -- corpus ------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusItem:
    id: str
    algebra: LieAlgebra
    bounds: tuple = ()
    meta: tuple = ()

    @property
    def bounds_map(self) -> dict | None:
        return dict(self.bounds) or None


# direct_sum(affine2, sl2) over GF(5) is 5-dimensional, one past the default limit
CATALOG_BOUNDS = {"affine2_sl2": {5: 5}}
CATALOG_FIELDS = (GF(2), GF(3), GF(5))


def catalog_corpus(fields: Iterable[FieldSpec] = CATALOG_FIELDS, include_rational: bool = True) -> list[CorpusItem]:
    items = []
    for F in list(fields) + ([Q] if include_rational else []):
        for name in sorted(ENTRIES):
            entry = ENTRIES[name]
            if not entry.allows(F):
                continue
            bounds = CATALOG_BOUNDS.get(name, {}) if F.p == 5 else {}
            items.append(CorpusItem(f"{name}@{F.name}", entry.build(F), tuple(sorted(bounds.items()))))
    return items


def random_corpus(max_dim: int, F: FieldSpec, count: int, seed) -> list[CorpusItem]:
    """Dimensions cycle through ``2..max_dim``; each draw has its own derived seed."""
    dims = list(range(2, max_dim + 1)) or [max_dim]
    items = []
    for i in range(count):
        dim = dims[i % len(dims)]
        sample = sample_algebra(dim, F, f"{seed}:{i}")
        items.append(
            CorpusItem(
                f"random-{F.name}-d{dim}-{seed}-{i:04d}",
                sample.algebra,
                meta=(("rejections", sample.rejections), ("seed", sample.seed)),
            )
        )
    return items


# -- per-algebra cache -------------------------------------------------------------


class Context:
    """Lazily computed facts about one algebra, shared across checks."""

    def __init__(self, algebra: LieAlgebra, bounds=None, pool: dict | None = None):
        self.L = algebra
        self.bounds = bounds
        self.pool = {} if pool is None else pool
        self._ic: dict = {}
        self._in_class: dict = {}

    def sub(self, algebra: LieAlgebra) -> "Context":
        key = (algebra, _bounds_key(self.bounds))
        if key not in self.pool:
            self.pool[key] = Context(algebra, self.bounds, self.pool)
        return self.pool[key]

    @cached_property
    def lattice(self):
        return build_lattice(self.L, self.bounds)

    @property
    def ideals(self) -> tuple:
        return self.lattice.ideals

    @property
    def maximals(self) -> tuple:
        return self.lattice.maximal_subalgebras if self.L.dim else ()

    def ic(self, m: Subspace):
        if m not in self._ic:
            self._ic[m] = index_complex(self.L, m, self.bounds)
        return self._ic[m]

    def eta(self, m: Subspace) -> int:
        return self.ic(m).eta

    def codim(self, m: Subspace) -> int:
        return self.L.dim - m.dim

    @cached_property
    def flags(self):
        return classify_basic(self.L)

    @cached_property
    def supersolvable(self) -> TriBool:
        return is_supersolvable(self.L)

    @cached_property
    def phi(self) -> Subspace:
        return frattini(self.L, self.bounds)[1]

    def in_S_class(self, H: HomomorphClass) -> bool:
        """Membership in S(H): every maximal M has C ∈ S(M) with C/k(C) ∈ H."""
        if H.name not in self._in_class:
            self._in_class[H.name] = all(
                any(H(r.quotient) for r in self.ic(m).S_records) for m in self.maximals
            )
        return self._in_class[H.name]


def _witness(ctx: Context, **parts) -> dict:
    out = {"algebra": algebra_to_doc(ctx.L)}
    out.update({k: _plain(v) for k, v in parts.items()})
    return out


def _plain(value):
    if isinstance(value, Subspace):
        return value.format_rows()
    if isinstance(value, LieAlgebra):
        return algebra_to_doc(value)
    if isinstance(value, TriBool):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _fail(ctx: Context, message: str, **parts):
    raise Violation(message, **_witness(ctx, **parts))


# -- finite-field checks -----------------------------------------------------------


def check_lemma_1_1(ctx: Context):
    for m in ctx.maximals:
        if not ctx.ic(m).ideal_records:
            _fail(ctx, "maximal subalgebra without an ideal completion", maximal=m)


def check_cor_2_3(ctx: Context):
    for m in ctx.maximals:
        dims = sorted({r.quotient_dim for r in ctx.ic(m).ideal_records})
        if len(dims) != 1:
            _fail(ctx, "ideal completions with different quotient dimensions", maximal=m, quotient_dims=dims)


def check_thm_2_2(ctx: Context):
    undecided = 0
    for m in ctx.maximals:
        recs = ctx.ic(m).ideal_records
        for r, s in itertools.combinations(recs, 2):
            res = is_isomorphic(r.quotient, s.quotient)
            if res.verdict is TriBool.NO:
                _fail(ctx, "ideal completion quotients are not isomorphic", maximal=m,
                      completions=[r.space, s.space], invariant=res.invariant)
            if res.verdict is TriBool.UNKNOWN:
                undecided += 1
            elif res.witness is not None and not verify_isomorphism(r.quotient, s.quotient, res.witness):
                _fail(ctx, "isomorphism witness does not verify", maximal=m, completions=[r.space, s.space])
    if undecided:
        raise Skipped(f"isomorphism undecided for {undecided} pair(s) of completion quotients")


def check_cor_2_5(ctx: Context):
    for m in ctx.maximals:
        eta = ctx.eta(m)
        for B in ctx.ideals:
            if B.is_zero or not B <= m:
                continue
            qm = quotient(ctx.L, B)
            qctx = ctx.sub(qm.quotient)
            mq = qm.project_subspace(m)
            if mq not in qctx.maximals:
                _fail(ctx, "image of a maximal subalgebra is not maximal in the quotient", maximal=m, ideal=B)
            if qctx.eta(mq) != eta:
                _fail(ctx, "ideal index changes on factoring an ideal inside M", maximal=m, ideal=B,
                      eta=eta, eta_quotient=qctx.eta(mq))


def check_thm_2_6(ctx: Context):
    for m in ctx.maximals:
        c_ideal = is_c_ideal(ctx.L, m, ctx.bounds)
        if c_ideal is TriBool.UNKNOWN:
            raise Skipped("c-ideal test undecided")
        if (c_ideal is TriBool.YES) != (ctx.eta(m) == ctx.codim(m)):
            _fail(ctx, "c-ideal status disagrees with eta = codim", maximal=m,
                  c_ideal=c_ideal, eta=ctx.eta(m), codim=ctx.codim(m))


def check_cor_2_7(ctx: Context):
    bad = [m for m in ctx.maximals if ctx.eta(m) != ctx.codim(m)]
    if ctx.flags.solvable == bool(bad):
        _fail(ctx, "solvability disagrees with eta = codim for all maximal M",
              solvable=ctx.flags.solvable, maximal=bad[0] if bad else None)


def check_cor_2_9(ctx: Context):
    bad = [m for m in ctx.maximals if ctx.eta(m) != 1]
    ss = ctx.supersolvable
    if ss is TriBool.UNKNOWN:
        raise Skipped("supersolvability undecided at the configured depth")
    if (ss is TriBool.YES) == bool(bad):
        _fail(ctx, "supersolvability disagrees with eta = 1 for all maximal M",
              supersolvable=ss, maximal=bad[0] if bad else None)


def check_thm_2_10(ctx: Context):
    N = nilradical(ctx.L, ctx.bounds)
    for m in ctx.maximals:
        if N <= m or ctx.eta(m) != 1:
            continue
        if is_supersolvable(subalgebra_algebra(ctx.L, m)) is not TriBool.YES:
            continue
        if ctx.supersolvable is not TriBool.YES:
            _fail(ctx, "hypotheses hold for M but L is not supersolvable", maximal=m, nilradical=N)


def check_thm_2_11(ctx: Context):
    lacking = [m for m in ctx.maximals if not any(r.quotient_abelian for r in ctx.ic(m).ideal_records)]
    if ctx.flags.solvable == bool(lacking):
        _fail(ctx, "solvability disagrees with abelian ideal completions",
              solvable=ctx.flags.solvable, maximal=lacking[0] if lacking else None)


def check_thm_2_12(ctx: Context):
    _, phis = phi_star(ctx.L, ctx.bounds)
    R = radical(ctx.L, ctx.bounds)
    if phis != R:
        _fail(ctx, "phi* differs from the solvable radical", phi_star=phis, radical=R)


def _splits_over(ctx: Context, D: Subspace) -> bool:
    want = ctx.L.dim - D.dim
    return any(s.dim == want and (s & D).is_zero for s in ctx.lattice.subalgebras)


def check_prop_3_2(ctx: Context):
    L = ctx.L
    if not ctx.flags.completely_solvable:
        return
    has_abelian_max = any(L.is_abelian_subspace(m) for m in ctx.maximals)
    case_i = any(I.dim == L.dim - 1 and L.is_abelian_subspace(I) for I in ctx.ideals)
    chain = L.series("derived").chain
    D1 = chain[1] if len(chain) > 1 else L.zero()
    D2 = chain[2] if len(chain) > 2 else D1
    chief = D2 < D1 and not any(D2 < I < D1 for I in ctx.ideals)
    case_ii = D2 == ctx.phi == L.center() and chief and _splits_over(ctx, D1)
    if has_abelian_max != (case_i or case_ii):
        _fail(ctx, "abelian maximal subalgebra disagrees with the structural alternatives",
              abelian_maximal=has_abelian_max, case_i=case_i, case_ii=case_ii)


def check_thm_4_4(ctx: Context):
    bad = [m for m in ctx.maximals if not any(r.quotient_dim == 1 for r in ctx.ic(m).S_records)]
    ss = ctx.supersolvable
    if ss is TriBool.UNKNOWN:
        raise Skipped("supersolvability undecided at the configured depth")
    if (ss is TriBool.YES) == bool(bad):
        _fail(ctx, "supersolvability disagrees with S(M) completions of quotient dimension 1",
              supersolvable=ss, maximal=bad[0] if bad else None)


PROP_4_5_CLASSES = (ABELIAN, NILPOTENT, SOLVABLE)


def check_prop_4_5(ctx: Context):
    variants = (("maximal", lambda r: r.is_maximal_in_IM), ("subideal", lambda r: r.is_subideal))
    for H in PROP_4_5_CLASSES:
        for m in ctx.maximals:
            recs = ctx.ic(m).records
            for kind, keep in variants:
                good = [r for r in recs if keep(r) and H(r.quotient)]
                if not good:
                    continue
                for N in ctx.ideals:
                    if N <= m and not any(N <= r.space for r in good):
                        _fail(ctx, f"no {kind} completion in {H.name} contains the ideal N",
                              homomorph=H.name, variant=kind, maximal=m, ideal=N,
                              completion=good[0].space,
                              completions_containing_N=sum(N <= r.space for r in recs))


def check_SH_homomorph(ctx: Context):
    L = ctx.L
    for H in (ABELIAN, NILPOTENT):
        inside = ctx.in_S_class(H)
        if inside:
            for B in ctx.ideals:
                if B.is_zero:
                    continue
                if not ctx.sub(quotient(L, B).quotient).in_S_class(H):
                    _fail(ctx, "S(H) not closed under a quotient", homomorph=H.name, ideal=B)
        phi = ctx.phi
        if not phi.is_zero and ctx.sub(quotient(L, phi).quotient).in_S_class(H) and not inside:
            _fail(ctx, "S(H) not saturated", homomorph=H.name, frattini_ideal=phi)


def check_homomorph_closure(ctx: Context):
    for H in CLASSES.values():
        bad = closure_violations(H, ctx.L, ctx.bounds)
        if bad:
            _fail(ctx, "class not closed under quotients and ideals", homomorph=H.name,
                  kind=bad[0]["kind"], ideal=bad[0]["ideal"])


# -- oracle equivalences -----------------------------------------------------------


def check_oracle_strict_core(ctx: Context):
    for b in ctx.lattice.subalgebras:
        want = ctx.L.zero()
        for I in ctx.ideals:
            if I < b:
                want = want + I
        got = strict_core(ctx.L, b, ctx.bounds)
        if got != want:
            _fail(ctx, "strict core disagrees with its enumeration definition", subalgebra=b, fast=got, enumerated=want)


def check_oracle_core(ctx: Context):
    for b in ctx.lattice.subalgebras:
        inside = [I for I in ctx.ideals if I <= b]
        want = max(inside, key=lambda I: I.dim)
        got = ctx.L.core(b)
        if got != want or any(not I <= want for I in inside):
            _fail(ctx, "core disagrees with the largest contained ideal", subalgebra=b, fast=got, enumerated=want)


def subideals_by_chains(L: LieAlgebra, subalgebras: Iterable[Subspace]) -> set:
    """Subalgebras reachable from ``L`` by descending chains of ideals."""
    subs = list(subalgebras)
    found = {L.full()}
    frontier = [L.full()]
    while frontier:
        S = frontier.pop()
        for T in subs:
            if T in found or not T <= S:
                continue
            if L.product_space(S, T) <= T:
                found.add(T)
                frontier.append(T)
    return found


def check_oracle_subideal(ctx: Context):
    brute = subideals_by_chains(ctx.L, ctx.lattice.subalgebras)
    for b in ctx.lattice.subalgebras:
        if is_subideal(ctx.L, b) != (b in brute):
            _fail(ctx, "idealizer tower disagrees with chain search", subalgebra=b, chain_search=b in brute)


def _has_ideal_flag(ctx: Context) -> bool:
    """Search the enumerated ideals for 0 = I0 < I1 < ... < In = L with 1-dim steps."""
    by_dim: dict[int, list] = {}
    for I in ctx.ideals:
        by_dim.setdefault(I.dim, []).append(I)
    level = {ctx.L.zero()}
    for d in range(1, ctx.L.dim + 1):
        level = {J for J in by_dim.get(d, []) if any(I <= J for I in level)}
        if not level:
            return False
    return True


def check_oracle_supersolvable(ctx: Context):
    direct = ctx.supersolvable
    if direct is TriBool.UNKNOWN:
        raise Skipped("supersolvability undecided at the configured depth")
    by_eta = all(ctx.eta(m) == 1 for m in ctx.maximals)
    by_flag = _has_ideal_flag(ctx)
    if not ((direct is TriBool.YES) == by_eta == by_flag):
        _fail(ctx, "supersolvability procedures disagree", direct=direct, eta_criterion=by_eta, ideal_flag=by_flag)


FINITE_CHECKS: dict[str, Callable[[Context], None]] = {
    "lemma_1_1": check_lemma_1_1,
    "thm_2_2": check_thm_2_2,
    "cor_2_3": check_cor_2_3,
    "cor_2_5": check_cor_2_5,
    "thm_2_6": check_thm_2_6,
    "cor_2_7": check_cor_2_7,
    "cor_2_9": check_cor_2_9,
    "thm_2_10": check_thm_2_10,
    "thm_2_11": check_thm_2_11,
    "thm_2_12": check_thm_2_12,
    "prop_3_2": check_prop_3_2,
    "thm_4_4": check_thm_4_4,
    "prop_4_5": check_prop_4_5,
    "SH_homomorph": check_SH_homomorph,
    "homomorph_closure": check_homomorph_closure,
    "oracle_strict_core": check_oracle_strict_core,
    "oracle_core": check_oracle_core,
    "oracle_subideal": check_oracle_subideal,
    "oracle_supersolvable": check_oracle_supersolvable,
}

# Statements whose hypotheses need an algebraically closed field.
NOT_INSTANTIABLE_CHECKS = {
    "prop_3_3": "abelian maximal subalgebra over an algebraically closed field",
    "thm_3_4": "abelian maximal completion gives an abelian ideal completion (algebraically closed field)",
    "cor_3_5": "solvability via abelian maximal completions (algebraically closed field)",
    "prop_4_1": "supersolvability via maximal completions (algebraically closed, characteristic zero)",
    "cor_2_8_closed_field": "solvable maximal subalgebra with eta = codim (algebraically closed, characteristic > 5)",
}


# -- rational targeted checks ------------------------------------------------------


def _require(cond: bool, message: str, L: LieAlgebra, **parts):
    if not cond:
        raise Violation(message, algebra=algebra_to_doc(L), **{k: _plain(v) for k, v in parts.items()})


def _ideal_set(L: LieAlgebra) -> set:
    return set(rational_ideals(L)[0])


def targeted_ex31() -> dict:
    L = ex31()
    e = [L.basis_vector(i) for i in range(6)]
    S, Sbar = L.span(e[:3]), L.span(e[3:])
    M = L.span([tuple(a + b for a, b in zip(e[i], e[i + 3])) for i in range(3)])
    C = L.span([e[0], e[3]])
    _require(_ideal_set(L) == {L.zero(), S, Sbar, L.full()}, "ideal set is not {0, S, S', L}", L)
    _require(is_maximal(L, M) is TriBool.YES, "diagonal not certified maximal", L, maximal=M)
    _require(L.is_abelian_subspace(C), "C is not abelian", L, completion=C)
    _require(is_completion(L, C, M), "C is not a completion of the diagonal", L, completion=C)
    _require(L.centralizer(C) == C, "C is not self-centralising", L, completion=C)
    comps = ideal_completions(L, M)
    _require(bool(comps), "diagonal has no ideal completion", L)
    for c, k in comps:
        _require(not L.product_space(c, c) <= k, "abelian ideal completion found", L, completion=c)
    return {"ideal_completions": [_plain(c) for c, _ in comps], "completion": _plain(C)}


def targeted_ex41() -> dict:
    L = ex41()
    a, e1, e2, e3 = (L.basis_vector(i) for i in range(4))
    S, A = L.span([e1, e2, e3]), L.span([a])
    _require(is_maximal(L, S) is TriBool.YES, "S is not maximal", L)
    comps = ideal_completions(L, S)
    _require((A, L.zero()) in comps, "<a> is not an ideal completion of S", L)
    _require(ideal_index(L, S) == 1, "eta(L:S) != 1", L)
    Mx, Cy = L.span([a, e1]), L.span([a, e2])
    _require(is_maximal(L, Mx) is TriBool.YES, "<a, e1> not certified maximal", L, maximal=Mx)
    _require(is_completion(L, Cy, Mx), "<a, e2> is not a completion of <a, e1>", L)
    _require(Cy.dim - strict_core(L, Cy).dim == 1, "<a, e2> quotient dimension is not 1", L)
    _require(is_supersolvable(L) is TriBool.NO, "L reported supersolvable", L)
    qm = quotient(L, A)
    target = so3q()
    images = [qm.project(v) for v in (e1, e2, e3)]
    _require(verify_isomorphism(target, qm.quotient, images), "L/<a> is not isomorphic to S by projection", L)
    _require(is_nonsplit_simple_3dim(qm.quotient), "L/<a> is not non-split simple", L)
    return {"eta_S": 1, "completion_quotient_dim": 1, "quotient_isomorphic_to": "so3q"}


def targeted_not_homomorph() -> dict:
    """S is outside I(Abelian) although Qa ⊕ S is inside it."""
    S = so3q()
    M0 = S.span([S.basis_vector(0)])
    _require(_ideal_set(S) == {S.zero(), S.full()}, "S is not simple", S)
    _require(is_maximal(S, M0) is TriBool.YES, "<e1> not certified maximal", S, maximal=M0)
    k = strict_core(S, S.full())
    _require(k.is_zero and is_completion(S, S.full(), M0), "S is not a completion of <e1>", S)
    # every completion is a subalgebra of S, so S is the unique maximal completion
    _require(not S.product_space(S.full(), S.full()) <= k, "S/k(S) is abelian", S)
    # the lift: ideal completions are maximal in I(M), and Qa, <a, y> have abelian quotients
    L = ex41()
    a, e1, e2, _ = (L.basis_vector(i) for i in range(4))
    A, Mx, Cy = L.span([a]), L.span([a, e1]), L.span([a, e2])
    SL = L.span([L.basis_vector(i) for i in (1, 2, 3)])
    _require((A, L.zero()) in ideal_completions(L, SL), "<a> is not an ideal completion of S in L", L)
    _require(is_maximal(L, Cy) is TriBool.YES and not strict_core(L, L.full()) <= Mx,
             "<a, e2> is not a maximal completion of <a, e1>", L)
    return {"S_in_I_abelian": False, "unique_maximal_completion": "S", "quotient_abelian": False}


def targeted_opening() -> dict:
    L = affine2(Q)
    x, y = L.basis_vector(0), L.basis_vector(1)
    M = L.span([(1, 1)])
    X, Y = L.span([x]), L.span([y])
    _require(is_maximal(L, M) is TriBool.YES, "<x+y> is not maximal", L)
    _require(is_completion(L, X, M) and not L.is_ideal(X), "<x> is not a non-ideal completion", L)
    # the only subalgebra above <x> is L, and k(L) = <y> is not inside M
    _require(not strict_core(L, L.full()) <= M, "L itself is a completion", L)
    _require((Y, L.zero()) in ideal_completions(L, M), "<y> is not an ideal completion", L)
    _require(ideal_index(L, M) == 1, "eta != 1", L)
    return {"eta": 1, "maximal_non_ideal_completion": _plain(X), "ideal_completion": _plain(Y)}


def check_cor_2_8_affine2() -> dict:
    L = affine2(Q)
    M = L.span([L.basis_vector(0)])
    hyp = is_maximal(L, M) is TriBool.YES and classify_basic(subalgebra_algebra(L, M)).solvable
    hyp = hyp and ideal_index(L, M) == L.dim - M.dim
    _require(hyp, "no solvable maximal subalgebra with eta = codim found", L)
    _require(classify_basic(L).solvable, "L is not solvable", L)
    return {"maximal": _plain(M), "eta": 1, "solvable": True}


def check_cor_2_8_so3q() -> dict:
    L = so3q()
    _require(_ideal_set(L) == {L.zero(), L.full()}, "so3q is not simple", L)
    # only ideal completion of any maximal M is L itself with k(L) = 0, so eta = 3;
    # maximal subalgebras are nonzero (0 < <e1> < L), hence codim <= 2 < eta
    _require(strict_core(L, L.full()).is_zero, "k(L) != 0", L)
    _require(L.is_subalgebra(L.span([L.basis_vector(0)])), "<e1> is not a subalgebra", L)
    _require(not classify_basic(L).solvable, "so3q reported solvable", L)
    return {"hypothesis": False, "solvable": False, "eta_every_maximal": 3}


RATIONAL_CHECKS: dict[str, list[tuple[str, Callable[[], dict]]]] = {
    "cor_2_8": [("affine2@Q", check_cor_2_8_affine2), ("so3q@Q", check_cor_2_8_so3q)],
    "targeted_ex31": [("ex31@Q", targeted_ex31)],
    "targeted_ex41": [("ex41@Q", targeted_ex41)],
    "targeted_not_homomorph": [("so3q@Q", targeted_not_homomorph)],
    "targeted_opening": [("affine2@Q", targeted_opening)],
}

ALL_CHECKS = list(FINITE_CHECKS) + list(RATIONAL_CHECKS) + list(NOT_INSTANTIABLE_CHECKS)


# -- reports -----------------------------------------------------------------------


@dataclass
class Entry:
    check: str
    algebra: str
    verdict: str
    reason: str | None = None
    witness: dict | None = None
    detail: dict | None = None

    def to_json(self) -> dict:
        out = {"check": self.check, "algebra": self.algebra, "verdict": self.verdict}
        for key in ("reason", "witness", "detail"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass
class VerificationReport:
    entries: list[Entry] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for e in self.entries:
            counts[e.verdict] += 1
        return counts

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.verdict == "fail"]

    def to_json(self) -> dict:
        return {
            "parameters": self.parameters,
            "entries": [e.to_json() for e in self.entries],
            "summary": self.summary,
        }

    def table(self) -> str:
        width = max([len(e.check) for e in self.entries] + [5])
        lines = []
        for e in self.entries:
            note = e.reason or ""
            lines.append(f"{e.check:<{width}}  {e.verdict.upper():<4}  {e.algebra}  {note}".rstrip())
        s = self.summary
        lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['skip']} skip")
        return "\n".join(lines)


def _run_one(check_id: str, fn, ctx: Context, item_id: str) -> Entry:
    try:
        fn(ctx)
    except Violation as v:
        return Entry(check_id, item_id, "fail", str(v), v.witness)
    except Skipped as s:
        return Entry(check_id, item_id, "skip", str(s))
    except (Unsupported, BoundExceeded) as exc:
        return Entry(check_id, item_id, "skip", f"{type(exc).__name__}: {exc}")
    except LieIndexError as exc:
        return Entry(check_id, item_id, "fail", f"{type(exc).__name__}: {exc}", _witness(ctx))
    return Entry(check_id, item_id, "pass")


def _run_rational(check_id: str, item_id: str, fn) -> Entry:
    try:
        detail = fn()
    except Violation as v:
        return Entry(check_id, item_id, "fail", str(v), v.witness)
    except (Unsupported, BoundExceeded) as exc:
        return Entry(check_id, item_id, "skip", f"{type(exc).__name__}: {exc}")
    except LieIndexError as exc:
        return Entry(check_id, item_id, "fail", f"{type(exc).__name__}: {exc}", {})
    return Entry(check_id, item_id, "pass", detail=_plain(detail))


def resolve_checks(names: Iterable[str] | str | None) -> list[str]:
    if names is None or names == "all":
        return list(ALL_CHECKS)
    if isinstance(names, str):
        names = [n.strip() for n in names.split(",") if n.strip()]
    names = list(names)
    if "all" in names:
        return list(ALL_CHECKS)
    unknown = [n for n in names if n not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(ALL_CHECKS)}")
    return [c for c in ALL_CHECKS if c in names]


def run_suite(items: Iterable[CorpusItem], checks=None, parameters: dict | None = None,
              rational: bool = True) -> VerificationReport:
    """Run ``checks`` over ``items``; rational members go to the targeted checks."""
    selected = resolve_checks(checks)
    report = VerificationReport(parameters=dict(parameters or {}))
    pool: dict = {}
    finite = [it for it in items if it.algebra.field.p]
    for it in finite:
        ctx = Context(it.algebra, it.bounds_map, pool)
        for cid in selected:
            if cid in FINITE_CHECKS:
                report.entries.append(_run_one(cid, FINITE_CHECKS[cid], ctx, it.id))
        pool.clear()
    if rational:
        report.entries.extend(targeted_rational_checks(selected).entries)
    for cid in selected:
        if cid in NOT_INSTANTIABLE_CHECKS:
            report.entries.append(
                Entry(cid, "*", "skip", NOT_INSTANTIABLE, detail={"statement": NOT_INSTANTIABLE_CHECKS[cid]})
            )
    return report


def targeted_rational_checks(checks=None) -> VerificationReport:
    report = VerificationReport()
    for cid in resolve_checks(checks):
        for item_id, fn in RATIONAL_CHECKS.get(cid, []):
            report.entries.append(_run_rational(cid, item_id, fn))
    return report
