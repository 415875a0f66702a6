"""Lie algebras given by structure constants, and the basic operations on them."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    AmbientMismatch,
    DuplicatePair,
    FieldMismatch,
    IndexOutOfRange,
    JacobiViolation,
    NotAnIdeal,
)
from .fields import FieldSpec
from .linalg import Subspace, nullspace, reduce, unit_vector


class TriBool(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "TriBool":
        return cls.YES if flag else cls.NO

    def __bool__(self):
        raise TypeError("TriBool has no truth value; compare against TriBool.YES explicitly")


class SeriesKind(enum.Enum):
    DERIVED = "derived"
    LOWER_CENTRAL = "lower_central"


@dataclass(frozen=True)
class SeriesReport:
    kind: SeriesKind
    chain: tuple  # of Subspace, starting at L and ending at the stable term

    @property
    def stable_term(self) -> Subspace:
        return self.chain[-1]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.chain)


@dataclass(frozen=True)
class SubspaceFlags:
    is_subalgebra: bool
    is_ideal: bool


@dataclass(frozen=True)
class BasicFlags:
    abelian: bool
    nilpotent: bool
    solvable: bool
    completely_solvable: bool


class LieAlgebra:
    """A finite-dimensional Lie algebra over an exact field.

    ``brackets`` maps index pairs ``(i, j)`` with ``i < j`` to the coordinate
    vector of ``[b_i, b_j]``; omitted pairs are zero.  The Jacobi identity is
    checked on construction.
    """

    def __init__(
        self,
        field: FieldSpec,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence] | None = None,
        names: Sequence[str] | None = None,
        *,
        validate: bool = True,
    ):
        self.field = field
        self.dim = dim
        if names is None:
            names = [f"e{i + 1}" for i in range(dim)]
        if len(names) != dim or len(set(names)) != dim:
            raise ValueError("basis names must be distinct and there must be exactly dim of them")
        self.names = tuple(names)
        table = {}
        for (i, j), vec in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexOutOfRange(f"pair ({i}, {j}) out of range for dimension {dim}")
            if i >= j:
                raise DuplicatePair(f"bracket pairs must satisfy i < j, got ({i}, {j})")
            if len(vec) != dim:
                raise IndexOutOfRange(f"bracket value for ({i}, {j}) has length {len(vec)}")
            v = tuple(field.coerce(x) for x in vec)
            if any(v):
                table[(i, j)] = v
        self.table = table
        # sparse structure constants: sc[i][j] = [(k, c_ij^k), ...]
        sc = [[() for _ in range(dim)] for _ in range(dim)]
        p = field.p
        for (i, j), v in table.items():
            sc[i][j] = tuple((k, c) for k, c in enumerate(v) if c)
            sc[j][i] = tuple((k, (-c) % p if p else -c) for k, c in enumerate(v) if c)
        self._sc = sc
        if validate:
            bad = self.jacobi_failure()
            if bad is not None:
                raise JacobiViolation(*bad, names=self.names)

    # -- identity -----------------------------------------------------------

    @cached_property
    def key(self):
        return (self.field, self.dim, tuple(sorted(self.table.items())))

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.key == other.key and self.names == other.names

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"LieAlgebra({self.field.name}, dim={self.dim}, brackets={len(self.table)})"

    # -- elements -------------------------------------------------------------

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def vector(self, values: Sequence) -> tuple:
        if len(values) != self.dim:
            raise AmbientMismatch(f"vector of length {len(values)} for an algebra of dimension {self.dim}")
        return tuple(self.field.coerce(x) for x in values)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise AmbientMismatch("bracket arguments must have length dim")
        out = [0] * n
        sc = self._sc
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = sc[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, c in row[j]:
                    out[k] += f * c
        p = self.field.p
        if p:
            return tuple(v % p for v in out)
        return tuple(self.field.coerce(v) for v in out)

    def jacobi_failure(self):
        """First basis triple ``i < j < k`` violating Jacobi, or ``None``."""
        e = [self.basis_vector(i) for i in range(self.dim)]
        for i, j, k in itertools.combinations(range(self.dim), 3):
            a = self.bracket(self.bracket(e[i], e[j]), e[k])
            b = self.bracket(self.bracket(e[j], e[k]), e[i])
            c = self.bracket(self.bracket(e[k], e[i]), e[j])
            total = [x + y + z for x, y, z in zip(a, b, c)]
            if self.field.p:
                total = [t % self.field.p for t in total]
            if any(total):
                return (i, j, k)
        return None

    def ad_matrix(self, x: Sequence) -> list[list]:
        """Matrix of ``ad x``; column ``j`` holds ``[x, b_j]``."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    # -- subspaces ------------------------------------------------------------

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, rows: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, [[self.field.coerce(x) for x in r] for r in rows])

    def _check(self, s: Subspace) -> None:
        if s.ambient_dim != self.dim or s.field != self.field:
            raise AmbientMismatch(
                f"subspace of {s.field.name}^{s.ambient_dim} used with an algebra over {self.field.name} of dimension {self.dim}"
            )

    def product_space(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of ``[x, y]`` over basis vectors of ``a`` and ``b``."""
        self._check(a)
        self._check(b)
        rows = []
        if a == b:
            for s, t in itertools.combinations(a.basis, 2):
                rows.append(self.bracket(s, t))
        else:
            for s in a.basis:
                for t in b.basis:
                    rows.append(self.bracket(s, t))
        return Subspace.span(self.field, self.dim, rows)

    def closure(self, s: Subspace) -> Subspace:
        """The subalgebra generated by ``s``."""
        self._check(s)
        cur = s
        while True:
            nxt = cur + self.product_space(cur, cur)
            if nxt.dim == cur.dim:
                return cur
            cur = nxt

    def is_subalgebra(self, s: Subspace) -> bool:
        self._check(s)
        return all(
            s.contains(self.bracket(x, y)) for x, y in itertools.combinations(s.basis, 2)
        )

    def is_ideal(self, s: Subspace) -> bool:
        self._check(s)
        if s.is_full or s.is_zero:
            return True
        for j in range(self.dim):
            e = self.basis_vector(j)
            for x in s.basis:
                if not s.contains(self.bracket(e, x)):
                    return False
        return True

    def classify_subspace(self, s: Subspace) -> SubspaceFlags:
        ideal = self.is_ideal(s)
        return SubspaceFlags(is_subalgebra=ideal or self.is_subalgebra(s), is_ideal=ideal)

    def _solve_into(self, maps: list[list[tuple]], target: Subspace) -> Subspace:
        """``{v : sum_j v_j m[j] in target for every m in maps}``.

        Each map is given by its images of the standard basis vectors.
        """
        pivset = set(target.pivots)
        free_cols = [c for c in range(self.dim) if c not in pivset]
        equations = []
        for images in maps:
            res = [target.residual(w) for w in images]
            for c in free_cols:
                row = [res[j][c] for j in range(self.dim)]
                if any(row):
                    equations.append(row)
        return nullspace(equations, self.field, self.dim)

    def _bracket_maps(self, vectors: Iterable[Sequence]) -> list[list[tuple]]:
        e = [self.basis_vector(j) for j in range(self.dim)]
        return [[self.bracket(e[j], x) for j in range(self.dim)] for x in vectors]

    def centralizer(self, a: Subspace) -> Subspace:
        """``{x in L : [x, a] = 0}``."""
        self._check(a)
        return self._solve_into(self._bracket_maps(a.basis), self.zero())

    def center(self) -> Subspace:
        return self.centralizer(self.full())

    def idealizer(self, b: Subspace) -> Subspace:
        """Largest ``N`` with ``[N, b] ⊆ b``."""
        self._check(b)
        return self._solve_into(self._bracket_maps(b.basis), b)

    def core(self, b: Subspace) -> Subspace:
        """Largest ideal of L contained in ``b``."""
        self._check(b)
        cur = b
        maps = self._bracket_maps(self.basis_vector(j) for j in range(self.dim))
        while not cur.is_zero:
            nxt = cur & self._solve_into(maps, cur)
            if nxt.dim == cur.dim:
                return cur
            cur = nxt
        return cur

    def series(self, kind: SeriesKind | str = SeriesKind.DERIVED) -> SeriesReport:
        kind = SeriesKind(kind)
        full = self.full()
        chain = [full]
        while True:
            cur = chain[-1]
            if kind is SeriesKind.DERIVED:
                nxt = self.product_space(cur, cur)
            else:
                nxt = self.product_space(full, cur)
            if nxt == cur:
                break
            chain.append(nxt)
            if nxt.is_zero:
                break
        return SeriesReport(kind, tuple(chain))

    def derived_algebra(self) -> Subspace:
        full = self.full()
        return self.product_space(full, full)

    def is_nilpotent_subspace(self, s: Subspace) -> bool:
        """Nilpotency of the subalgebra ``s`` viewed as a Lie algebra."""
        cur = s
        while not cur.is_zero:
            nxt = self.product_space(s, cur)
            if nxt == cur:
                return False
            cur = nxt
        return True

    def is_solvable_subspace(self, s: Subspace) -> bool:
        cur = s
        while not cur.is_zero:
            nxt = self.product_space(cur, cur)
            if nxt == cur:
                return False
            cur = nxt
        return True

    def is_abelian_subspace(self, s: Subspace) -> bool:
        return all(not any(self.bracket(x, y)) for x, y in itertools.combinations(s.basis, 2))

    def killing_form(self) -> list[list]:
        """Gram matrix of ``tr(ad b_i ad b_j)``."""
        n = self.dim
        ads = [self.ad_matrix(self.basis_vector(i)) for i in range(n)]
        gram = [[self.field.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a, b = ads[i], ads[j]
                t = sum(a[r][s] * b[s][r] for r in range(n) for s in range(n))
                t = self.field.coerce(t)
                gram[i][j] = gram[j][i] = t
        return gram


def abelian(n: int, field: FieldSpec) -> LieAlgebra:
    return LieAlgebra(field, n, {})


def validate_algebra(raw: Iterable, field: FieldSpec, dim: int, names: Sequence[str] | None = None) -> LieAlgebra:
    """Build an algebra from ``(i, j, vector)`` entries, rejecting malformed tables.

    Raises ``IndexOutOfRange``, ``DuplicatePair`` or ``JacobiViolation``.
    """
    table = {}
    for i, j, vec in raw:
        if not (0 <= i < dim and 0 <= j < dim):
            raise IndexOutOfRange(f"pair ({i}, {j}) out of range for dimension {dim}")
        if i >= j:
            raise DuplicatePair(f"only pairs with i < j may be given, got ({i}, {j})")
        if (i, j) in table:
            raise DuplicatePair(f"pair ({i}, {j}) given twice")
        table[(i, j)] = vec
    return LieAlgebra(field, dim, table, names)


def subalgebra_algebra(L: LieAlgebra, s: Subspace, names: Sequence[str] | None = None) -> LieAlgebra:
    """The subalgebra ``s`` as an algebra in its own right, on the RREF basis of ``s``."""
    L._check(s)
    table = {}
    for a, b in itertools.combinations(range(s.dim), 2):
        w = L.bracket(s.basis[a], s.basis[b])
        if any(s.residual(w)):
            raise ValueError("subspace is not closed under the bracket")
        table[(a, b)] = s.coordinates(w)
    if names is None:
        names = _row_names(L, s.basis)
    return LieAlgebra(L.field, s.dim, table, names)


def _row_names(L: LieAlgebra, rows) -> list[str]:
    names = []
    for r in rows:
        support = [i for i, x in enumerate(r) if x]
        if len(support) == 1 and r[support[0]] == 1:
            names.append(L.names[support[0]])
        else:
            names.append("+".join(L.names[i] if r[i] == 1 else f"{L.field.format(r[i])}{L.names[i]}" for i in support))
    if len(set(names)) != len(names):
        names = [f"u{k + 1}" for k in range(len(rows))]
    return names


@dataclass(frozen=True)
class QuotientMap:
    """Canonical projection ``L -> L/B`` on complement-basis coordinates."""

    parent: LieAlgebra
    ideal: Subspace
    quotient: LieAlgebra
    columns: tuple[int, ...]

    def project(self, v: Sequence) -> tuple:
        r = self.ideal.residual([self.parent.field.coerce(x) for x in v])
        return tuple(r[c] for c in self.columns)

    def lift(self, q: Sequence) -> tuple:
        v = [self.parent.field.zero] * self.parent.dim
        for c, x in zip(self.columns, q):
            v[c] = self.parent.field.coerce(x)
        return tuple(v)

    def project_subspace(self, s: Subspace) -> Subspace:
        return self.quotient.span(self.project(r) for r in s.basis)

    def preimage(self, s: Subspace) -> Subspace:
        return self.ideal + self.parent.span(self.lift(r) for r in s.basis)


def quotient(L: LieAlgebra, b: Subspace) -> QuotientMap:
    if not L.is_ideal(b):
        raise NotAnIdeal(f"{b!r} is not an ideal")
    piv = set(b.pivots)
    cols = tuple(c for c in range(L.dim) if c not in piv)
    qmap = QuotientMap(L, b, None, cols)  # type: ignore[arg-type]
    table = {}
    for s, t in itertools.combinations(range(len(cols)), 2):
        table[(s, t)] = qmap.project(L.bracket(L.basis_vector(cols[s]), L.basis_vector(cols[t])))
    Q = LieAlgebra(L.field, len(cols), table, [L.names[c] for c in cols])
    return QuotientMap(L, b, Q, cols)


def subquotient(L: LieAlgebra, c: Subspace, k: Subspace) -> LieAlgebra:
    """``c/k`` for a subalgebra ``c`` and a subspace ``k ⊆ c`` that is an ideal of ``c``."""
    C = subalgebra_algebra(L, c)
    kk = C.span(c.coordinates(r) for r in k.basis)
    return quotient(C, kk).quotient


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, names: Sequence[str] | None = None) -> LieAlgebra:
    if L1.field != L2.field:
        raise FieldMismatch(f"cannot add algebras over {L1.field.name} and {L2.field.name}")
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    zero = L1.field.zero
    table = {}
    for (i, j), v in L1.table.items():
        table[(i, j)] = tuple(v) + (zero,) * n2
    for (i, j), v in L2.table.items():
        table[(i + n1, j + n1)] = (zero,) * n1 + tuple(v)
    if names is None:
        names = list(L1.names) + list(L2.names)
        if len(set(names)) != n:
            names = list(L1.names) + [f"{x}'" for x in L2.names]
    return LieAlgebra(L1.field, n, table, names)


def classify_basic(L: LieAlgebra) -> BasicFlags:
    derived = L.series(SeriesKind.DERIVED)
    lower = L.series(SeriesKind.LOWER_CENTRAL)
    d1 = L.derived_algebra()
    return BasicFlags(
        abelian=d1.is_zero,
        nilpotent=lower.stable_term.is_zero,
        solvable=derived.stable_term.is_zero,
        completely_solvable=L.is_nilpotent_subspace(d1),
    )


# -- isomorphism ----------------------------------------------------------------

GL_SEARCH_LIMIT = 10**7


@dataclass(frozen=True)
class IsoResult:
    verdict: TriBool
    witness: tuple | None = None  # images of L1's basis vectors in L2 coordinates
    invariant: str | None = None


def invariants(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "derived_dims": L.series(SeriesKind.DERIVED).dims,
        "lower_central_dims": L.series(SeriesKind.LOWER_CENTRAL).dims,
        "center_dim": L.center().dim,
        "abelian": L.derived_algebra().is_zero,
    }


def gl_order(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def verify_isomorphism(L1: LieAlgebra, L2: LieAlgebra, images: Sequence[Sequence]) -> bool:
    """Check that ``b_i -> images[i]`` is a bijective bracket-preserving map."""
    n = L1.dim
    if L2.dim != n or len(images) != n:
        return False
    if n and reduce(images, L2.field, n)[1] != n:
        return False

    def phi(v):
        out = [L2.field.zero] * n
        for i, c in enumerate(v):
            if c:
                out = [a + c * b for a, b in zip(out, images[i])]
        return tuple(L2.field.coerce(x) for x in out)

    for i, j in itertools.combinations(range(n), 2):
        lhs = phi(L1.bracket(L1.basis_vector(i), L1.basis_vector(j)))
        if lhs != L2.bracket(images[i], images[j]):
            return False
    return True


def is_isomorphic(L1: LieAlgebra, L2: LieAlgebra, max_group: int = GL_SEARCH_LIMIT) -> IsoResult:
    if L1.field != L2.field:
        return IsoResult(TriBool.NO, invariant="field")
    inv1, inv2 = invariants(L1), invariants(L2)
    for name in inv1:
        if inv1[name] != inv2[name]:
            return IsoResult(TriBool.NO, invariant=name)
    n = L1.dim
    if inv1["abelian"] or L1.key == L2.key:
        ident = tuple(L2.basis_vector(i) for i in range(n))
        return IsoResult(TriBool.YES, witness=ident)
    if not L1.field.p:
        if n == 2:
            w = _two_dim_witness(L1, L2)
            return IsoResult(TriBool.YES, witness=w)
        return IsoResult(TriBool.UNKNOWN)
    if gl_order(n, L1.field.p) > max_group:
        return IsoResult(TriBool.UNKNOWN)
    w = _search_isomorphism(L1, L2)
    if w is None:
        return IsoResult(TriBool.NO, invariant="exhaustive basis-change search")
    return IsoResult(TriBool.YES, witness=w)


def _normal_form_2d(L: LieAlgebra):
    """Basis ``(x, y)`` of a non-abelian 2-dim algebra with ``[x, y] = y``."""
    y = L.derived_algebra().basis[0]
    x = next(L.basis_vector(i) for i in range(2) if not L.derived_algebra().contains(L.basis_vector(i)))
    lam = L.derived_algebra().coordinates(L.bracket(x, y))[0]
    inv = L.field.inv(lam)
    x = tuple(L.field.coerce(inv * c) for c in x)
    return x, y


def _two_dim_witness(L1: LieAlgebra, L2: LieAlgebra) -> tuple:
    x1, y1 = _normal_form_2d(L1)
    x2, y2 = _normal_form_2d(L2)
    # solve b_i = a_i x1 + c_i y1 and send x1 -> x2, y1 -> y2
    f = L1.field
    det = x1[0] * y1[1] - x1[1] * y1[0]
    inv = f.inv(det)
    images = []
    for i in range(2):
        e = [f.zero, f.zero]
        e[i] = f.one
        a = f.coerce((e[0] * y1[1] - e[1] * y1[0]) * inv)
        c = f.coerce((x1[0] * e[1] - x1[1] * e[0]) * inv)
        images.append(tuple(f.coerce(a * u + c * v) for u, v in zip(x2, y2)))
    return tuple(images)


def _search_isomorphism(L1: LieAlgebra, L2: LieAlgebra):
    n, p = L1.dim, L1.field.p
    candidates = [v for v in itertools.product(range(p), repeat=n) if any(v)]
    e = [L1.basis_vector(i) for i in range(n)]
    # pairs whose bracket constraint becomes checkable once index k is assigned
    checks: list[list] = [[] for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        w = L1.bracket(e[i], e[j])
        support = [t for t, c in enumerate(w) if c]
        k = max([j] + support)
        checks[k].append((i, j, [(t, w[t]) for t in support]))

    images: list[tuple] = []

    def consistent(k):
        for i, j, coeffs in checks[k]:
            lhs = [0] * n
            for t, c in coeffs:
                lhs = [(a + c * b) % p for a, b in zip(lhs, images[t])]
            if tuple(lhs) != L2.bracket(images[i], images[j]):
                return False
        return True

    def extend(k, span: Subspace):
        if k == n:
            return True
        for v in candidates:
            if span.contains(v):
                continue
            images.append(v)
            if consistent(k) and extend(k + 1, span + Subspace.span(L2.field, n, [v])):
                return True
            images.pop()
        return False

    if extend(0, Subspace.zero(L2.field, n)):
        return tuple(images)
    return None
