"""Named algebras used throughout the tests and the verification corpus."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from .algebra import LieAlgebra, abelian, direct_sum
from .errors import FieldMismatch, UnknownName
from .fields import Q, FieldSpec


def heisenberg3(F: FieldSpec) -> LieAlgebra:
    return LieAlgebra(F, 3, {(0, 1): (0, 0, 1)}, ["x", "y", "z"])


def affine2(F: FieldSpec) -> LieAlgebra:
    return LieAlgebra(F, 2, {(0, 1): (0, 1)}, ["x", "y"])


def nilp4(F: FieldSpec) -> LieAlgebra:
    return LieAlgebra(F, 4, {(0, 1): (0, 0, 1, 0), (1, 2): (0, 0, 0, 1)}, ["a", "b", "c", "d"])


def sl2(F: FieldSpec) -> LieAlgebra:
    if F.p == 2:
        raise FieldMismatch("sl2 is only catalogued in characteristic other than 2")
    return LieAlgebra(F, 3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}, ["h", "e", "f"])


def so3q(F: FieldSpec = Q) -> LieAlgebra:
    """Rational compact form: ``[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2``."""
    if F.p:
        raise FieldMismatch("so3q is a rational algebra")
    return LieAlgebra(F, 3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, -1, 0)}, ["e1", "e2", "e3"])


def ex31(F: FieldSpec = Q) -> LieAlgebra:
    S = so3q(F)
    return direct_sum(S, S, ["e1", "e2", "e3", "e1bar", "e2bar", "e3bar"])


def ex41(F: FieldSpec = Q) -> LieAlgebra:
    return direct_sum(abelian(1, F), so3q(F), ["a", "e1", "e2", "e3"])


def affine2_sl2(F: FieldSpec) -> LieAlgebra:
    return direct_sum(affine2(F), sl2(F))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[FieldSpec], LieAlgebra]
    rational_only: bool = False
    odd_characteristic: bool = False
    facts: tuple = field(default=())

    def allows(self, F: FieldSpec) -> bool:
        if self.rational_only and F.p:
            return False
        if self.odd_characteristic and F.p == 2:
            return False
        return True


ENTRIES = {
    e.name: e
    for e in [
        CatalogEntry("abelian1", lambda F: abelian(1, F), facts=("every subspace is an ideal",)),
        CatalogEntry("abelian2", lambda F: abelian(2, F), facts=("every subspace is an ideal",)),
        CatalogEntry("abelian3", lambda F: abelian(3, F), facts=("every subspace is an ideal",)),
        CatalogEntry(
            "heisenberg3",
            heisenberg3,
            facts=("[x,y]=z", "nilpotent; centre and Frattini ideal are <z>"),
        ),
        CatalogEntry(
            "affine2",
            affine2,
            facts=("[x,y]=y", "<x> is a maximal completion of <x+y> that is not an ideal"),
        ),
        CatalogEntry(
            "nilp4",
            nilp4,
            facts=(
                "[a,b]=c, [b,c]=d",
                "nilpotent, so every subalgebra is a subideal",
                "M=<b,c,d> has completions <a> and <a,c> with strict core 0",
            ),
        ),
        CatalogEntry("sl2", sl2, odd_characteristic=True, facts=("[h,e]=2e, [h,f]=-2f, [e,f]=h", "simple")),
        CatalogEntry(
            "so3q",
            so3q,
            rational_only=True,
            facts=(
                "[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2",
                "non-split simple: Killing form is -2 times the identity",
                "printed sign [e2,e3]=-e1 would make the algebra split (ad e3 has eigenvector e1+e2); the all-positive cyclic signs are used",
            ),
        ),
        CatalogEntry(
            "ex31",
            ex31,
            rational_only=True,
            facts=(
                "S ⊕ S̄ with S = so3q and [S, S̄] = 0",
                "diagonal is maximal; <e1, e1bar> is a self-centralising abelian completion",
                "no abelian ideal completion of the diagonal",
            ),
        ),
        CatalogEntry(
            "ex41",
            ex41,
            rational_only=True,
            facts=(
                "Qa ⊕ so3q",
                "every maximal subalgebra has a maximal completion with one-dimensional quotient",
                "not supersolvable; L/Qa ≅ so3q",
            ),
        ),
        CatalogEntry(
            "affine2_sl2",
            affine2_sl2,
            odd_characteristic=True,
            facts=("radical is the affine2 summand",),
        ),
    ]
}


def catalog_names() -> list[str]:
    return sorted(ENTRIES)


def catalog(name: str, field: FieldSpec | None = None) -> LieAlgebra:
    m = re.fullmatch(r"abelian(\d+)", name)
    if m and name not in ENTRIES:
        return abelian(int(m.group(1)), field or Q)
    try:
        entry = ENTRIES[name]
    except KeyError:
        raise UnknownName(f"unknown catalog entry {name!r}") from None
    if field is None:
        field = Q
    if not entry.allows(field):
        raise FieldMismatch(f"{name} is not available over {field.name}")
    return entry.build(field)
