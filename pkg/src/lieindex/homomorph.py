"""Classes of algebras closed under epimorphic images and under ideals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import LieAlgebra, classify_basic, quotient, subalgebra_algebra
from .lattice import build_lattice


@dataclass(frozen=True)
class HomomorphClass:
    name: str
    contains: Callable[[LieAlgebra], bool]

    def __call__(self, L: LieAlgebra) -> bool:
        return self.contains(L)


ABELIAN = HomomorphClass("abelian", lambda L: not L.table)
NILPOTENT = HomomorphClass("nilpotent", lambda L: classify_basic(L).nilpotent)
SOLVABLE = HomomorphClass("solvable", lambda L: classify_basic(L).solvable)
TRIVIAL = HomomorphClass("trivial", lambda L: L.dim == 0)

CLASSES = {h.name: h for h in (ABELIAN, NILPOTENT, SOLVABLE, TRIVIAL)}


def closure_violations(H: HomomorphClass, L: LieAlgebra, bounds=None) -> list[dict]:
    """Quotients and ideals of ``L ∈ H`` that fall outside ``H``."""
    if not H(L):
        return []
    bad = []
    for I in build_lattice(L, bounds).ideals:
        if not H(quotient(L, I).quotient):
            bad.append({"kind": "quotient", "ideal": I})
        if not H(subalgebra_algebra(L, I)):
            bad.append({"kind": "ideal", "ideal": I})
    return bad
