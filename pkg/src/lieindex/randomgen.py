"""Rejection sampling of structure-constant tables over prime fields."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import LieAlgebra
from .errors import GiveUp, JacobiViolation, Unsupported
from .fields import FieldSpec

DEFAULT_BUDGET = 200_000
MAX_RANDOM_DIM = 4


@dataclass(frozen=True)
class Sample:
    algebra: LieAlgebra
    seed: str
    rejections: int


def sample_algebra(dim: int, field: FieldSpec, seed, budget: int = DEFAULT_BUDGET) -> Sample:
    """Draw uniform tables until one satisfies Jacobi; deterministic in ``seed``."""
    if not field.p:
        raise Unsupported("random algebras are drawn over prime fields only")
    if dim > MAX_RANDOM_DIM:
        raise Unsupported(f"random algebras are limited to dimension {MAX_RANDOM_DIM}")
    rng = random.Random(str(seed))
    pairs = list(itertools.combinations(range(dim), 2))
    for attempt in range(budget):
        table = {pair: tuple(rng.randrange(field.p) for _ in range(dim)) for pair in pairs}
        try:
            L = LieAlgebra(field, dim, table)
        except JacobiViolation:
            continue
        return Sample(L, str(seed), attempt)
    raise GiveUp(f"no Jacobi-valid table in {budget} attempts (dim {dim}, {field.name}, seed {seed})")


def random_algebra(dim: int, field: FieldSpec, seed, budget: int = DEFAULT_BUDGET) -> LieAlgebra:
    return sample_algebra(dim, field, seed, budget).algebra
