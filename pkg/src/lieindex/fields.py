"""Exact scalar fields: the rationals and prime fields GF(p).

Scalars are plain Python values so arithmetic stays cheap: prime-field
elements are ints in ``[0, p)`` and rationals are ``fractions.Fraction``
(always stored in lowest terms with a positive denominator).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[int, Fraction]

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class FieldSpec:
    """Either the rationals (``p == 0``) or the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p == 0:
            return
        if not isinstance(self.p, int) or not 2 <= self.p < MAX_MODULUS:
            raise ValueError(f"prime modulus must satisfy 2 <= p < 2^16, got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.p else "Q"

    def __str__(self) -> str:
        return self.name

    @property
    def zero(self) -> Scalar:
        return 0 if self.p else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.p else Fraction(1)

    def coerce(self, x) -> Scalar:
        if isinstance(x, str):
            return self.parse(x)
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in {self.name}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, a: Scalar) -> Scalar:
        if self.p:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, self.p - 2, self.p)
        return 1 / Fraction(a)

    def elements(self) -> Iterator[int]:
        if not self.p:
            raise ValueError("the rationals cannot be enumerated")
        return iter(range(self.p))

    def parse(self, text: str) -> Scalar:
        """Parse a decimal integer or ``"a/b"`` string."""
        s = text.strip()
        if not s:
            raise ValueError("empty scalar string")
        if "/" in s:
            num, _, den = s.partition("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(s))
        return self.coerce(value)

    def format(self, a: Scalar) -> str:
        if self.p:
            return str(int(a) % self.p)
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def to_json(self):
        return {"gf": self.p} if self.p else "Q"

    @classmethod
    def from_json(cls, value) -> "FieldSpec":
        if value == "Q" or value == "QQ":
            return cls(0)
        if isinstance(value, dict) and set(value) == {"gf"}:
            return cls(int(value["gf"]))
        if isinstance(value, str):
            low = value.lower()
            if low.startswith("gf"):
                return cls(int(low[2:].strip("()")))
        raise ValueError(f"unrecognised field description {value!r}")


Q = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
