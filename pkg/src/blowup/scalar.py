"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are plain :class:`fractions.Fraction` values. Prime field
scalars are :class:`ModP` residues. A :class:`Field` object coerces input into
its scalar type and supplies the few field-level operations the rest of the
package needs (enumeration, binomials, roots).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import FieldMismatchError, ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


class ModP:
    """Residue class modulo a prime, stored canonically in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction) and other.denominator == 1:
            return other.numerator % self.p
        raise FieldMismatchError(f"cannot combine GF({self.p}) with {other!r}")

    def __add__(self, other):
        return ModP(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return ModP(self.value - self._other(other), self.p)

    def __rsub__(self, other):
        return ModP(self._other(other) - self.value, self.p)

    def __mul__(self, other):
        return ModP(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in GF(%d)" % self.p)
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * ModP(self._other(other), self.p).inverse()

    def __rtruediv__(self, other):
        return ModP(self._other(other), self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModP(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __lt__(self, other: "ModP"):
        return self.value < self._other(other)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"


Scalar = Union[Fraction, ModP]


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime_field"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, value) -> Scalar:
        """Coerce ``value`` (int, Fraction, ModP or ``"a/b"`` text) into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.p is None:
            if isinstance(value, ModP):
                raise FieldMismatchError(f"GF({value.p}) element used over QQ")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, ModP):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element used over GF({self.p})")
            return value
        if isinstance(value, int):
            return ModP(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return ModP(value.numerator, self.p) / value.denominator
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def parse(self, text: str) -> Scalar:
        """Parse an integer or ``a/b`` literal (optionally signed)."""
        s = text.strip()
        num, sep, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ParseError(f"malformed scalar {text!r}") from None
        if d == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return self(Fraction(n, d)) if self.p is None else self(n) / d

    def contains(self, x) -> bool:
        if self.p is None:
            return isinstance(x, Fraction)
        return isinstance(x, ModP) and x.p == self.p

    def elements(self) -> Iterator[ModP]:
        if self.p is None:
            raise ValueError("QQ cannot be enumerated")
        return (ModP(v, self.p) for v in range(self.p))

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def field_of(x: Scalar) -> Field:
    if isinstance(x, ModP):
        return Field(x.p)
    return QQ


def scalar_sort_key(x: Scalar):
    """Canonical ordering: numeric value over QQ, residue over GF(p)."""
    return x.value if isinstance(x, ModP) else x


def format_scalar(x: Scalar) -> str:
    return str(x)


def binomial_in_field(n: int, k: int, field: Field) -> Scalar:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return field(math.comb(n, k))


def integer_root(a: int, e: int) -> int | None:
    """Exact non-negative integer e-th root of ``a >= 0``, or None."""
    if a < 2 or e == 1:
        return a
    # integer Newton from above converges to floor(a ** (1/e))
    r = 1 << (a.bit_length() // e + 1)
    while True:
        s = ((e - 1) * r + a // r ** (e - 1)) // e
        if s >= r:
            break
        r = s
    return r if r ** e == a else None


def nth_roots(x: Scalar, e: int) -> list[Scalar]:
    """All field elements y with ``y**e == x``, in canonical order."""
    if e < 1:
        raise ValueError("root index must be positive")
    if isinstance(x, ModP):
        return [y for y in Field(x.p).elements() if y ** e == x]
    x = Fraction(x)
    if x == 0:
        return [Fraction(0)]
    if x < 0 and e % 2 == 0:
        return []
    num = integer_root(abs(x.numerator), e)
    den = integer_root(x.denominator, e)
    if num is None or den is None:
        return []
    r = Fraction(num, den)
    if x < 0:
        return [-r]
    if e % 2 == 0:
        return [-r, r]
    return [r]
