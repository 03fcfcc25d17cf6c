"""Sparse polynomials in X, Y, Z over an exact field.

A :class:`Poly` is a finite map from exponent triples ``(i, j, k)`` (degrees
in X, Y, Z) to nonzero scalars. Values are immutable; every operation
returns a new polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import FieldMismatchError, NotDivisibleError, PreconditionError
from .scalar import QQ, Field, ModP, Scalar, scalar_sort_key

Exponent = tuple[int, int, int]

VARIABLES = ("X", "Y", "Z")
_INDEX = {name: idx for idx, name in enumerate(VARIABLES)}


def var_index(v: str | int) -> int:
    if isinstance(v, int):
        if v not in (0, 1, 2):
            raise ValueError(f"no variable with index {v}")
        return v
    try:
        return _INDEX[v]
    except KeyError:
        raise ValueError(f"unknown variable {v!r}") from None


def print_key(e: Exponent):
    """Sort key for canonical printing: lex with Z > X > Y, descending."""
    return (-e[2], -e[0], -e[1])


def _division_key(e: Exponent):
    # graded lex, X > Y > Z; only the max matters
    return (e[0] + e[1] + e[2], e[0], e[1], e[2])


class Poly:
    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, field: Field = QQ, terms: Mapping[Exponent, object] | None = None):
        self.field = field
        clean: dict[Exponent, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != 3 or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent {e!r}")
                c = field(c)
                if c:
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field: Field, terms: dict) -> "Poly":
        # trusted constructor: terms already canonical and zero-free
        p = cls.__new__(cls)
        p.field = field
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, field: Field = QQ) -> "Poly":
        return cls._raw(field, {})

    @classmethod
    def constant(cls, c, field: Field = QQ) -> "Poly":
        return cls(field, {(0, 0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, k: int, c=1, field: Field = QQ) -> "Poly":
        return cls(field, {(i, j, k): c})

    @classmethod
    def var(cls, name: str, field: Field = QQ) -> "Poly":
        e = [0, 0, 0]
        e[var_index(name)] = 1
        return cls(field, {tuple(e): 1})

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e: Exponent) -> Scalar:
        return self._terms.get(tuple(e), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, (int, Fraction, ModP)):
            return self == Poly.constant(other, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.field}, {str(self)!r})"

    def __str__(self):
        return format_poly(self)

    # ------------------------------------------------------------------ ring

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        return Poly.constant(self.field(other), self.field)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field(other)
            if not c:
                return Poly.zero(self.field)
            return Poly._raw(self.field, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, Scalar] = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                s = out.get(e)
                out[e] = u * v if s is None else s + u * v
        return Poly._raw(self.field, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, r: int):
        if r < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.field)
        base = self
        while r:
            if r & 1:
                result = result * base
            r >>= 1
            if r:
                base = base * base
        return result

    # ------------------------------------------------------------ structure

    def order(self) -> int:
        """Minimum total degree over the support."""
        if not self._terms:
            raise PreconditionError("order of the zero polynomial is undefined")
        return min(sum(e) for e in self._terms)

    def degree(self, v: str | int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        idx = var_index(v)
        return max((e[idx] for e in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def variables(self) -> set[str]:
        return {VARIABLES[i] for e in self._terms for i in range(3) if e[i]}

    def coeff_in(self, v: str | int, power: int) -> "Poly":
        """Coefficient of ``v**power`` as a polynomial in the other variables."""
        idx = var_index(v)
        out = {}
        for e, c in self._terms.items():
            if e[idx] == power:
                f = list(e)
                f[idx] = 0
                out[tuple(f)] = c
        return Poly._raw(self.field, out)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.field, {e: c for e, c in self._terms.items() if sum(e) == d})

    def leading_term(self) -> tuple[Exponent, Scalar]:
        e = max(self._terms, key=_division_key)
        return e, self._terms[e]

    def shift(self, e: Exponent) -> "Poly":
        """Multiply by the monomial X^i Y^j Z^k."""
        i, j, k = e
        return Poly._raw(self.field, {(a + i, b + j, c + k): v for (a, b, c), v in self._terms.items()})

    def map_coefficients(self, f) -> "Poly":
        return Poly(self.field, {e: f(c) for e, c in self._terms.items()})

    def substitute(self, assignments: Mapping[str, "Poly"]) -> "Poly":
        return substitute(self, assignments)


def format_poly(P: Poly) -> str:
    """Canonical text: terms in lex order with Z > X > Y, exact coefficients."""
    if not P:
        return "0"
    pieces = []
    for e in sorted(P._terms, key=print_key):
        c = P._terms[e]
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        mono = "*".join(
            name if d == 1 else f"{name}^{d}" for name, d in zip(VARIABLES, e) if d
        )
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


def substitute(P: Poly, assignments: Mapping[str, Poly]) -> Poly:
    """Simultaneous substitution of polynomials for variables."""
    images = []
    for idx, name in enumerate(VARIABLES):
        img = assignments.get(name)
        if img is None:
            e = [0, 0, 0]
            e[idx] = 1
            img = Poly._raw(P.field, {tuple(e): P.field.one})
        elif img.field != P.field:
            raise FieldMismatchError(f"{P.field} vs {img.field}")
        images.append(img)
    powers: list[dict[int, Poly]] = [{0: Poly.constant(1, P.field), 1: img} for img in images]

    def power(idx: int, d: int) -> Poly:
        cache = powers[idx]
        if d not in cache:
            cache[d] = images[idx] ** d
        return cache[d]

    out = Poly.zero(P.field)
    for (i, j, k), c in P._terms.items():
        out = out + power(0, i) * power(1, j) * power(2, k) * c
    return out


def divide_exact_power(P: Poly, v: str | int, r: int) -> Poly:
    """Quotient of P by ``v**r``; every term must be divisible."""
    idx = var_index(v)
    out = {}
    for e, c in P._terms.items():
        if e[idx] < r:
            raise NotDivisibleError(f"{VARIABLES[idx]}^{r} does not divide {P}")
        f = list(e)
        f[idx] -= r
        out[tuple(f)] = c
    return Poly._raw(P.field, out)


def poly_divmod(A: Poly, B: Poly) -> tuple[Poly, Poly]:
    """Multivariate division of A by a single divisor B (graded lex, X > Y > Z).

    With one divisor the remainder is zero exactly when B divides A.
    """
    if not B:
        raise ZeroDivisionError("division by the zero polynomial")
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    (lb0, lb1, lb2), lc = B.leading_term()
    inv_lc = A.field.one / lc
    rest = dict(A._terms)
    quot: dict[Exponent, Scalar] = {}
    rem: dict[Exponent, Scalar] = {}
    b_items = list(B._terms.items())
    while rest:
        e = max(rest, key=_division_key)
        c = rest[e]
        if e[0] >= lb0 and e[1] >= lb1 and e[2] >= lb2:
            s = (e[0] - lb0, e[1] - lb1, e[2] - lb2)
            q = c * inv_lc
            quot[s] = q
            for (a, b, d), v in b_items:
                f = (a + s[0], b + s[1], d + s[2])
                val = rest.get(f)
                val = -q * v if val is None else val - q * v
                if val:
                    rest[f] = val
                else:
                    rest.pop(f, None)
        else:
            rem[e] = c
            del rest[e]
    return Poly._raw(A.field, quot), Poly._raw(A.field, rem)


def divides_power(G: Poly, r: int, A: Poly) -> bool:
    """True iff ``G**r`` divides A exactly (the zero polynomial is always divisible)."""
    if not G:
        raise PreconditionError("G must be nonzero")
    if not A:
        return True
    if r == 0:
        return True
    # cheap necessary condition before building G**r
    if A.order() < r * G.order():
        return False
    _, rem = poly_divmod(A, G ** r)
    return not rem


def exact_quotient(A: Poly, B: Poly) -> Poly:
    q, rem = poly_divmod(A, B)
    if rem:
        raise NotDivisibleError(f"{B} does not divide {A}")
    return q


# ------------------------------------------------------------- univariate


def univariate_view(A: Poly, v: str | int) -> list[Scalar]:
    """Dense coefficient list (lowest degree first) of a polynomial in one variable."""
    idx = var_index(v)
    for e in A._terms:
        if any(e[t] for t in range(3) if t != idx):
            raise PreconditionError(f"{A} involves variables other than {VARIABLES[idx]}")
    if not A:
        return []
    deg = A.degree(idx)
    out = [A.field.zero] * (deg + 1)
    for e, c in A._terms.items():
        out[e[idx]] = c
    return out


def _trim(u: Sequence[Scalar]) -> list[Scalar]:
    u = list(u)
    while u and not u[-1]:
        u.pop()
    return u


def synthetic_division(u: Sequence[Scalar], c: Scalar) -> tuple[list[Scalar], Scalar]:
    """Divide u(t) by (t - c); return (quotient, remainder)."""
    n = len(u) - 1
    q = [None] * n
    acc = u[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = u[i] + acc * c
    return q, acc


def root_multiplicity(u: Sequence[Scalar], c: Scalar) -> int:
    """Largest e with (t - c)**e dividing u, by repeated synthetic division."""
    u = _trim(u)
    if not u:
        raise PreconditionError("root multiplicity of the zero polynomial is unbounded")
    mult = 0
    while len(u) > 1:
        q, rem = synthetic_division(u, c)
        if rem:
            break
        mult += 1
        u = q
    return mult


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _evaluate(u: Sequence[Scalar], x: Scalar) -> Scalar:
    acc = u[-1] * 0
    for c in reversed(u):
        acc = acc * x + c
    return acc


def rational_roots(u: Sequence[Scalar], field: Field | None = None) -> list[Scalar]:
    """All roots of u in its coefficient field, in canonical order.

    Over QQ this is the rational root theorem on the primitive integer form;
    over GF(p) every element is tried.
    """
    u = _trim(u)
    if not u:
        raise PreconditionError("roots of the zero polynomial are not a finite set")
    if field is None:
        field = Field(u[0].p) if isinstance(u[0], ModP) else QQ
    if field.p is not None:
        return [x for x in field.elements() if not _evaluate(u, x)]
    roots: set[Fraction] = set()
    shift = 0
    while not u[shift]:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    w = [Fraction(c) for c in u[shift:]]
    if len(w) > 1:
        lcm = 1
        for c in w:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in w]
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand not in roots and not _evaluate(w, cand):
                        roots.add(cand)
    return sorted(roots, key=scalar_sort_key)

