"""Newton-Hironaka polygons and vertex contraction.

Each term ``X^i Y^j Z^k`` (``k < n``) of a surface equation projects to the
point ``(i/(n-k), j/(n-k))``. The polygon is the convex hull of these points
plus the first quadrant; it is stored as its list of vertices along the
lower-left staircase.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError, StepCapError
from .polyring import Exponent, Poly
from .scalar import Scalar, binomial_in_field, nth_roots, scalar_sort_key
from .surface import WeierstrassSurface, z_translate

Point = tuple[Fraction, Fraction]


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _frac(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class NewtonPolygon:
    """Vertices ordered by increasing x (and so decreasing y)."""

    vertices: tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        )

    def __bool__(self):
        return bool(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def contains(self, p: Point) -> bool:
        """Membership in the closed region (on or above the staircase)."""
        vs = self.vertices
        if not vs:
            return False
        x, y = Fraction(p[0]), Fraction(p[1])
        if x < vs[0][0]:
            return False
        if x >= vs[-1][0]:
            return y >= vs[-1][1]
        for a, b in zip(vs, vs[1:]):
            if a[0] <= x <= b[0]:
                return _cross(a, b, (x, y)) >= 0
        raise AssertionError("unreachable")

    def __contains__(self, p):
        return self.contains(p)

    def issubset(self, other: "NewtonPolygon") -> bool:
        """Region inclusion; the region is up-closed and convex, so vertices suffice."""
        return all(other.contains(v) for v in self.vertices)

    __le__ = issubset

    def to_json(self) -> dict:
        return {"vertices": [[_frac(x), _frac(y)] for x, y in self.vertices]}

    def __str__(self):
        return " ".join(f"({_frac(x)},{_frac(y)})" for x, y in self.vertices)


def projected_points(S: WeierstrassSurface) -> set[Point]:
    n = S.n
    return {
        (Fraction(i, n - k), Fraction(j, n - k))
        for (i, j, k) in S.eq.terms
        if k < n
    }


def hull(points: Iterable[Point]) -> NewtonPolygon:
    """Vertices of CH(union of p + first quadrant)."""
    pts = sorted({(Fraction(x), Fraction(y)) for x, y in points})
    # after sorting by (x, y), a point survives iff its y beats every earlier y
    survivors: list[Point] = []
    best_y = None
    for p in pts:
        if best_y is None or p[1] < best_y:
            survivors.append(p)
            best_y = p[1]
    chain: list[Point] = []
    for p in survivors:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return NewtonPolygon(tuple(chain))


def newton_polygon(S: WeierstrassSurface) -> NewtonPolygon:
    return hull(projected_points(S))


def contains(polygon: NewtonPolygon, p: Point) -> bool:
    return polygon.contains(p)


def subset(first: NewtonPolygon, second: NewtonPolygon) -> bool:
    return first.issubset(second)


def equal(first: NewtonPolygon, second: NewtonPolygon) -> bool:
    return first.vertices == second.vertices


def _check_vertex(S: WeierstrassSurface, v: Point) -> tuple[NewtonPolygon, Point]:
    poly = newton_polygon(S)
    v = (Fraction(v[0]), Fraction(v[1]))
    if v not in poly.vertices:
        raise PreconditionError(f"({_frac(v[0])},{_frac(v[1])}) is not a vertex of {poly}")
    return poly, v


def vertex_fiber(S: WeierstrassSurface, v: Point) -> dict[Exponent, Scalar]:
    """Terms of the equation (other than Z^n) that project onto the vertex ``v``."""
    _, v = _check_vertex(S, v)
    n = S.n
    return {
        e: c
        for e, c in S.eq.items()
        if e[2] < n and (Fraction(e[0], n - e[2]), Fraction(e[1], n - e[2])) == v
    }


def _removes_vertex(S: WeierstrassSurface, before: NewtonPolygon, v: Point, alpha_mono: Poly):
    after = z_translate(S, alpha_mono)
    new = newton_polygon(after)
    if new.issubset(before) and not new.contains(v):
        return after
    return None


def _contraction_candidates(S: WeierstrassSurface, v: Point, fiber) -> list[Scalar]:
    # Z -> Z + alpha*m kills the fiber iff the fiber part of F equals
    # (Z - alpha*m)^n, i.e. c_k = binom(n, k) * (-alpha)^(n-k).
    n, field = S.n, S.field
    a, b = int(v[0]), int(v[1])
    coeffs = {k: fiber.get((a * (n - k), b * (n - k), k), field.zero) for k in range(n)}
    usable = [k for k in range(n) if binomial_in_field(n, k, field)]
    if not usable:
        return []
    # the k = n-1 equation is linear and pins the root when char does not divide n
    k = max(usable)
    binom = binomial_in_field(n, k, field)
    roots = nth_roots(coeffs[k] / binom, n - k)
    return sorted({-r for r in roots if r}, key=scalar_sort_key)


def contraction(S: WeierstrassSurface, v: Point):
    """Return ``(alpha, contracted_surface)`` for a contractible vertex, else None."""
    before, v = _check_vertex(S, v)
    if v[0].denominator != 1 or v[1].denominator != 1:
        return None
    fiber = vertex_fiber(S, v)
    a, b = int(v[0]), int(v[1])
    for alpha in _contraction_candidates(S, v, fiber):
        mono = Poly.monomial(a, b, 0, alpha, S.field)
        after = _removes_vertex(S, before, v, mono)
        if after is not None:
            return alpha, after
    return None


def contractible(S: WeierstrassSurface, v: Point) -> Scalar | None:
    """The ``alpha`` of a contraction ``Z -> Z + alpha X^a Y^b`` of vertex ``v``, if any."""
    found = contraction(S, v)
    return None if found is None else found[0]


def is_minimal(S: WeierstrassSurface) -> bool:
    """True iff no vertex of the polygon is contractible."""
    return all(contraction(S, v) is None for v in newton_polygon(S).vertices)


def minimize(S: WeierstrassSurface, step_cap: int = 64) -> WeierstrassSurface:
    """Contract vertices (smallest x first) until none is contractible."""
    steps = 0
    while True:
        for v in newton_polygon(S).vertices:
            found = contraction(S, v)
            if found is not None:
                break
        else:
            return S
        steps += 1
        if steps > step_cap:
            raise StepCapError(f"minimize exceeded {step_cap} contractions")
        S = found[1]
