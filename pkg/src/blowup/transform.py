"""Blow-ups of a surface: quadratic (the origin) and monoidal (a permitted curve).

Only points of the exceptional plane lying in ``Z = 0`` are considered. For
WT or minimized equations ``Z = 0`` has maximal contact, so that is where
every equimultiple point sits.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    DegenerateChartError,
    InvariantError,
    NotDivisibleError,
    NotPermittedError,
    PreconditionError,
)
from .polyring import (
    Poly,
    divide_exact_power,
    divides_power,
    exact_quotient,
    rational_roots,
    root_multiplicity,
    substitute,
    univariate_view,
)
from .polygon import is_minimal
from .scalar import Scalar, scalar_sort_key
from .surface import WeierstrassSurface, is_wt


@dataclass(frozen=True)
class Direction:
    """A point of the exceptional plane in ``Z = 0``.

    ``chart="X"`` with parameter ``c`` is the point ``(1:c:0)``;
    ``chart="Y"`` is ``(0:1:0)`` and carries no parameter.
    """

    chart: str
    c: Optional[Scalar] = None

    def __post_init__(self):
        if self.chart not in ("X", "Y"):
            raise ValueError(f"unknown chart {self.chart!r}")
        if self.chart == "X" and self.c is None:
            raise ValueError("X-chart direction needs a parameter")
        if self.chart == "Y" and self.c is not None:
            raise ValueError("Y-chart direction takes no parameter")

    @classmethod
    def x_chart(cls, c) -> "Direction":
        return cls("X", c)

    @classmethod
    def y_chart(cls) -> "Direction":
        return cls("Y")

    def sort_key(self):
        return (0, scalar_sort_key(self.c)) if self.chart == "X" else (1, 0)

    def __str__(self):
        return f"1:{self.c}:0" if self.chart == "X" else "0:1:0"


@dataclass(frozen=True)
class CurveCenter:
    """The curve ``(Z, G)`` for a smooth G through the origin."""

    G: Poly

    def __post_init__(self):
        G = self.G
        if not G or "Z" in G.variables():
            raise PreconditionError(f"curve generator {G} must be a nonzero polynomial in X, Y")
        if G.coefficient((0, 0, 0)):
            raise PreconditionError(f"curve ({G}) does not pass through the origin")
        if G.order() != 1:
            raise PreconditionError(f"curve ({G}) is not smooth at the origin")

    def sort_key(self):
        return str(self.G)

    def __str__(self):
        return f"(Z,{self.G})"


@dataclass(frozen=True)
class TransformResult:
    result: Poly
    new_order: int
    dropped: bool
    surface: Optional[WeierstrassSurface]


def _finish(P: Poly, n: int) -> TransformResult:
    order = P.order()
    if order > n:
        raise InvariantError(f"multiplicity increased from {n} to {order}")
    if order < n:
        return TransformResult(P, order, True, None)
    return TransformResult(P, order, False, WeierstrassSurface.from_poly(P))


def _x_chart_total(S: WeierstrassSurface, c) -> Poly:
    field = S.field
    X, Y, Z = (Poly.var(v, field) for v in "XYZ")
    images = {"Y": X * (Y + c) if c else X * Y, "Z": X * Z}
    return substitute(S.eq, images)


def quadratic(S: WeierstrassSurface, d: Direction) -> TransformResult:
    """Blow up the origin and look at the chart through direction ``d``."""
    field = S.field
    try:
        if d.chart == "X":
            total = _x_chart_total(S, field(d.c))
            strict = divide_exact_power(total, "X", S.n)
        else:
            X, Y, Z = (Poly.var(v, field) for v in "XYZ")
            total = substitute(S.eq, {"X": X * Y, "Z": Y * Z})
            strict = divide_exact_power(total, "Y", S.n)
    except NotDivisibleError as exc:
        raise InvariantError(f"total transform not divisible: {exc}") from exc
    return _finish(strict, S.n)


def is_permitted(S: WeierstrassSurface, C: CurveCenter) -> bool:
    """Equimultiplicity along ``(Z, G)``: ``G^(n-k)`` divides every ``a_k``."""
    return all(divides_power(C.G, S.n - k, a) for k, a in enumerate(S.z_profile()))


def monoidal(S: WeierstrassSurface, C: CurveCenter) -> TransformResult:
    """Blow up the curve ``(Z, G)`` in the chart ``Z -> G*Z``."""
    if not is_permitted(S, C):
        raise NotPermittedError(f"center {C} is not permitted")
    n = S.n
    out = Poly.monomial(0, 0, n, 1, S.field)
    for k, a in enumerate(S.z_profile()):
        if a:
            out = out + exact_quotient(a, C.G ** (n - k)).shift((0, 0, k))
    return _finish(out, n)


def _x_chart_slices(S: WeierstrassSurface):
    """The nonzero ``g_{i,k}(Y)`` with ``i + k < n`` of the untranslated strict transform."""
    n = S.n
    strict = divide_exact_power(_x_chart_total(S, 0), "X", n)
    grouped: dict[tuple[int, int], dict] = defaultdict(dict)
    for (i, j, k), coeff in strict.items():
        if i + k < n:
            grouped[(i, k)][(0, j, 0)] = coeff
    return {ik: Poly(S.field, terms) for ik, terms in grouped.items()}


def x_chart_near_parameters(S: WeierstrassSurface) -> list[Scalar] | None:
    """Parameters c with ``(1:c:0)`` equimultiple; None when every c qualifies."""
    n = S.n
    slices = {ik: univariate_view(g, "Y") for ik, g in _x_chart_slices(S).items()}
    if not slices:
        return None
    # candidate set is bounded by the roots of a lowest-degree slice
    ik0 = min(slices, key=lambda ik: (len(slices[ik]), ik))
    candidates = rational_roots(slices[ik0], S.field)
    return [
        c
        for c in candidates
        if all(root_multiplicity(u, c) >= n - i - k for (i, k), u in slices.items())
    ]


def y_chart_is_near(S: WeierstrassSurface) -> bool:
    return not quadratic(S, Direction.y_chart()).dropped


def _require_maximal_contact(S: WeierstrassSurface):
    if not is_wt(S) and not is_minimal(S):
        raise PreconditionError("near-point search needs a WT or minimized equation")


def near_points(S: WeierstrassSurface) -> list[Direction]:
    """Equimultiple points over the origin, in canonical order."""
    _require_maximal_contact(S)
    params = x_chart_near_parameters(S)
    if params is None:
        raise DegenerateChartError(
            "every point (1:c:0) is equimultiple; the X-chart strict transform does not see Y"
        )
    found = [Direction.x_chart(c) for c in params]
    if y_chart_is_near(S):
        found.append(Direction.y_chart())
    for d in found:
        if quadratic(S, d).dropped:
            raise InvariantError(f"near point {d} drops multiplicity")
    return found


def _normalize_linear(G: Poly) -> Poly:
    e = min(G.terms, key=lambda e: (-e[0], -e[1]))
    return G * (G.field.one / G.coefficient(e))


def _linear_candidates(S: WeierstrassSurface) -> list[Poly]:
    field = S.field
    n = S.n
    profile = [(k, a) for k, a in enumerate(S.z_profile()) if a]
    if not profile:
        return []
    # lowest weight: the a_k whose order/(n-k) is smallest
    k, a = min(profile, key=lambda ka: (Fraction(ka[1].order(), n - ka[0]), ka[0]))
    initial = a.homogeneous_part(a.order())
    d = a.order()
    X, Y = Poly.var("X", field), Poly.var("Y", field)
    out = []
    # G = X - cY vanishes on the initial form iff initial(c, 1) = 0; likewise Y - cX
    h_x = [field.zero] * (d + 1)
    h_y = [field.zero] * (d + 1)
    for (i, j, _), coeff in initial.items():
        h_x[i] = h_x[i] + coeff
        h_y[j] = h_y[j] + coeff
    if any(h_x):
        out += [X - Y * c for c in rational_roots(h_x, field)]
    if any(h_y):
        out += [Y - X * c for c in rational_roots(h_y, field)]
    return out


def find_permitted_curves(S: WeierstrassSurface) -> list[CurveCenter]:
    """Permitted curves among coordinate axes and rational linear forms."""
    field = S.field
    candidates = [Poly.var("X", field), Poly.var("Y", field)] + _linear_candidates(S)
    seen = {}
    for G in candidates:
        G = _normalize_linear(G)
        if G in seen:
            continue
        C = CurveCenter(G)
        if is_permitted(S, C):
            seen[G] = C
    return sorted(seen.values(), key=CurveCenter.sort_key)
