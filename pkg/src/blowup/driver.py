"""Blow-up sequences until the multiplicity first drops.

``auto`` mode follows the maximal-center rule: a permitted curve whenever
one exists, otherwise an equimultiple point, otherwise a final quadratic
transform after which nothing of the original multiplicity survives.
Ties are broken canonically (curves by printed form, X-chart points by
ascending parameter, then the Y-chart point) so traces are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence, Union

from .errors import (
    DegenerateChartError,
    NotNearPointError,
    PreconditionError,
    StepCapError,
)
from .expr import Center, parse_center, parse_poly
from .polygon import NewtonPolygon, equal, newton_polygon
from .polyring import Poly
from .scalar import QQ, Field
from .surface import WeierstrassSurface
from .transform import (
    CurveCenter,
    Direction,
    TransformResult,
    find_permitted_curves,
    monoidal,
    near_points,
    quadratic,
    x_chart_near_parameters,
    y_chart_is_near,
)

DEFAULT_MAX_STEPS = 500
CYCLE_SCRIPT = ("Q 1:1:0", "Q 1:0:0", "Q 1:0:0", "M X", "Q 1:0:0", "Q 1:0:0", "Q 1:0:0", "M X")


@dataclass(frozen=True)
class Terminal:
    """Final quadratic transform taken when no equimultiple point remains."""

    direction: Direction

    def __str__(self):
        return f"terminal {self.direction}"


StepCenter = Union[Direction, CurveCenter, Terminal]


@dataclass(frozen=True)
class Step:
    index: int
    center: StepCenter
    equation_after: Poly
    order_after: int
    polygon_after: Optional[NewtonPolygon]

    def to_json(self) -> dict:
        c = self.center
        if isinstance(c, CurveCenter):
            center = {"type": "curve", "direction": None, "generator": str(c.G)}
        elif isinstance(c, Terminal):
            center = {"type": "terminal", "direction": str(c.direction), "generator": None}
        else:
            center = {"type": "point", "direction": str(c), "generator": None}
        return {
            "index": self.index,
            "center": center,
            "equation": str(self.equation_after),
            "order": self.order_after,
            "polygon": None if self.polygon_after is None else self.polygon_after.to_json(),
        }


@dataclass
class ResolutionTrace:
    initial: WeierstrassSurface
    steps: list[Step] = dc_field(default_factory=list)
    drop_step: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "initial": str(self.initial.eq),
            "multiplicity": self.initial.n,
            "steps": [s.to_json() for s in self.steps],
            "drop_step": self.drop_step,
        }

    def equation(self, index: int) -> Poly:
        return self.steps[index - 1].equation_after


@dataclass(frozen=True)
class Strategy:
    """``auto`` (maximal-center rule) or a fixed list of centers."""

    kind: str = "auto"
    centers: tuple[Center, ...] = ()

    @classmethod
    def auto(cls) -> "Strategy":
        return cls("auto")

    @classmethod
    def scripted(cls, centers: Sequence[Center]) -> "Strategy":
        return cls("scripted", tuple(centers))


def lz_step(S: WeierstrassSurface) -> tuple[StepCenter, TransformResult]:
    """One step of the maximal-center rule."""
    curves = find_permitted_curves(S)
    if curves:
        return curves[0], monoidal(S, curves[0])
    try:
        points = near_points(S)
    except DegenerateChartError:
        # the whole line (1:c:0) is equimultiple; take its canonical first point
        points = [Direction.x_chart(S.field.zero)]
    if points:
        return points[0], quadratic(S, points[0])
    d = Direction.x_chart(S.field.zero)
    return Terminal(d), quadratic(S, d)


def _scripted_step(S: WeierstrassSurface, center: Center) -> tuple[StepCenter, TransformResult]:
    if isinstance(center, CurveCenter):
        return center, monoidal(S, center)
    result = quadratic(S, center)
    if not result.dropped:
        return center, result
    params = x_chart_near_parameters(S)
    if params is None or params or y_chart_is_near(S):
        raise NotNearPointError(f"direction {center} is not an equimultiple point")
    return Terminal(center), result


def _record(trace: ResolutionTrace, center: StepCenter, result: TransformResult) -> Optional[WeierstrassSurface]:
    index = len(trace.steps) + 1
    polygon = None if result.dropped else newton_polygon(result.surface)
    trace.steps.append(Step(index, center, result.result, result.new_order, polygon))
    if result.dropped:
        trace.drop_step = index
        return None
    return result.surface


def run(
    S: WeierstrassSurface,
    strategy: Strategy | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> ResolutionTrace:
    """Blow up until the multiplicity drops (auto) or the script ends."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    strategy = strategy or Strategy.auto()
    trace = ResolutionTrace(S)
    current: Optional[WeierstrassSurface] = S
    if strategy.kind == "auto":
        while current is not None:
            if len(trace.steps) >= max_steps:
                raise StepCapError(f"no multiplicity drop within {max_steps} steps")
            current = _record(trace, *lz_step(current))
    else:
        for center in strategy.centers:
            if current is None:
                break
            if len(trace.steps) >= max_steps:
                raise StepCapError(f"script longer than {max_steps} steps")
            current = _record(trace, *_scripted_step(current, center))
    return trace


# ------------------------------------------------------------ the family


def family_surface(m: int, field: Field = QQ) -> WeierstrassSurface:
    """``Z^3 + X^m Z + (X - Y)^4`` for ``m >= 19``; the field must not have characteristic 3."""
    if m < 19:
        raise PreconditionError(f"m = {m}; the family needs m >= 19")
    if field.characteristic == 3:
        raise PreconditionError("the family needs characteristic other than 3")
    return WeierstrassSurface.from_poly(parse_poly(f"Z^3 + X^{m}*Z + (X-Y)^4", field))


def _expected_sequence(m: int, field: Field) -> dict[int, Poly]:
    return {
        1: parse_poly(f"Z^3 + X^{m - 2}*Z + X*Y^4", field),
        3: parse_poly(f"Z^3 + X^{m - 6}*Z + X^3*Y^4", field),
        4: parse_poly(f"Z^3 + X^{m - 8}*Z + Y^4", field),
        8: parse_poly(f"Z^3 + X^{m - 16}*Z + Y^4", field),
    }


def cycle_script(field: Field = QQ) -> list[Center]:
    return [parse_center(line, field) for line in CYCLE_SCRIPT]


def verify_cycle_sequence(m: int, field: Field = QQ) -> bool:
    """Replay the eight displayed blow-ups and compare steps 1, 3, 4, 8."""
    S = family_surface(m, field)
    trace = run(S, Strategy.scripted(cycle_script(field)), max_steps=len(CYCLE_SCRIPT))
    if len(trace.steps) != len(CYCLE_SCRIPT) or trace.drop_step is not None:
        return False
    return all(trace.equation(i) == P for i, P in _expected_sequence(m, field).items())


@dataclass
class CounterexampleEntry:
    m: int
    polygon: NewtonPolygon
    drop_step: int


@dataclass
class CounterexampleReport:
    entries: list[CounterexampleEntry]
    polygons_equal: bool
    counts_increasing: bool
    period_eight_adds_four: bool

    @property
    def ok(self) -> bool:
        return self.polygons_equal and self.counts_increasing and self.period_eight_adds_four

    def to_json(self) -> dict:
        return {
            "entries": [
                {"m": e.m, "polygon": e.polygon.to_json(), "drop_step": e.drop_step}
                for e in self.entries
            ],
            "checks": {
                "polygons_equal": self.polygons_equal,
                "counts_increasing": self.counts_increasing,
                "period_eight_adds_four": self.period_eight_adds_four,
            },
        }


EXPECTED_POLYGON = NewtonPolygon(((0, "4/3"), ("4/3", 0)))


def _entry(m: int, field: Field, max_steps: int) -> CounterexampleEntry:
    S = family_surface(m, field)
    trace = run(S, Strategy.auto(), max_steps=max_steps)
    return CounterexampleEntry(m, newton_polygon(S), trace.drop_step)


def counterexample_report(
    m_values: Sequence[int], field: Field = QQ, max_steps: int = DEFAULT_MAX_STEPS
) -> CounterexampleReport:
    """Same polygon for every m, yet the number of blow-ups grows with m."""
    for m in m_values:
        if m < 19:
            raise PreconditionError(f"m = {m}; the family needs m >= 19")
    entries = [_entry(m, field, max_steps) for m in m_values]
    same = all(equal(e.polygon, EXPECTED_POLYGON) for e in entries)
    increasing = all(
        a.drop_step < b.drop_step for a in entries for b in entries if a.m < b.m
    )
    by_m = {e.m: e.drop_step for e in entries}
    periodic = all(by_m[m + 8] - by_m[m] == 4 for m in by_m if m + 8 in by_m)
    return CounterexampleReport(entries, same, increasing, periodic)
