import itertools
import random

import pytest

from blowup.errors import DegenerateChartError, NotPermittedError, PreconditionError
from blowup.expr import parse_poly
from blowup.polyring import Poly
from blowup.scalar import GF, QQ
from blowup.surface import WeierstrassSurface, tchirnhausen
from blowup.transform import (
    CurveCenter,
    Direction,
    find_permitted_curves,
    is_permitted,
    monoidal,
    near_points,
    quadratic,
)

from helpers import random_surface


def S(text, field=QQ):
    return WeierstrassSurface.from_poly(parse_poly(text, field))


def P(text, field=QQ):
    return parse_poly(text, field)


def curve(text, field=QQ):
    return CurveCenter(P(text, field))


F = S("Z^3 + X^19*Z + (X-Y)^4")
F1 = S("Z^3 + X^17*Z + X*Y^4")
F3 = S("Z^3 + X^13*Z + X^3*Y^4")
F4 = S("Z^3 + X^11*Z + Y^4")
F7 = S("Z^3 + X^5*Z + X^3*Y^4")
F8 = S("Z^3 + X^3*Z + Y^4")


def test_quadratic_examples():
    r = quadratic(F, Direction.x_chart(QQ(1)))
    assert r.result == F1.eq and not r.dropped and r.surface == F1
    r = quadratic(F1, Direction.x_chart(QQ(0)))
    assert r.result == P("Z^3 + X^15*Z + X^2*Y^4") and r.new_order == 3
    r = quadratic(S("Z^3 + X^3*Z + Y^4"), Direction.x_chart(QQ(0)))
    assert r.result == P("Z^3 + X*Z + X*Y^4")
    assert r.new_order == 2 and r.dropped and r.surface is None


def test_quadratic_y_chart():
    # X -> XY, Z -> YZ, divide by Y^3
    r = quadratic(F1, Direction.y_chart())
    assert r.result == P("Z^3 + X^17*Y^15*Z + X*Y^2")
    assert not r.dropped


def test_direction_validation():
    with pytest.raises(ValueError):
        Direction("X")
    with pytest.raises(ValueError):
        Direction("Y", QQ(1))
    assert str(Direction.x_chart(QQ(1))) == "1:1:0"
    assert str(Direction.y_chart()) == "0:1:0"


def test_curve_validation():
    with pytest.raises(PreconditionError):
        curve("X^2")
    with pytest.raises(PreconditionError):
        curve("X + 1")
    with pytest.raises(PreconditionError):
        curve("Z")
    curve("X + Y^2")


def test_is_permitted():
    assert is_permitted(F3, curve("X"))
    assert not is_permitted(F1, curve("X"))
    # G^4 divides a_0 but G^2 does not divide a_1 = X^19
    assert not is_permitted(F, curve("X - Y"))


def test_monoidal():
    assert monoidal(F3, curve("X")).result == F4.eq
    assert monoidal(F7, curve("X")).result == F8.eq
    with pytest.raises(NotPermittedError, match=r"center \(Z,X\) is not permitted"):
        monoidal(F1, curve("X"))


def test_monoidal_nonlinear_curve():
    s = S("Z^2 + (X + Y^2)^3*Y")
    r = monoidal(s, curve("X + Y^2"))
    assert r.result == P("Z^2 + X*Y + Y^3")
    assert not r.dropped and r.new_order == 2


def test_near_points():
    assert near_points(F) == [Direction.x_chart(QQ(1))]
    assert near_points(F4) == [Direction.x_chart(QQ(0))]
    assert near_points(F8) == []


def test_near_points_include_y_chart():
    assert near_points(F1) == [Direction.x_chart(QQ(0)), Direction.y_chart()]


def test_near_points_degenerate_chart():
    with pytest.raises(DegenerateChartError):
        near_points(S("Z^3 + X^15*Z + X^2*Y^4"))


def test_near_points_requires_maximal_contact():
    with pytest.raises(PreconditionError):
        near_points(S("Z^2 + 2*X*Z + X^2 + Y^3"))


def test_find_permitted_curves():
    assert find_permitted_curves(F) == []
    assert find_permitted_curves(F3) == [curve("X")]
    found = find_permitted_curves(S("Z^2 + (X-Y)^2*(X+Y)^5"))
    assert found == [curve("X + Y"), curve("X - Y")]


def test_find_permitted_curves_y_minus_cx_normalized():
    found = find_permitted_curves(S("Z^2 + (Y - 2*X)^3"))
    assert found == [curve("X - 1/2*Y")]


def test_cycle_sequence_composition():
    for m in (19, 20, 23, 30, 41):
        s = S(f"Z^3 + X^{m}*Z + (X-Y)^4")
        s = quadratic(s, Direction.x_chart(QQ(1))).surface
        s = quadratic(s, Direction.x_chart(QQ(0))).surface
        s = quadratic(s, Direction.x_chart(QQ(0))).surface
        s = monoidal(s, curve("X")).surface
        assert s.eq == P(f"Z^3 + X^{m - 8}*Z + Y^4")


@pytest.mark.parametrize("field", [GF(5), GF(7)])
def test_near_points_semicontinuity_exhaustive_fp(field):
    rng = random.Random(3)
    done = 0
    while done < 30:
        s = random_surface(rng, field, max_terms=5, max_degree=7)
        if s.n % field.p == 0:
            continue
        s = tchirnhausen(s)
        try:
            found = near_points(s)
        except DegenerateChartError:
            assert all(not quadratic(s, Direction.x_chart(c)).dropped for c in field.elements())
            continue
        xs = {d.c for d in found if d.chart == "X"}
        for c in field.elements():
            r = quadratic(s, Direction.x_chart(c))
            assert (not r.dropped) == (c in xs)
        done += 1


def test_permitted_brute_force_gf3():
    # n = 2 over GF(3): G^2 | a_0 and G | a_1 checked against explicit products
    F3f = GF(3)
    G = P("X + Y", F3f)
    lows = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
    div_a1 = {G * Poly(F3f, dict(zip(lows, c))) for c in itertools.product(range(3), repeat=3)}
    div_a0 = {G**2 * Poly(F3f, {(0, 0, 0): c}) for c in range(3)}
    quad = [(2, 0, 0), (1, 1, 0), (0, 2, 0)]
    for c0 in itertools.product(range(3), repeat=3):
        a0 = Poly(F3f, dict(zip(quad, c0)))
        for c1 in itertools.product(range(3), repeat=2):
            a1 = Poly(F3f, dict(zip([(1, 0, 0), (0, 1, 0)], c1)))
            s = WeierstrassSurface.from_poly(Poly(F3f, {(0, 0, 2): 1}) + a0 + a1.shift((0, 0, 1)))
            assert is_permitted(s, CurveCenter(G)) == (a0 in div_a0 and a1 in div_a1)
