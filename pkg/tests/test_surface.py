import random

import pytest

from blowup.errors import PreconditionError, SurfaceError
from blowup.expr import parse_poly
from blowup.polyring import Poly
from blowup.scalar import GF, QQ
from blowup.surface import WeierstrassSurface, is_wt, tchirnhausen, z_translate

from helpers import random_scalar, random_surface


def S(text, field=QQ):
    return WeierstrassSurface.from_poly(parse_poly(text, field))


def P(text, field=QQ):
    return parse_poly(text, field)


F = "Z^3 + X^19*Z + (X-Y)^4"


def test_from_poly_valid():
    s = S(F)
    assert s.n == 3


@pytest.mark.parametrize("text", ["2*Z^3 + X^5", "Z^3 + X", "X^2 + Y^2", "0", "Z^2 + X*Z^2 + X^3"])
def test_from_poly_rejects(text):
    with pytest.raises(SurfaceError):
        S(text)


def test_z_profile():
    a = S(F).z_profile()
    assert a == [P("(X-Y)^4"), P("X^19"), Poly.zero()]
    assert S("Z^2").z_profile() == [Poly.zero(), Poly.zero()]
    assert S("Z^2 + X*Y*Z + X^3").z_profile() == [P("X^3"), P("X*Y")]


def test_z_translate():
    s = S("Z^2 + 2*X*Y*Z + X^2*Y^2 + X^5")
    assert z_translate(s, P("-X*Y")) == S("Z^2 + X^5")
    assert z_translate(s, Poly.zero()) == s
    with pytest.raises(PreconditionError):
        z_translate(s, P("1 + X"))
    with pytest.raises(PreconditionError):
        z_translate(s, P("X*Z"))


def test_tchirnhausen():
    assert tchirnhausen(S("Z^3 + 3*X*Z^2 + 3*X^2*Z + X^3")) == S("Z^3")
    assert tchirnhausen(S("Z^2 + 2*X*Z + X^2 + Y^3")) == S("Z^2 + Y^3")
    assert tchirnhausen(S(F)) == S(F)


def test_tchirnhausen_characteristic_divides_n():
    with pytest.raises(PreconditionError):
        tchirnhausen(S("Z^3 + X*Z^2 + X^3", GF(3)))


def test_is_wt():
    assert is_wt(S(F))
    assert not is_wt(S("Z^2 + 2*X*Z + Y^3"))
    assert is_wt(S("Z^2"))


@pytest.mark.parametrize("field", [QQ, GF(5), GF(7)])
def test_translation_laws_on_random_surfaces(field):
    rng = random.Random(11)
    for _ in range(40):
        s = random_surface(rng, field, max_terms=5, max_degree=8)
        alpha = Poly(field, {(rng.randint(0, 3), rng.randint(1, 3), 0): random_scalar(rng, field)})
        moved = z_translate(s, alpha)
        assert moved.n == s.n and moved.eq.order() == s.eq.order()
        assert z_translate(moved, -alpha) == s
        if field.characteristic == 0 or s.n % field.characteristic:
            t = tchirnhausen(s)
            assert is_wt(t)
            assert tchirnhausen(t) == t
