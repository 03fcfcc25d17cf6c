"""Random generators and hypothesis strategies shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from blowup.polyring import Poly
from blowup.scalar import GF, QQ, Field
from blowup.surface import WeierstrassSurface

FIELDS = [QQ, GF(2), GF(5), GF(7), GF(13)]


def scalars(field: Field):
    if field.p is None:
        return st.fractions(min_value=-20, max_value=20, max_denominator=6)
    return st.integers(0, field.p - 1).map(field)


@st.composite
def polys(draw, field=None, max_terms=6, max_degree=5, variables=3):
    if field is None:
        field = draw(st.sampled_from(FIELDS))
    exps = st.tuples(
        st.integers(0, max_degree),
        st.integers(0, max_degree) if variables >= 2 else st.just(0),
        st.integers(0, max_degree) if variables >= 3 else st.just(0),
    )
    terms = draw(st.dictionaries(exps, scalars(field), max_size=max_terms))
    return Poly(field, terms)


def random_scalar(rng: random.Random, field: Field, nonzero=True):
    while True:
        if field.p is None:
            c = Fraction(rng.randint(-9, 9), rng.choice([1, 1, 1, 2, 3]))
        else:
            c = field(rng.randrange(field.p))
        c = field(c)
        if c or not nonzero:
            return c


def random_surface(rng: random.Random, field: Field, n=None, max_terms=8, max_degree=12):
    """Random Weierstrass equation: Z^n plus terms X^i Y^j Z^k with k < n, i + j >= n - k."""
    n = n or rng.choice([2, 3, 4, 5])
    terms = {(0, 0, n): 1}
    for _ in range(rng.randint(1, max_terms)):
        k = rng.randrange(n)
        d = rng.randint(n - k, max(n - k, max_degree - k))
        i = rng.randint(0, d)
        terms[(i, d - i, k)] = random_scalar(rng, field)
    return WeierstrassSurface.from_poly(Poly(field, terms))


# criterion number -> (title, passed, seconds); filled by test_acceptance
RESULTS: dict[int, tuple[str, bool, float]] = {}
