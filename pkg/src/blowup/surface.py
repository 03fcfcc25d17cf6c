"""Surface equations in Weierstrass form, ``Z^n + sum_{k<n} a_k(X, Y) Z^k``."""

from __future__ import annotations

from .errors import PreconditionError, SurfaceError
from .polyring import Poly, substitute


class WeierstrassSurface:
    """A monic-in-Z equation whose order equals its Z-degree ``n``.

    Construct through :meth:`from_poly`, which validates the form.
    """

    __slots__ = ("eq", "n")

    def __init__(self, eq: Poly, n: int):
        self.eq = eq
        self.n = n

    @classmethod
    def from_poly(cls, P: Poly) -> "WeierstrassSurface":
        if not P:
            raise SurfaceError("the zero polynomial is not a surface equation")
        n = P.degree("Z")
        if n <= 0:
            raise SurfaceError(f"{P} does not involve Z")
        if P.coeff_in("Z", n) != 1:
            raise SurfaceError(f"{P} is not monic in Z")
        order = P.order()
        if order != n:
            raise SurfaceError(f"order of {P} is {order}, expected Z-degree {n}")
        return cls(P, n)

    @property
    def field(self):
        return self.eq.field

    def z_profile(self) -> list[Poly]:
        """Coefficients ``a_0 .. a_{n-1}`` of the powers of Z, as polynomials in X, Y."""
        return [self.eq.coeff_in("Z", k) for k in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, WeierstrassSurface):
            return NotImplemented
        return self.n == other.n and self.eq == other.eq

    def __hash__(self):
        return hash((self.n, self.eq))

    def __repr__(self):
        return f"WeierstrassSurface({str(self.eq)!r}, n={self.n})"

    def __str__(self):
        return str(self.eq)


def from_poly(P: Poly) -> WeierstrassSurface:
    return WeierstrassSurface.from_poly(P)


def z_profile(S: WeierstrassSurface) -> list[Poly]:
    return S.z_profile()


def z_translate(S: WeierstrassSurface, alpha: Poly) -> WeierstrassSurface:
    """Apply the change of variables ``Z -> Z + alpha(X, Y)``.

    ``alpha`` must not involve Z and must vanish at the origin.
    """
    if "Z" in alpha.variables():
        raise PreconditionError(f"translation {alpha} involves Z")
    if alpha.coefficient((0, 0, 0)):
        raise PreconditionError(f"translation {alpha} is a unit")
    if not alpha:
        return S
    z = Poly.var("Z", S.field)
    return WeierstrassSurface.from_poly(substitute(S.eq, {"Z": z + alpha}))


def is_wt(S: WeierstrassSurface) -> bool:
    return not S.eq.coeff_in("Z", S.n - 1)


def tchirnhausen(S: WeierstrassSurface) -> WeierstrassSurface:
    """Kill the ``Z^{n-1}`` coefficient via ``Z -> Z - a_{n-1}/n``."""
    char = S.field.characteristic
    if char and S.n % char == 0:
        raise PreconditionError(f"characteristic {char} divides the multiplicity {S.n}")
    top = S.eq.coeff_in("Z", S.n - 1)
    if not top:
        return S
    return z_translate(S, top * (S.field(-1) / S.n))
