"""Exact blow-up engine for surface singularities in Weierstrass form."""

__version__ = "0.1.0"

from .driver import (
    ResolutionTrace,
    Strategy,
    counterexample_report,
    lz_step,
    family_surface,
    run,
    verify_cycle_sequence,
)
from .errors import (
    BlowupError,
    InvariantError,
    NotPermittedError,
    ParseError,
    PreconditionError,
    StepCapError,
    SurfaceError,
)
from .expr import parse_center, parse_poly, parse_script, print_canonical
from .polygon import (
    NewtonPolygon,
    contractible,
    hull,
    is_minimal,
    minimize,
    newton_polygon,
    projected_points,
    vertex_fiber,
)
from .polyring import Poly
from .scalar import GF, QQ, Field, ModP, binomial_in_field, nth_roots
from .surface import WeierstrassSurface, is_wt, tchirnhausen, z_translate
from .transform import (
    CurveCenter,
    Direction,
    find_permitted_curves,
    is_permitted,
    monoidal,
    near_points,
    quadratic,
)
