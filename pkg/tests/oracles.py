"""Independent brute-force references for the polygon code."""

from fractions import Fraction
from itertools import combinations


def dominates_segment(q, a, b):
    """True iff q >= some point of the segment [a, b] componentwise."""
    if q[0] >= a[0] and q[1] >= a[1]:
        return True
    if q[0] >= b[0] and q[1] >= b[1]:
        return True
    if a[0] > b[0]:
        a, b = b, a
    if not (a[0] < b[0] and a[1] > b[1]):
        return False
    # region above a decreasing segment, bounded by its two rays
    if q[0] < a[0] or q[1] < b[1]:
        return False
    cross = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
    return cross >= 0


def in_region(q, points):
    """Membership in conv(points) + first quadrant, by pairs (plane Caratheodory)."""
    pts = list(points)
    if any(q[0] >= p[0] and q[1] >= p[1] for p in pts):
        return True
    return any(dominates_segment(q, a, b) for a, b in combinations(pts, 2))


def brute_vertices(points):
    """Extreme points: members not in the region spanned by the others."""
    pts = sorted(set(points))
    return [p for p in pts if not in_region(p, [q for q in pts if q != p])]


def grid(denominator=12, limit=10):
    return [
        (Fraction(a, denominator), Fraction(b, denominator))
        for a in range(limit * denominator + 1)
        for b in range(limit * denominator + 1)
    ]
