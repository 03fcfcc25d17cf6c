"""Deterministic SVG drawing of a Newton polygon.

Pixel coordinates are computed exactly and rounded to two decimals with
rational arithmetic, so the output is byte-identical across platforms.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polygon import NewtonPolygon

SIZE = 480
MARGIN = 40


def _num(x: Fraction) -> str:
    q = round(Fraction(x) * 100)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, cents = divmod(q, 100)
    if cents == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{cents:02d}".rstrip("0")


def _extent(polygon: NewtonPolygon) -> int:
    top = max((max(x, y) for x, y in polygon.vertices), default=Fraction(0))
    return max(2, math.floor(top) + 1)


def polygon_svg(polygon: NewtonPolygon) -> str:
    span = _extent(polygon)
    scale = Fraction(SIZE - 2 * MARGIN, span)

    def px(x) -> str:
        return _num(MARGIN + Fraction(x) * scale)

    def py(y) -> str:
        return _num(SIZE - MARGIN - Fraction(y) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for u in range(span + 1):
        lines.append(f'<line x1="{px(u)}" y1="{py(0)}" x2="{px(u)}" y2="{py(span)}"/>')
        lines.append(f'<line x1="{px(0)}" y1="{py(u)}" x2="{px(span)}" y2="{py(u)}"/>')
    lines.append("</g>")
    lines.append(
        f'<g stroke="black" stroke-width="2">'
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(span)}" y2="{py(0)}"/>'
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(0)}" y2="{py(span)}"/></g>'
    )
    for u in range(span + 1):
        lines.append(
            f'<text x="{px(u)}" y="{_num(SIZE - MARGIN + 16)}" font-size="12" '
            f'text-anchor="middle">{u}</text>'
        )
        if u:
            lines.append(
                f'<text x="{_num(MARGIN - 8)}" y="{py(u)}" font-size="12" '
                f'text-anchor="end">{u}</text>'
            )
    vs = polygon.vertices
    if vs:
        path = [(vs[0][0], span)] + list(vs) + [(span, vs[-1][1])]
        pts = " ".join(f"{px(x)},{py(y)}" for x, y in path)
        lines.append(f'<polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="2"/>')
        for x, y in vs:
            lines.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="5" fill="#1f4e9c"/>')
            lines.append(
                f'<text x="{_num(MARGIN + Fraction(x) * scale + 8)}" '
                f'y="{_num(SIZE - MARGIN - Fraction(y) * scale - 8)}" font-size="13">'
                f"({x},{y})</text>"
            )
    else:
        lines.append(f'<text x="{SIZE // 2}" y="{SIZE // 2}" font-size="14" text-anchor="middle">empty</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
