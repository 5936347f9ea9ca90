"""SVG pictures of the dominant m-minimal alcoves for n = 3.

V is projected orthonormally onto the plane with x along (2,-1,-1)/sqrt6
and y along (0,1,-1)/sqrt2, so alcoves are equilateral triangles.  Floats
appear only here, after all combinatorics has been done exactly.
"""

from __future__ import annotations

from math import sqrt
from xml.sax.saxutils import escape

from .affine import act_point
from .bijection import enumerate_catalog
from .rootsys import RationalPoint, fundamental_alcove_vertices, positive_roots

EDGE = 100.0  # svg units per alcove edge
_SCALE = EDGE / sqrt(2 / 3)


class UnsupportedRankError(ValueError):
    pass


def project(p) -> tuple[float, float]:
    a1, a2, a3 = (float(c) for c in p)
    x = (2 * a1 - a2 - a3) / sqrt(6)
    y = (a2 - a3) / sqrt(2)
    return x * _SCALE, -y * _SCALE


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _line_for(root, k: int, half_length: float) -> tuple[tuple[float, float], tuple[float, float]]:
    ax, ay = project(root.vector(3))
    norm2 = ax * ax + ay * ay
    # <v, root> = k is the line x . a = k * scale^2 in screen units
    c = k * _SCALE * _SCALE / norm2
    x0, y0 = ax * c, ay * c
    dx, dy = -ay / sqrt(norm2), ax / sqrt(norm2)
    return (x0 - dx * half_length, y0 - dy * half_length), (x0 + dx * half_length, y0 + dy * half_length)


def render_svg(n: int, m: int) -> str:
    if n != 3:
        raise UnsupportedRankError("rendering is implemented for n = 3 only")
    catalog = enumerate_catalog(n, m)
    reach = m + 2
    corners = [
        project(RationalPoint((0, 0, 0))),
        project(RationalPoint((2 * reach, -reach, -reach), 3)),
        project(RationalPoint((reach, reach, -2 * reach), 3)),
    ]
    pad = EDGE * 0.6
    xmin = min(x for x, _ in corners) - pad
    xmax = max(x for x, _ in corners) + pad
    ymin = min(y for _, y in corners) - pad
    ymax = max(y for _, y in corners) + pad
    width, height = xmax - xmin, ymax - ymin

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="{_fmt(xmin)} {_fmt(ymin)} {_fmt(width)} {_fmt(height)}">',
        f"<title>dominant {m}-minimal alcoves for n=3 labelled by 3-cores</title>",
        "<defs><clipPath id=\"view\">"
        f'<rect x="{_fmt(xmin)}" y="{_fmt(ymin)}" width="{_fmt(width)}" height="{_fmt(height)}"/>'
        "</clipPath></defs>",
        '<g id="alcoves" stroke="none">',
    ]
    verts = fundamental_alcove_vertices(3)
    labels = []
    for e in catalog:
        pts = [project(act_point(e.alcove.element, v)) for v in verts]
        path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        fill = "#f2c94c" if e.narayana_k == 0 else "#7fa7e0"
        out.append(f'<polygon class="minimal" points="{path}" fill="{fill}" fill-opacity="0.7"/>')
        cx = sum(x for x, _ in pts) / 3
        cy = sum(y for _, y in pts) / 3
        text = str(e.core)
        size = min(EDGE * 0.16, EDGE * 0.5 / max(1, len(text)) * 1.6)
        labels.append(
            f'<text x="{_fmt(cx)}" y="{_fmt(cy + size * 0.35)}" font-size="{_fmt(size)}" '
            f'text-anchor="middle" font-family="sans-serif">{escape(text)}</text>'
        )
    out.append("</g>")

    out.append('<g id="hyperplanes" clip-path="url(#view)" stroke-linecap="round">')
    half = 2 * (width + height)
    for root in positive_roots(3):
        for k in range(-reach, reach + 1):
            (x1, y1), (x2, y2) = _line_for(root, k, half)
            shi = -m < k <= m
            colour = "#c0392b" if shi else "#9a9a9a"
            w = 2.0 if shi else 0.8
            out.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{colour}" stroke-width="{w}"/>'
            )
    out.append("</g>")
    out.append('<g id="labels">')
    out.extend(labels)
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
