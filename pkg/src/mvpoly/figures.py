"""SVG pictures of rank 1 and 2 polytopes and JSON scenes for rank 3.

Pictures are drawn in the Euclidean plane of the invariant form: simple-root
coordinates are sheared by a Cholesky factor of the Gram matrix, so the A2
roots sit at 120 degrees and the C2 roots at 135.  ``projection="chart"``
skips the shear and draws the root coordinates as they are.
"""

from __future__ import annotations

import json
import math
from typing import List, Sequence, Tuple

from . import geometry as geo
from .geometry import Polytope
from .rootsys import RootSystem

UNIT = 60.0
MARGIN = 30.0


def _basis(rs: RootSystem, projection: str) -> List[Tuple[float, float]]:
    if rs.rank == 1:
        return [(1.0, 0.0)]
    if projection == "chart":
        return [(1.0, 0.0), (0.0, 1.0)]
    if projection != "euclid":
        raise ValueError(f"unknown projection {projection!r}")
    b = rs.symmetrized_form
    scale = math.sqrt(float(b[0][0]))
    x2 = float(b[0][1]) / scale
    y2 = math.sqrt(float(b[1][1]) - x2 * x2)
    return [(1.0, 0.0), (x2 / scale, y2 / scale)]


def planar(rs: RootSystem, v: Sequence, projection: str = "euclid") -> Tuple[float, float]:
    basis = _basis(rs, projection)
    x = sum(float(c) * e[0] for c, e in zip(v, basis))
    y = sum(float(c) * e[1] for c, e in zip(v, basis))
    return x, y


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class _Canvas:
    def __init__(self):
        self.items: List[str] = []
        self.xs: List[float] = []
        self.ys: List[float] = []

    def _pt(self, p):
        x, y = p[0] * UNIT, -p[1] * UNIT
        self.xs.append(x)
        self.ys.append(y)
        return f"{_fmt(x)},{_fmt(y)}"

    def polygon(self, pts, style):
        if len(pts) == 1:
            x, y = self._pt(pts[0]).split(",")
            self.items.append(f'<circle cx="{x}" cy="{y}" r="3" {style}/>')
        elif len(pts) == 2:
            a, b = self._pt(pts[0]), self._pt(pts[1])
            self.items.append(f'<polyline points="{a} {b}" {style}/>')
        else:
            self.items.append(f'<polygon points="{" ".join(self._pt(p) for p in pts)}" {style}/>')

    def dot(self, p, fill):
        x, y = self._pt(p).split(",")
        self.items.append(f'<circle cx="{x}" cy="{y}" r="3" fill="{fill}"/>')

    def arrow(self, p, q, colour):
        a, b = self._pt(p), self._pt(q)
        self.items.append(f'<polyline points="{a} {b}" stroke="{colour}" stroke-width="1" fill="none" marker-end="url(#tip)"/>')

    def text(self, p, s, size=12):
        x, y = self._pt(p).split(",")
        self.items.append(f'<text x="{x}" y="{y}" font-size="{size}" font-family="sans-serif">{s}</text>')

    def render(self) -> str:
        x0, x1 = min(self.xs) - MARGIN, max(self.xs) + MARGIN
        y0, y1 = min(self.ys) - MARGIN, max(self.ys) + MARGIN
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}" '
            f'width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}">\n'
            '<defs><marker id="tip" markerWidth="6" markerHeight="6" refX="5" refY="3" orient="auto">'
            '<path d="M0,0 L6,3 L0,6 z" fill="#888"/></marker></defs>\n'
        )
        return head + "\n".join(self.items) + "\n</svg>\n"


_STYLE = 'fill="#cfe3f7" fill-opacity="0.8" stroke="#1f4e79" stroke-width="1.5"'


def polytope_svg(rs: RootSystem, P: Polytope, label: str = "", projection: str = "euclid",
                 mark=None) -> str:
    """One polytope; ``mark`` is a root-basis point drawn as a black dot."""
    c = _Canvas()
    _draw(c, rs, P, (0.0, 0.0), projection, label, mark)
    return c.render()


def _draw(c, rs, P, offset, projection, label, mark):
    pts = [planar(rs, v, projection) for v in geo.boundary(P)]
    pts = [(x + offset[0], y + offset[1]) for x, y in pts]
    c.polygon(pts, _STYLE)
    top = planar(rs, (0,) * rs.rank, projection)
    c.dot((top[0] + offset[0], top[1] + offset[1]), "#1f4e79")
    if mark is not None:
        m = planar(rs, mark, projection)
        c.dot((m[0] + offset[0], m[1] + offset[1]), "black")
    if label:
        c.text((offset[0] - 0.2, offset[1] + 0.35), label)


def combined_svg(rs: RootSystem, entries, projection: str = "euclid", title: str = "") -> str:
    """All ``(label, polytope)`` entries in a row, with the simple roots drawn at the left."""
    c = _Canvas()
    x = 0.0
    for i, _ in enumerate(rs.cartan_matrix):
        e = tuple(1 if j == i else 0 for j in range(rs.rank))
        tip = planar(rs, e, projection)
        c.arrow((x, 0.0), (x + tip[0], tip[1]), "#888")
        c.text((x + tip[0], tip[1] + 0.1), f"α{i + 1}", 11)
    x += 2.0
    for label, P in entries:
        xs = [planar(rs, v, projection)[0] for v in P.vertices]
        shift = x - min(xs)
        _draw(c, rs, P, (shift, 0.0), projection, label, None)
        x = shift + max(xs) + 1.5
    if title:
        c.text((0.0, 1.2), title, 14)
    return c.render()


def scene_json(group: str, degree, entries) -> str:
    """Rank-3 scene: vertices and edges of each polytope in simple-root coordinates."""
    doc = {
        "group": group,
        "degree": list(degree),
        "coordinates": "simple roots",
        "polytopes": [
            {
                "monomial": label,
                "vertices": geo.polytope_to_json(P),
                "edges": [[P.vertices.index(a), P.vertices.index(b)] for a, b in geo.edges(P)],
            }
            for label, P in entries
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


_OUT = 'fill="#f7cfcf" fill-opacity="0.8" stroke="#8b1a1a" stroke-width="1.5"'
_HULL = 'fill="none" stroke="#555" stroke-width="1" stroke-dasharray="4,3"'


def multiplicity_svg(rs: RootSystem, hull: Polytope, placed, projection: str = "euclid", title: str = "") -> str:
    """One panel per ``(label, polytope, inside, mark)``: the orbit hull with the polytope placed in it.

    Polytopes that stick out are drawn in red; the weight where the lowest
    vertex sits is marked with a black dot.
    """
    c = _Canvas()
    xs = [planar(rs, v, projection)[0] for v in hull.vertices]
    width = max(xs) - min(xs) + 1.0
    for i, (label, P, inside, mark) in enumerate(placed):
        dx = i * width
        c.polygon([_off(planar(rs, v, projection), dx) for v in geo.boundary(hull)], _HULL)
        c.polygon([_off(planar(rs, v, projection), dx) for v in geo.boundary(P)], _STYLE if inside else _OUT)
        c.dot(_off(planar(rs, mark, projection), dx), "black")
        low = min(planar(rs, v, projection)[1] for v in hull.vertices)
        c.text((min(xs) + dx, low - 0.5), f"{label} ({'inside' if inside else 'sticks out'})", 11)
    if title:
        top = max(planar(rs, v, projection)[1] for v in hull.vertices)
        c.text((min(xs), top + 0.6), title, 13)
    return c.render()


def _off(p, dx):
    return p[0] + dx, p[1]
