"""Exact convex polytopes in ambient dimension 1 to 3.

A :class:`Polytope` keeps its extreme points sorted lexicographically, so two
polytopes are equal exactly when their vertex tuples are equal.  Inequalities
are stored as integer rows ``normal . x <= offset`` scaled to lowest terms.
For a polytope that is not full-dimensional the inequalities only involve
the chart coordinates and are valid inside the affine hull, which is cut out
by ``equations``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import kernels

Point = Tuple  # of int / Fraction


def _q(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return x


def as_point(coords: Iterable) -> Point:
    out = []
    for c in coords:
        if isinstance(c, bool):
            raise TypeError("booleans are not coordinates")
        if isinstance(c, int):
            out.append(c)
        elif isinstance(c, Fraction):
            out.append(_q(c))
        elif isinstance(c, str):
            out.append(parse_rational(c))
        else:
            raise TypeError(f"coordinate {c!r} is not exact (int, Fraction or 'p/q')")
    return tuple(out)


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _primitive(normal: Sequence, offset=0) -> Tuple[Tuple[int, ...], int]:
    """Scale ``(normal, offset)`` to coprime integers, preserving the sign."""
    den = 1
    for v in (*normal, offset):
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in (*normal, offset)]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    g = g or 1
    ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _canonical_sign(normal, offset):
    lead = next((v for v in normal if v), 0)
    if lead < 0:
        return tuple(-v for v in normal), -offset
    return normal, offset


class Halfspace(NamedTuple):
    """The set ``{x : normal . x <= offset}`` with coprime integer data."""

    normal: Tuple[int, ...]
    offset: int

    @classmethod
    def make(cls, normal: Sequence, offset) -> "Halfspace":
        normal = as_point(normal)
        if not any(normal):
            raise ValueError("halfspace normal must be nonzero")
        n, c = _primitive(normal, _q(Fraction(offset)))
        return cls(n, c)

    def complement(self) -> "Halfspace":
        """The opposite closed halfspace (shares the boundary hyperplane)."""
        return Halfspace(tuple(-v for v in self.normal), -self.offset)

    def value(self, x):
        return _dot(self.normal, x)


def _rref(rows: List[List[Fraction]], ncols: int):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return len(_rref([[Fraction(v) for v in row] for row in vectors], len(vectors[0]))[1])


class Polytope:
    """Immutable exact convex polytope.  Build it with :func:`convex_hull`."""

    __slots__ = (
        "vertices", "dim_ambient", "dim_affine", "facets", "equations",
        "_chart", "_cycle", "_facet_cycles", "_edges", "__weakref__",
    )

    def __init__(self, vertices, dim_ambient, dim_affine, facets, equations, chart, cycle, facet_cycles):
        self.vertices: Tuple[Point, ...] = vertices
        self.dim_ambient: int = dim_ambient
        self.dim_affine: int = dim_affine
        self.facets: Tuple[Halfspace, ...] = facets
        self.equations: Tuple[Halfspace, ...] = equations
        self._chart = chart
        self._cycle = cycle
        self._facet_cycles = facet_cycles
        self._edges = None

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim_ambient, self.vertices))

    def __repr__(self):
        vs = ", ".join("(" + ", ".join(format_rational(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope([{vs}])"

    def __len__(self):
        return len(self.vertices)

    @property
    def is_point(self) -> bool:
        return self.dim_affine == 0


def _hull_in_chart(proj: List[Point], k: int):
    """Hull of distinct points spanning k-space.

    Returns (vertex indices, facets as (normal, offset) in chart coordinates,
    2D cycle or None, facet cycles for k == 3 as lists of point indices).
    """
    if k == 0:
        return [0], [], None, None
    if k == 1:
        lo = min(range(len(proj)), key=lambda i: proj[i][0])
        hi = max(range(len(proj)), key=lambda i: proj[i][0])
        return [lo, hi], [((-1,), -proj[lo][0]), ((1,), proj[hi][0])], None, None
    if k == 2:
        cyc = kernels.hull2d(proj)
        facets = []
        for t, a in enumerate(cyc):
            b = cyc[(t + 1) % len(cyc)]
            pa, pb = proj[a], proj[b]
            n = (pb[1] - pa[1], pa[0] - pb[0])
            facets.append((n, _dot(n, pa)))
        return list(cyc), facets, cyc, None
    tris = kernels.hull3d(proj)
    planes = {}
    for a, b, c in tris:
        pa = proj[a]
        u, v = _sub(proj[b], pa), _sub(proj[c], pa)
        n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        planes[_primitive(n, _dot(n, pa))] = None
    facets = list(planes)
    cand = sorted({i for t in tris for i in t})
    on = {i: [f for f in facets if _dot(f[0], proj[i]) == f[1]] for i in cand}
    verts = [i for i in cand if rank([f[0] for f in on[i]]) == 3]
    fcycles = []
    for f in facets:
        members = [i for i in verts if _dot(f[0], proj[i]) == f[1]]
        drop = next(j for j in range(3) if f[0][j])
        keep = [j for j in range(3) if j != drop]
        sub = [tuple(proj[i][j] for j in keep) for i in members]
        order = kernels.hull2d(sub)
        fcycles.append([members[t] for t in order])
    return verts, facets, None, fcycles


def convex_hull(points: Iterable[Iterable]) -> Polytope:
    """Canonical polytope spanned by a nonempty finite point set."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise ValueError("convex_hull of an empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    if d not in (1, 2, 3):
        raise ValueError(f"ambient dimension {d} not supported (1..3)")
    p0 = pts[0]
    diffs = [[Fraction(x) for x in _sub(p, p0)] for p in pts[1:]]
    basis, pivots = _rref(diffs, d) if diffs else ([], [])
    k = len(pivots)
    equations = []
    for free in (c for c in range(d) if c not in pivots):
        vec = [Fraction(0)] * d
        vec[free] = Fraction(1)
        for row, pc in zip(basis, pivots):
            vec[pc] = -row[free]
        n, c = _primitive(vec, _q(sum(a * b for a, b in zip(vec, p0))))
        equations.append(Halfspace(*_canonical_sign(n, c)))
    proj = [tuple(p[s] for s in pivots) for p in pts]
    vidx, cfacets, cyc, fcyc = _hull_in_chart(proj, k)
    order = sorted(set(vidx))
    pos = {old: new for new, old in enumerate(order)}
    vertices = tuple(pts[i] for i in order)
    facets = []
    for n, c in cfacets:
        full = [0] * d
        for s, val in zip(pivots, n):
            full[s] = val
        facets.append(Halfspace(*_primitive(full, c)))
    cycle = tuple(pos[i] for i in cyc) if cyc is not None else None
    fcycles = None
    if fcyc is not None:
        pairs = sorted(zip(facets, (tuple(pos[i] for i in fc) for fc in fcyc)))
        facets = [f for f, _ in pairs]
        fcycles = tuple(fc for _, fc in pairs)
    elif k != 2:
        facets.sort()
    return Polytope(vertices, d, k, tuple(facets), tuple(sorted(equations)), tuple(pivots), cycle, fcycles)


def point_polytope(p: Iterable) -> Polytope:
    return convex_hull([p])


def _check_dims(P: Polytope, Q: Polytope):
    if P.dim_ambient != Q.dim_ambient:
        raise ValueError(f"dimension mismatch: {P.dim_ambient} vs {Q.dim_ambient}")


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    _check_dims(P, Q)
    if Q.is_point:
        return translate(P, Q.vertices[0])
    if P.is_point:
        return translate(Q, P.vertices[0])
    return convex_hull(_add(a, b) for a, b in product(P.vertices, Q.vertices))


def contains(P: Polytope, Q: Polytope) -> bool:
    """True iff Q is a subset of P."""
    _check_dims(P, Q)
    for n, c in P.equations:
        for v in Q.vertices:
            if _dot(n, v) != c:
                return False
    if not P.facets:
        return True
    return kernels.all_within(Q.vertices, [f.normal for f in P.facets], [f.offset for f in P.facets])


def contains_point(P: Polytope, x: Sequence) -> bool:
    x = as_point(x)
    if len(x) != P.dim_ambient:
        raise ValueError("dimension mismatch")
    return all(_dot(n, x) == c for n, c in P.equations) and all(
        _dot(n, x) <= c for n, c in P.facets
    )


def translate(P: Polytope, v: Sequence) -> Polytope:
    v = as_point(v)
    if len(v) != P.dim_ambient:
        raise ValueError("dimension mismatch")
    if not any(v):
        return P
    verts = tuple(tuple(_q(x + y) for x, y in zip(p, v)) for p in P.vertices)
    facets = tuple(Halfspace(*_primitive(n, _q(c + _dot(n, v)))) for n, c in P.facets)
    eqs = tuple(
        Halfspace(*_canonical_sign(*_primitive(n, _q(c + _dot(n, v))))) for n, c in P.equations
    )
    if P._facet_cycles is None:
        facets = tuple(sorted(facets)) if P._cycle is None else facets
        return Polytope(verts, P.dim_ambient, P.dim_affine, facets, eqs, P._chart, P._cycle, None)
    pairs = sorted(zip(facets, P._facet_cycles))
    return Polytope(
        verts, P.dim_ambient, P.dim_affine, tuple(f for f, _ in pairs), eqs,
        P._chart, P._cycle, tuple(c for _, c in pairs),
    )


def negate(P: Polytope) -> Polytope:
    return convex_hull(tuple(-c for c in v) for v in P.vertices)


def clip(P: Polytope, h) -> Optional[Polytope]:
    """``P`` intersected with a halfspace; ``None`` when empty."""
    if not isinstance(h, Halfspace):
        h = Halfspace.make(*h)
    if len(h.normal) != P.dim_ambient:
        raise ValueError("dimension mismatch")
    vals = [h.value(v) for v in P.vertices]
    keep = [v for v, s in zip(P.vertices, vals) if s <= h.offset]
    if len(keep) == len(P.vertices):
        return P
    index = {v: s for v, s in zip(P.vertices, vals)}
    for a, b in edges(P):
        sa, sb = index[a], index[b]
        if (sa < h.offset) != (sb < h.offset) and sa != h.offset and sb != h.offset:
            t = Fraction(h.offset - sa) / (sb - sa)
            keep.append(tuple(_q(x + t * (y - x)) for x, y in zip(a, b)))
    if not keep:
        return None
    return convex_hull(keep)


def intersect_halfspaces(P: Polytope, hs: Iterable) -> Optional[Polytope]:
    out = P
    for h in hs:
        out = clip(out, h)
        if out is None:
            return None
    return out


def halfspaces(P: Polytope) -> List[Halfspace]:
    """Ambient inequalities whose solution set is exactly ``P``.

    Equations come first as pairs of opposite halfspaces; the facet rows are
    only meaningful inside the affine hull, so they must be applied after.
    """
    out = []
    for h in P.equations:
        out.extend((h, h.complement()))
    out.extend(P.facets)
    return out


def intersection(P: Polytope, Q: Polytope) -> Optional[Polytope]:
    """``P`` intersected with ``Q``; ``None`` when they are disjoint."""
    _check_dims(P, Q)
    return intersect_halfspaces(P, halfspaces(Q))


def _det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def volume(P: Polytope):
    """Lebesgue measure in the coordinate chart (0 unless full-dimensional)."""
    if P.dim_affine < P.dim_ambient:
        return 0
    vs = P.vertices
    if P.dim_ambient == 1:
        return _q(Fraction(vs[-1][0] - vs[0][0]))
    if P.dim_ambient == 2:
        cyc = [vs[i] for i in P._cycle]
        s = 0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            s += a[0] * b[1] - a[1] * b[0]
        return _q(abs(Fraction(s)) / 2)
    r = vs[0]
    total = 0
    for fc in P._facet_cycles:
        pts = [_sub(vs[i], r) for i in fc]
        for t in range(1, len(pts) - 1):
            total += abs(_det3(pts[0], pts[t], pts[t + 1]))
    return _q(Fraction(total) / 6)


def edges(P: Polytope) -> List[Tuple[Point, Point]]:
    """All 1-faces as lexicographically ordered vertex pairs."""
    if P._edges is not None:
        return P._edges
    vs = P.vertices
    if P.dim_affine == 0:
        out = []
    elif P.dim_affine == 1:
        out = [(vs[0], vs[1])]
    elif P.dim_affine == 2:
        cyc = P._cycle
        out = sorted({tuple(sorted((vs[a], vs[b]))) for a, b in zip(cyc, cyc[1:] + cyc[:1])})
    else:
        pairs = set()
        for fc in P._facet_cycles:
            for a, b in zip(fc, fc[1:] + fc[:1]):
                pairs.add(tuple(sorted((vs[a], vs[b]))))
        out = sorted(pairs)
    P._edges = out
    return out


def boundary(P: Polytope) -> List[Point]:
    """Vertices in boundary order for polytopes of affine dimension at most 2."""
    if P.dim_affine > 2:
        raise ValueError("boundary order is defined for affine dimension <= 2")
    if P.dim_affine == 2:
        return [P.vertices[i] for i in P._cycle]
    return list(P.vertices)


def facet_vertices(P: Polytope) -> List[Tuple[Point, ...]]:
    """Vertices on each facet, in boundary order (full-dimensional 3D only)."""
    if P._facet_cycles is None:
        raise ValueError("facet cycles are only tracked for 3-dimensional polytopes")
    return [tuple(P.vertices[i] for i in fc) for fc in P._facet_cycles]


def extreme_vertex(P: Polytope, direction: Sequence) -> Point:
    """The unique vertex maximizing ``direction . x``; ties raise ``ValueError``."""
    direction = as_point(direction)
    if not any(direction):
        raise ValueError("direction must be nonzero")
    vals = [_dot(direction, v) for v in P.vertices]
    best = max(vals)
    tied = [v for v, s in zip(P.vertices, vals) if s == best]
    if len(tied) > 1:
        raise ValueError(f"functional is maximized at several vertices: {tied}")
    return tied[0]


def is_parallel(u: Sequence, v: Sequence) -> bool:
    return rank([u, v]) <= 1


# ------------------------------------------------------------ serialization

def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> object:
    if isinstance(s, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(s, int):
        return s
    if not isinstance(s, str):
        raise TypeError(f"expected an exact rational string, got {s!r}")
    return _q(Fraction(s.strip()))


def polytope_to_json(P: Polytope) -> List[List[str]]:
    return [[format_rational(c) for c in v] for v in P.vertices]


def polytope_from_json(rows) -> Polytope:
    return convex_hull([[parse_rational(c) for c in row] for row in rows])
