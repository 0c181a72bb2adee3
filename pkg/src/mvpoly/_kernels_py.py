"""Pure-Python exact kernels.

Every function accepts sequences of exact numbers (``int`` or ``Fraction``)
and is the reference behaviour the compiled module must reproduce.
"""

from __future__ import annotations


def all_within(points, normals, offsets) -> bool:
    """True iff ``n . p <= c`` for every point and every (n, c)."""
    for n, c in zip(normals, offsets):
        for p in points:
            s = 0
            for a, b in zip(n, p):
                s += a * b
            if s > c:
                return False
    return True


def hull2d(points):
    """Indices of the strict convex hull in counter-clockwise order.

    Points must be distinct and not all collinear.  Collinear boundary points
    are dropped.
    """
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))

    def cross(o, a, b):
        po, pa, pb = points[o], points[a], points[b]
        return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0])

    lower = []
    for i in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def hull3d(points):
    """Outward-oriented triangles ``(i, j, k)`` covering the hull boundary.

    Points must be distinct and affinely span 3-space.  Coplanar adjacent
    triangles may remain; callers merge them by supporting plane.
    """
    n = len(points)
    p = points
    i0 = 0
    i1 = next(i for i in range(n) if p[i] != p[i0])
    d01 = _sub(p[i1], p[i0])
    i2 = next(i for i in range(n) if any(_cross(d01, _sub(p[i], p[i0]))))
    nrm = _cross(d01, _sub(p[i2], p[i0]))
    i3 = next(i for i in range(n) if _dot(nrm, _sub(p[i], p[i0])) != 0)
    base = (i0, i1, i2, i3)
    # 4 * centroid avoids fractions in the orientation test
    c4 = tuple(sum(p[i][k] for i in base) for k in range(3))

    faces = {}

    def add(a, b, c):
        nn = _cross(_sub(p[b], p[a]), _sub(p[c], p[a]))
        faces[(a, b, c)] = (nn, _dot(nn, p[a]))

    for a, b, c in ((i0, i1, i2), (i0, i1, i3), (i0, i2, i3), (i1, i2, i3)):
        nn = _cross(_sub(p[b], p[a]), _sub(p[c], p[a]))
        if _dot(nn, c4) - 4 * _dot(nn, p[a]) > 0:
            a, b = b, a
        add(a, b, c)

    used = set(base)
    for idx in range(n):
        if idx in used:
            continue
        q = p[idx]
        visible = [f for f, (nn, off) in faces.items() if _dot(nn, q) > off]
        if not visible:
            continue
        edges = set()
        for a, b, c in visible:
            edges.update(((a, b), (b, c), (c, a)))
        horizon = [e for e in edges if (e[1], e[0]) not in edges]
        for f in visible:
            del faces[f]
        for a, b in horizon:
            add(a, b, idx)
        used.add(idx)
    return list(faces)
