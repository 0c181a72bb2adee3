from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from scipy.spatial import ConvexHull

from mvpoly import geometry as geo
from mvpoly import kernels
from mvpoly.geometry import Halfspace


def square():
    return geo.convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])


def octahedron():
    pts = []
    for i in range(3):
        for s in (1, -1):
            v = [0, 0, 0]
            v[i] = s
            pts.append(v)
    return geo.convex_hull(pts)


def test_square():
    P = square()
    assert len(P.vertices) == 4 and len(P.facets) == 4
    assert geo.volume(P) == 1
    assert P.dim_affine == 2 and not P.equations


def test_octahedron():
    P = octahedron()
    assert len(P.facets) == 8
    assert len(geo.edges(P)) == 12
    assert geo.volume(P) == Fraction(4, 3)
    assert all(len(f) == 3 for f in geo.facet_vertices(P))


def test_triangles_sum_to_hexagon():
    t1 = geo.convex_hull([(0, 0), (-1, 0), (-1, -1)])
    t2 = geo.convex_hull([(0, 0), (0, -1), (-1, -1)])
    H = geo.minkowski_sum(t1, t2)
    assert len(H.vertices) == 6
    assert geo.volume(H) == 3


def test_clip_and_intersection():
    half = geo.clip(square(), Halfspace.make((2, 0), -1))
    assert half is None
    half = geo.clip(square(), Halfspace.make((2, 0), 1))
    assert geo.volume(half) == Fraction(1, 2)
    assert geo.intersection(square(), geo.convex_hull([(1, 1), (2, 0)])) == geo.point_polytope((1, 1))
    assert geo.intersection(square(), geo.convex_hull([(2, 2), (3, 3)])) is None


def test_lower_dimensional_hulls():
    seg = geo.convex_hull([(0, 0, 0), (1, 1, 1), (2, 2, 2)])
    assert seg.vertices == ((0, 0, 0), (2, 2, 2))
    assert seg.dim_affine == 1 and len(seg.equations) == 2
    tri = geo.convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (Fraction(1, 2), Fraction(1, 2), 0)])
    assert tri.dim_affine == 2 and len(tri.vertices) == 4
    assert geo.contains(tri, geo.point_polytope((Fraction(1, 3), Fraction(1, 3), 0)))
    assert not geo.contains(tri, geo.point_polytope((0, 0, 1)))


def test_halfspace_normalization():
    h = Halfspace.make((2, 4), 6)
    assert h == Halfspace((1, 2), 3)
    assert Halfspace.make(("1/2", 0), "1/4") == Halfspace((2, 0), 1)
    with pytest.raises(ValueError):
        Halfspace.make((0, 0), 1)


def test_extreme_vertex():
    assert geo.extreme_vertex(square(), (1, 2)) == (1, 1)
    with pytest.raises(ValueError):
        geo.extreme_vertex(square(), (1, 0))


def test_exact_inputs_only():
    with pytest.raises(TypeError):
        geo.convex_hull([(0.5, 0)])
    with pytest.raises(ValueError):
        geo.convex_hull([])
    assert geo.as_point(["1/2", 3]) == (Fraction(1, 2), 3)


def test_json_roundtrip():
    P = geo.convex_hull([(0, 0), (Fraction(1, 2), 0), (0, Fraction(-3, 2))])
    rows = geo.polytope_to_json(P)
    assert rows[0] == ["0", "-3/2"]
    assert geo.polytope_from_json(rows) == P


def test_large_coordinates_use_exact_fallback():
    big = 1 << 40
    P = geo.convex_hull([(0, 0, 0), (big, 0, 0), (0, big, 0), (0, 0, big), (1, 1, 1)])
    assert len(P.vertices) == 4
    assert geo.contains(P, geo.point_polytope((1, 1, 1)))


points2 = st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=3, max_size=14, unique=True)
points3 = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
                   min_size=4, max_size=14, unique=True)


def full_dim(pts):
    arr = np.array(pts, dtype=float)
    return np.linalg.matrix_rank(arr[1:] - arr[0]) == arr.shape[1]


@given(points2)
def test_hull2d_matches_qhull(pts):
    assume(full_dim(pts))
    P = geo.convex_hull(pts)
    ref = {tuple(pts[i]) for i in ConvexHull(np.array(pts, dtype=float)).vertices}
    assert set(P.vertices) == ref
    assert geo.volume(P) == Fraction(ConvexHull(np.array(pts, dtype=float)).volume).limit_denominator(2)


@given(points3)
def test_hull3d_matches_qhull(pts):
    assume(full_dim(pts))
    P = geo.convex_hull(pts)
    ch = ConvexHull(np.array(pts, dtype=float))
    assert set(P.vertices) == {tuple(pts[i]) for i in ch.vertices}
    assert abs(float(geo.volume(P)) - ch.volume) < 1e-9
    for p in pts:
        assert geo.contains_point(P, p)


@given(points2, points2)
def test_minkowski_properties(a, b):
    P, Q = geo.convex_hull(a), geo.convex_hull(b)
    S = geo.minkowski_sum(P, Q)
    assert S == geo.minkowski_sum(Q, P)
    for q in Q.vertices:
        assert geo.contains(S, geo.translate(P, q))
    assert geo.contains(S, geo.point_polytope(tuple(x + y for x, y in zip(P.vertices[0], Q.vertices[-1]))))


@given(points3, st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_translate_matches_rebuild(pts, v):
    P = geo.convex_hull(pts)
    T = geo.translate(P, v)
    R = geo.convex_hull([tuple(x + y for x, y in zip(p, v)) for p in pts])
    assert T == R and T.facets == R.facets and T.equations == R.equations


@pytest.mark.skipif(kernels._compiled is None, reason="compiled kernels not built")
@given(points3)
def test_backends_agree(pts):
    assume(full_dim(pts))
    try:
        kernels.use_backend("python")
        slow = geo.convex_hull(pts)
        kernels.use_backend("cython")
        fast = geo.convex_hull(pts)
    finally:
        kernels.use_backend("cython")
    assert slow == fast and slow.facets == fast.facets
    assert geo.edges(slow) == geo.edges(fast)
