# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled int64 versions of the exact kernels in ``_kernels_py``.

Callers guarantee coordinates are small enough that every intermediate
product fits in 64 bits (see ``mvpoly.kernels.SAFE_BOUND``).
"""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def all_within(i64[:, :] points, i64[:, :] normals, i64[:] offsets):
    cdef Py_ssize_t f, k, j
    cdef Py_ssize_t nf = normals.shape[0], npt = points.shape[0], d = points.shape[1]
    cdef i64 s
    for f in range(nf):
        for k in range(npt):
            s = 0
            for j in range(d):
                s += normals[f, j] * points[k, j]
            if s > offsets[f]:
                return False
    return True


cdef inline i64 _cross2(i64[:, :] p, Py_ssize_t o, Py_ssize_t a, Py_ssize_t b):
    return (p[a, 0] - p[o, 0]) * (p[b, 1] - p[o, 1]) - (p[a, 1] - p[o, 1]) * (p[b, 0] - p[o, 0])


def hull2d(i64[:, :] points):
    cdef Py_ssize_t n = points.shape[0]
    order = np.lexsort((np.asarray(points[:, 1]), np.asarray(points[:, 0]))).astype(np.int64)
    cdef cnp.int64_t[:] od = order
    cdef cnp.int64_t[:] lower = np.empty(n + 1, dtype=np.int64)
    cdef cnp.int64_t[:] upper = np.empty(n + 1, dtype=np.int64)
    cdef Py_ssize_t nl = 0, nu = 0, t
    cdef Py_ssize_t i
    for t in range(n):
        i = od[t]
        while nl >= 2 and _cross2(points, lower[nl - 2], lower[nl - 1], i) <= 0:
            nl -= 1
        lower[nl] = i
        nl += 1
    for t in range(n - 1, -1, -1):
        i = od[t]
        while nu >= 2 and _cross2(points, upper[nu - 2], upper[nu - 1], i) <= 0:
            nu -= 1
        upper[nu] = i
        nu += 1
    return [int(lower[t]) for t in range(nl - 1)] + [int(upper[t]) for t in range(nu - 1)]


cdef class _FaceStore:
    cdef public object arr
    cdef Py_ssize_t size

    def __init__(self, Py_ssize_t cap):
        # columns: a, b, c, nx, ny, nz, off, alive
        self.arr = np.zeros((cap, 8), dtype=np.int64)
        self.size = 0

    cdef Py_ssize_t add(self, i64[:, :] p, Py_ssize_t a, Py_ssize_t b, Py_ssize_t c):
        if self.size == self.arr.shape[0]:
            self.arr = np.concatenate([self.arr, np.zeros_like(self.arr)])
        cdef i64[:, :] f = self.arr
        cdef i64 ux = p[b, 0] - p[a, 0], uy = p[b, 1] - p[a, 1], uz = p[b, 2] - p[a, 2]
        cdef i64 vx = p[c, 0] - p[a, 0], vy = p[c, 1] - p[a, 1], vz = p[c, 2] - p[a, 2]
        cdef Py_ssize_t s = self.size
        f[s, 0] = a
        f[s, 1] = b
        f[s, 2] = c
        f[s, 3] = uy * vz - uz * vy
        f[s, 4] = uz * vx - ux * vz
        f[s, 5] = ux * vy - uy * vx
        f[s, 6] = f[s, 3] * p[a, 0] + f[s, 4] * p[a, 1] + f[s, 5] * p[a, 2]
        f[s, 7] = 1
        self.size += 1
        return s


def hull3d(i64[:, :] p):
    cdef Py_ssize_t n = p.shape[0], i, j, i1 = -1, i2 = -1, i3 = -1, s
    cdef i64 dx, dy, dz, cx, cy, cz, nx = 0, ny = 0, nz = 0, c4x, c4y, c4z
    for i in range(1, n):
        if p[i, 0] != p[0, 0] or p[i, 1] != p[0, 1] or p[i, 2] != p[0, 2]:
            i1 = i
            break
    dx = p[i1, 0] - p[0, 0]; dy = p[i1, 1] - p[0, 1]; dz = p[i1, 2] - p[0, 2]
    for i in range(n):
        cx = dy * (p[i, 2] - p[0, 2]) - dz * (p[i, 1] - p[0, 1])
        cy = dz * (p[i, 0] - p[0, 0]) - dx * (p[i, 2] - p[0, 2])
        cz = dx * (p[i, 1] - p[0, 1]) - dy * (p[i, 0] - p[0, 0])
        if cx != 0 or cy != 0 or cz != 0:
            i2 = i
            nx, ny, nz = cx, cy, cz
            break
    for i in range(n):
        if nx * (p[i, 0] - p[0, 0]) + ny * (p[i, 1] - p[0, 1]) + nz * (p[i, 2] - p[0, 2]) != 0:
            i3 = i
            break
    c4x = p[0, 0] + p[i1, 0] + p[i2, 0] + p[i3, 0]
    c4y = p[0, 1] + p[i1, 1] + p[i2, 1] + p[i3, 1]
    c4z = p[0, 2] + p[i1, 2] + p[i2, 2] + p[i3, 2]

    store = _FaceStore(max(16, 8 * n))
    cdef _FaceStore st = store
    cdef i64[:, :] f
    for a, b, c in ((0, i1, i2), (0, i1, i3), (0, i2, i3), (i1, i2, i3)):
        s = st.add(p, a, b, c)
        f = st.arr
        if f[s, 3] * c4x + f[s, 4] * c4y + f[s, 5] * c4z - 4 * f[s, 6] > 0:
            st.size -= 1
            st.add(p, b, a, c)

    cdef unsigned char[:] used = np.zeros(n, dtype=np.uint8)
    used[0] = 1; used[i1] = 1; used[i2] = 1; used[i3] = 1
    cdef list vis
    cdef set edges
    for i in range(n):
        if used[i]:
            continue
        f = st.arr
        vis = []
        for j in range(st.size):
            if f[j, 7] and f[j, 3] * p[i, 0] + f[j, 4] * p[i, 1] + f[j, 5] * p[i, 2] > f[j, 6]:
                vis.append(j)
        if not vis:
            continue
        edges = set()
        for j in vis:
            edges.add((f[j, 0], f[j, 1]))
            edges.add((f[j, 1], f[j, 2]))
            edges.add((f[j, 2], f[j, 0]))
            f[j, 7] = 0
        for e in edges:
            if (e[1], e[0]) not in edges:
                st.add(p, e[0], e[1], i)
        used[i] = 1
    f = st.arr
    return [(int(f[j, 0]), int(f[j, 1]), int(f[j, 2])) for j in range(st.size) if f[j, 7]]
