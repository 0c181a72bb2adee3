"""Backend selection for the exact geometry kernels.

The compiled module is used when it imports and the data are small
integers; otherwise the pure-Python reference kernels run.  Set
``MVPOLY_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

# |coordinate| bound under which every 3x3 orientation determinant fits in int64
SAFE_BOUND = 1 << 16

_compiled = None
if not os.environ.get("MVPOLY_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

if _compiled is not None:
    import numpy as np


def use_backend(name: str) -> None:
    """Switch between ``"cython"`` and ``"python"`` at runtime (benchmarks, tests)."""
    global BACKEND
    if name == "cython" and _compiled is None:
        raise RuntimeError("compiled kernels are not built")
    if name not in ("cython", "python"):
        raise ValueError(name)
    BACKEND = name


def _small_ints(rows) -> bool:
    for r in rows:
        for v in r:
            if type(v) is not int or not -SAFE_BOUND < v < SAFE_BOUND:
                return False
    return True


def all_within(points, normals, offsets) -> bool:
    if not normals:
        return True
    if (
        BACKEND == "cython"
        and len(points) * len(normals) > 8
        and _small_ints(points)
        and _small_ints(normals)
        and _small_ints([offsets])
    ):
        return _compiled.all_within(
            np.array(points, dtype=np.int64),
            np.array(normals, dtype=np.int64),
            np.array(offsets, dtype=np.int64),
        )
    return _kernels_py.all_within(points, normals, offsets)


def hull2d(points):
    if BACKEND == "cython" and len(points) > 8 and _small_ints(points):
        return _compiled.hull2d(np.array(points, dtype=np.int64))
    return _kernels_py.hull2d(points)


def hull3d(points):
    if BACKEND == "cython" and _small_ints(points):
        return _compiled.hull3d(np.array(points, dtype=np.int64))
    return _kernels_py.hull3d(points)
