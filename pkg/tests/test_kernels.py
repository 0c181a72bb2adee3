import os
import subprocess
import sys

import pytest

from mvpoly import _kernels_py, kernels


def test_pure_python_forced_by_environment():
    env = dict(os.environ, MVPOLY_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import mvpoly.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_reference_kernels():
    pts = [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2), (1, 0)]
    assert sorted(_kernels_py.hull2d(pts)) == [0, 1, 3, 4]
    assert _kernels_py.all_within([(0, 0), (1, 1)], [(1, 0)], [1])
    assert not _kernels_py.all_within([(2, 0)], [(1, 0)], [1])
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    tris = _kernels_py.hull3d(cube)
    assert len(tris) == 12


@pytest.mark.skipif(kernels._compiled is None, reason="compiled kernels not built")
def test_compiled_matches_reference():
    cube = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)] + [(1, 1, 1)]
    pts = [(0, 0), (3, 0), (1, 1), (3, 3), (0, 3)]
    try:
        kernels.use_backend("cython")
        fast3 = {frozenset(t) for t in kernels.hull3d(cube)}
        fast2 = list(kernels.hull2d(pts))
        fast_in = kernels.all_within(cube, [(1, 0, 0)], [1])
    finally:
        kernels.use_backend("cython")
    assert fast3 == {frozenset(t) for t in _kernels_py.hull3d(cube)}
    assert fast2 == _kernels_py.hull2d(pts)
    assert fast_in is False
