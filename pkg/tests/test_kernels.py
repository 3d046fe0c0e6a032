import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgering import kernels
from edgering._kernels_py import CombinationSearch as PySearch

try:
    from edgering._kernels import CombinationSearch as CySearch
except ImportError:  # pragma: no cover - extension not built
    CySearch = None

needs_ext = pytest.mark.skipif(CySearch is None, reason="compiled extension not built")

vec = st.lists(st.integers(-2, 2), min_size=4, max_size=4).map(tuple).filter(any)


def _check(vectors, target, z, cap):
    assert sum(z) <= cap and min(z) >= 0
    assert tuple(sum(c * v[i] for c, v in zip(z, vectors)) for i in range(len(target))) == tuple(target)


@needs_ext
@settings(max_examples=150)
@given(st.lists(vec, min_size=1, max_size=7, unique=True), st.lists(st.integers(-4, 4), min_size=4, max_size=4), st.integers(0, 6))
def test_backends_agree(vectors, target, cap):
    a = PySearch(vectors).search(target, cap)
    b = CySearch(vectors).search(target, cap)
    assert (a is None) == (b is None)
    for z in (a, b):
        if z is not None:
            _check(vectors, target, z, cap)


@needs_ext
def test_memo_reuse_between_caps():
    vectors = [(2, 0, 0), (1, 1, 0), (0, 1, 1), (0, 0, -2)]
    for cls in (PySearch, CySearch):
        s = cls(vectors)
        assert s.search((1, 0, -1), 10) is None
        # a failure at a small cap must not block a later, larger cap
        assert s.search((2, 0, -2), 1) is None
        z = s.search((2, 0, -2), 2)
        _check(vectors, (2, 0, -2), z, 2)
        assert s.search((1, 0, -1), 20) is None


@pytest.mark.parametrize("cls", [PySearch] + ([CySearch] if CySearch else []))
def test_rejects_bad_input(cls):
    with pytest.raises(ValueError):
        cls([(1, 0), (0, 0)])
    with pytest.raises(ValueError):
        cls([(1, 0), (1, 0, 0)])
    s = cls([(1, 1)])
    with pytest.raises(ValueError):
        s.search((1,), 3)
    with pytest.raises(ValueError):
        s.search((1, 1), -1)


@pytest.mark.parametrize("cls", [PySearch] + ([CySearch] if CySearch else []))
def test_deep_cap(cls):
    # long chains need depth well past the default recursion limit in Python
    s = cls([(1, 0), (0, 1)])
    z = s.search((700, 500), 1200)
    assert z == [700, 500]


def test_backend_switch():
    env = dict(os.environ, EDGERING_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import edgering.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("cython", "python")


def test_reload_is_harmless():
    importlib.reload(kernels)
    assert kernels.CombinationSearch is not None
