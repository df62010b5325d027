import os
import subprocess
import sys

import numpy as np
import pytest

from hfix import _kernels as K
from hfix.roots import initial_guesses

needs_numba = pytest.mark.skipif(K.NUMBA_KERNELS is None, reason="numba backend disabled")


def _cases():
    rng = np.random.default_rng(2)
    for deg in (1, 3, 8, 20):
        yield rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1), rng


def test_numpy_polyval_matches_polyval():
    for c, rng in _cases():
        zs = rng.normal(size=50) + 1j * rng.normal(size=50)
        ref = np.polyval(c[::-1], zs)
        assert np.allclose(K.NUMPY_KERNELS["polyval"](c, zs), ref, rtol=1e-12, atol=1e-12)


@needs_numba
def test_backends_agree_polyval():
    for c, rng in _cases():
        zs = rng.normal(size=50) + 1j * rng.normal(size=50)
        a = K.NUMBA_KERNELS["polyval"](c, zs)
        b = K.NUMPY_KERNELS["polyval"](c, zs)
        assert np.allclose(a, b, rtol=1e-13, atol=1e-13)


@needs_numba
def test_backends_agree_aberth():
    for c, _ in _cases():
        z0 = initial_guesses(c)
        za, sa, oka = K.NUMBA_KERNELS["aberth"](c, z0.copy(), 1e-12, 1000)
        zb, sb, okb = K.NUMPY_KERNELS["aberth"](c, z0.copy(), 1e-12, 1000)
        assert oka and okb
        assert np.allclose(np.sort_complex(za), np.sort_complex(zb), atol=1e-10)


@needs_numba
def test_backends_agree_contour():
    num = np.array([0.25, 0, 1], dtype=complex)
    den = np.array([1], dtype=complex)
    for n in (64, 256, 1024):
        a = K.NUMBA_KERNELS["contour"](num, den, 0.5 + 0j, 0.25, n)
        b = K.NUMPY_KERNELS["contour"](num, den, 0.5 + 0j, 0.25, n)
        assert abs(a[0] - b[0]) <= 1e-14
        assert abs(a[1] - b[1]) <= 1e-14 and abs(a[2] - b[2]) <= 1e-14


def test_contour_simple_fixed_point():
    # z^2 at 0: index 1
    val, _, _ = K.contour(np.array([0, 0, 1.0]), np.array([1.0]), 0j, 0.5, 64)
    assert abs(val - 1) <= 1e-12


def test_aberth_does_not_mutate_start():
    c = np.array([1, 0, 1], dtype=complex)
    z0 = initial_guesses(c)
    keep = z0.copy()
    K.aberth(c, z0, 1e-12, 100)
    assert np.array_equal(z0, keep)


def test_env_flag_selects_numpy():
    env = dict(os.environ, HFIX_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from hfix import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
