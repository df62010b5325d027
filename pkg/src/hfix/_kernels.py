"""Hot numeric kernels: Horner evaluation, Aberth-Ehrlich sweeps, contour sums.

Each kernel exists twice: a loop form compiled with numba ``@njit`` and a
vectorised pure-numpy form. The numba path is used when numba imports and
the environment variable ``HFIX_DISABLE_NUMBA`` is unset (or ``0``). Both
paths implement the same Jacobi-style iteration, so they agree to rounding.

All coefficient arrays are complex128 in ascending-power order.
"""

import os

import numpy as np

EPS = np.finfo(np.float64).eps
TWO_PI = 2.0 * np.pi

_disabled = os.environ.get("HFIX_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("numba disabled via HFIX_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None


# ---------------------------------------------------------------------------
# loop forms (numba-compilable)

def _polyval_loop(coeffs, zs):
    n = coeffs.shape[0]
    out = np.empty(zs.shape[0], dtype=np.complex128)
    for j in range(zs.shape[0]):
        z = zs[j]
        acc = 0j
        for k in range(n - 1, -1, -1):
            acc = acc * z + coeffs[k]
        out[j] = acc
    return out


def _aberth_loop(coeffs, z, tol, maxiter):
    n = z.shape[0]
    deg = coeffs.shape[0] - 1
    absc = np.abs(coeffs)
    active = np.ones(n, dtype=np.bool_)
    corr = np.zeros(n, dtype=np.complex128)
    for it in range(1, maxiter + 1):
        for i in range(n):
            corr[i] = 0j
            if not active[i]:
                continue
            zi = z[i]
            az = abs(zi)
            p = coeffs[deg]
            dp = 0j
            bound = absc[deg]
            for k in range(deg - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + coeffs[k]
                bound = bound * az + absc[k]
            # residual already at the rounding floor of the evaluation
            if abs(p) <= 4.0 * EPS * bound:
                active[i] = False
                continue
            if dp == 0j:
                corr[i] = 1e-3 * (1.0 + az)
                continue
            ratio = p / dp
            s = 0j
            for j in range(n):
                if j != i:
                    diff = zi - z[j]
                    if diff != 0j:
                        s += 1.0 / diff
            denom = 1.0 - ratio * s
            if denom == 0j:
                corr[i] = ratio
            else:
                corr[i] = ratio / denom
        remaining = 0
        for i in range(n):
            if not active[i]:
                continue
            z[i] = z[i] - corr[i]
            if abs(corr[i]) <= tol * (1.0 + abs(z[i])):
                active[i] = False
            else:
                remaining += 1
        if remaining == 0:
            return z, it, True
    return z, maxiter, False


def _contour_loop(num, den, center, radius, n):
    acc = 0j
    min_den = np.inf
    min_f = np.inf
    nn = num.shape[0]
    nd = den.shape[0]
    for k in range(n):
        e = np.exp(1j * (TWO_PI * k / n))
        zk = center + radius * e
        pn = 0j
        for m in range(nn - 1, -1, -1):
            pn = pn * zk + num[m]
        pd = 0j
        for m in range(nd - 1, -1, -1):
            pd = pd * zk + den[m]
        f = zk * pd - pn
        ad = abs(pd)
        af = abs(f)
        if ad < min_den:
            min_den = ad
        if af < min_f:
            min_f = af
        if af > 0.0:
            acc += radius * e * pd / f
    return acc / n, min_den, min_f


# ---------------------------------------------------------------------------
# vectorised numpy forms

def _horner_np(coeffs, zs):
    acc = np.zeros(zs.shape, dtype=np.complex128)
    for c in coeffs[::-1]:
        acc = acc * zs + c
    return acc


def _polyval_np(coeffs, zs):
    return _horner_np(coeffs, np.asarray(zs, dtype=np.complex128))


def _aberth_np(coeffs, z, tol, maxiter):
    n = z.shape[0]
    deg = coeffs.shape[0] - 1
    absc = np.abs(coeffs)
    active = np.ones(n, dtype=bool)
    for it in range(1, maxiter + 1):
        idx = np.flatnonzero(active)
        zi = z[idx]
        p = np.full(zi.shape, coeffs[deg], dtype=np.complex128)
        dp = np.zeros(zi.shape, dtype=np.complex128)
        bound = np.full(zi.shape, absc[deg])
        az = np.abs(zi)
        for k in range(deg - 1, -1, -1):
            dp = dp * zi + p
            p = p * zi + coeffs[k]
            bound = bound * az + absc[k]

        floor = np.abs(p) <= 4.0 * EPS * bound
        corr = np.zeros(zi.shape, dtype=np.complex128)
        diff = zi[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = np.inf
        diff[diff == 0] = np.inf
        s = (1.0 / diff).sum(axis=1)
        flat = dp == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(flat, 0j, p / np.where(flat, 1.0, dp))
            denom = 1.0 - ratio * s
            corr = np.where(denom == 0, ratio, ratio / np.where(denom == 0, 1.0, denom))
        corr = np.where(flat, 1e-3 * (1.0 + az), corr)
        corr[floor] = 0j

        active[idx[floor]] = False
        moving = idx[~floor]
        z[moving] = z[moving] - corr[~floor]
        done = np.abs(corr[~floor]) <= tol * (1.0 + np.abs(z[moving]))
        active[moving[done]] = False
        if not active.any():
            return z, it, True
    return z, maxiter, False


def _contour_np(num, den, center, radius, n):
    e = np.exp(1j * (TWO_PI * np.arange(n) / n))
    zk = center + radius * e
    pn = _horner_np(num, zk)
    pd = _horner_np(den, zk)
    f = zk * pd - pn
    af = np.abs(f)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(af > 0, radius * e * pd / np.where(af > 0, f, 1.0), 0j)
    return terms.sum() / n, float(np.abs(pd).min()), float(af.min())


NUMPY_KERNELS = {
    "polyval": _polyval_np,
    "aberth": _aberth_np,
    "contour": _contour_np,
}

if njit is not None:
    NUMBA_KERNELS = {
        "polyval": njit(cache=True, error_model="numpy")(_polyval_loop),
        "aberth": njit(cache=True, error_model="numpy")(_aberth_loop),
        "contour": njit(cache=True, error_model="numpy")(_contour_loop),
    }
    BACKEND = "numba"
    _active = NUMBA_KERNELS
else:
    NUMBA_KERNELS = None
    BACKEND = "numpy"
    _active = NUMPY_KERNELS


def polyval(coeffs, zs):
    """Evaluate the polynomial with ascending ``coeffs`` at every point of ``zs``."""
    zs = np.ascontiguousarray(zs, dtype=np.complex128)
    return _active["polyval"](np.ascontiguousarray(coeffs, dtype=np.complex128), zs)


def aberth(coeffs, z0, tol, maxiter):
    """Run Aberth-Ehrlich sweeps from the starting points ``z0``.

    Returns ``(roots, sweeps, converged)``. ``z0`` is copied, never mutated.
    """
    z = np.array(z0, dtype=np.complex128)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
    z, sweeps, ok = _active["aberth"](coeffs, z, float(tol), int(maxiter))
    return z, int(sweeps), bool(ok)


def contour(num, den, center, radius, n):
    """Trapezoidal mean of ``dz / (z - num/den)`` over ``n`` points of a circle.

    Returns ``(value, min |den|, min |z*den - num|)`` over the samples; the
    value already carries the ``1/(2*pi*i)`` normalisation.
    """
    num = np.ascontiguousarray(num, dtype=np.complex128)
    den = np.ascontiguousarray(den, dtype=np.complex128)
    val, mden, mf = _active["contour"](num, den, complex(center), float(radius), int(n))
    return complex(val), float(mden), float(mf)
