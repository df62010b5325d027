"""Simultaneous root finding (Aberth-Ehrlich) and root clustering."""

import logging
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DegreeError
from .poly import Polynomial

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_CLUSTER = 1e-6
MAX_SWEEPS = 1000
# irrational rotation of the starting circle; breaks symmetric configurations
START_PHASE = np.sqrt(2.0) - 1.0


@dataclass(frozen=True)
class Root:
    location: complex
    multiplicity: int


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residual: float = float("nan")
    sweeps: int = 0
    converged: bool = True
    raw: np.ndarray = field(default=None, repr=False, compare=False)

    def locations(self):
        return [r.location for r in self.roots]

    def multiplicities(self):
        return [r.multiplicity for r in self.roots]

    @property
    def degree(self):
        return sum(r.multiplicity for r in self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def root_bound(coeffs):
    """Fujiwara's bound on the moduli of the roots of a polynomial."""
    c = np.asarray(coeffs, dtype=np.complex128)
    n = len(c) - 1
    a = np.abs(c / c[-1])
    terms = [a[n - k] ** (1.0 / k) for k in range(1, n)]
    terms.append((a[0] / 2.0) ** (1.0 / n))
    return 2.0 * max(terms)


def initial_guesses(coeffs):
    n = len(coeffs) - 1
    r = root_bound(coeffs)
    angles = 2.0 * np.pi * np.arange(n) / n + START_PHASE
    return r * np.exp(1j * angles)


def default_eps(raw, scale=DEFAULT_CLUSTER):
    raw = np.asarray(raw)
    m = float(np.abs(raw).max()) if raw.size else 0.0
    return scale * (1.0 + m)


def inclusion_radii(coeffs, z):
    """Radii ``n*(|p(z)| + floor)/|p'(z)|`` of disks that each hold a root.

    ``floor`` is the rounding-error bound of Horner evaluation, so roots
    of a numerically multiple factor get overlapping disks.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    n = len(c) - 1
    z = np.asarray(z, dtype=np.complex128)
    p = _kernels.polyval(c, z)
    dp = _kernels.polyval(c[1:] * np.arange(1, n + 1), z)
    floor = 4.0 * _kernels.EPS * _kernels.polyval(np.abs(c).astype(np.complex128), np.abs(z)).real
    with np.errstate(divide="ignore"):
        return np.where(dp == 0, np.inf, n * (np.abs(p) + floor) / np.abs(dp))


def cluster_roots(raw, eps=None, radii=None):
    """Merge roots lying within ``eps`` of each other (single linkage).

    Each cluster is reported at its centroid with multiplicity equal to its
    size. ``eps`` defaults to ``1e-6 * (1 + max|root|)``. When ``radii`` is
    given, roots whose inclusion disks overlap are merged as well.
    """
    raw = np.asarray(raw, dtype=np.complex128).ravel()
    if eps is None:
        eps = default_eps(raw)
    n = raw.size
    if radii is None:
        radii = np.zeros(n)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            d = abs(raw[i] - raw[j])
            if d <= eps or d <= radii[i] + radii[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    roots = [Root(complex(raw[idx].mean()), len(idx)) for idx in groups.values()]
    roots.sort(key=lambda r: (r.location.real, r.location.imag))
    return RootSet(tuple(roots), raw=raw)


def _polish(p, z0, m, eps):
    # Newton on the (m-1)-th derivative, which has a simple root at an m-fold root of p
    dm = p
    for _ in range(m - 1):
        dm = dm.derivative()
    ddm = dm.derivative()
    z = z0
    for _ in range(20):
        d = ddm(z)
        if d == 0:
            return z0
        step = dm(z) / d
        z = z - step
        if abs(step) <= 1e-14 * (1.0 + abs(z)):
            return z if abs(z - z0) <= eps else z0
    return z0


def find_roots(p, tol=DEFAULT_TOL, eps=None, maxiter=MAX_SWEEPS, eps_scale=DEFAULT_CLUSTER):
    """All roots of ``p`` with multiplicities.

    Exact zero roots (vanishing low-order coefficients) are split off first;
    the rest are refined together by Aberth-Ehrlich sweeps until every
    correction satisfies ``|dz| <= tol * (1 + |z|)`` or its residual reaches
    the rounding floor. Non-convergence is reported through
    ``RootSet.converged`` rather than raised.
    """
    p = Polynomial(p)
    if p.is_zero() or p.degree < 1:
        raise DegreeError(f"find_roots needs degree >= 1, got {p.degree}")
    c = p.coeffs
    nz = int(np.flatnonzero(c)[0])
    q = c[nz:]
    sweeps, ok = 0, True
    found = np.zeros(0, dtype=np.complex128)
    if len(q) > 1:
        found, sweeps, ok = _kernels.aberth(q, initial_guesses(q), tol, maxiter)
        if not ok:
            log.warning("aberth: no convergence after %d sweeps (degree %d)", sweeps, len(q) - 1)
    raw = np.concatenate([np.zeros(nz, dtype=np.complex128), found])

    if eps is None:
        eps = default_eps(raw, eps_scale)
    radii = np.concatenate([np.zeros(nz), inclusion_radii(c, found)]) if found.size else None
    clustered = cluster_roots(raw, eps, radii)
    roots = []
    for r in clustered.roots:
        loc = r.location
        if r.multiplicity > 1:
            loc = _polish(p, loc, r.multiplicity, eps)
        roots.append(Root(complex(loc), r.multiplicity))
    residual = max(abs(p(r.location)) for r in roots)
    return RootSet(tuple(roots), residual=float(residual), sweeps=sweeps, converged=ok, raw=raw)
