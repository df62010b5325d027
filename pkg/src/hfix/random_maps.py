"""Seeded generators of random maps for corpora and batch runs."""

import numpy as np

from .poly import MobiusMap, Polynomial, RationalMap
from .errors import DegenerateMobiusError


def disk(rng, n):
    """``n`` points uniform in the closed unit disk."""
    r = np.sqrt(rng.random(n))
    t = 2.0 * np.pi * rng.random(n)
    return r * np.exp(1j * t)


def _nearly_identity(rmap, tol=1e-6):
    F = rmap.fixed_point_polynomial()
    scale = max(np.abs(rmap.num.coeffs).max(initial=0.0), np.abs(rmap.den.coeffs).max())
    return F.is_zero() or np.abs(F.coeffs).max() <= tol * scale


def random_polynomial(rng, degree):
    c = disk(rng, degree + 1)
    while abs(c[-1]) < 1e-3:
        c[-1] = disk(rng, 1)[0]
    return Polynomial(c)


def random_rational_map(rng, degree):
    """Random map of the given degree; numerator or denominator (or both)
    attains it, so infinity is fixed in roughly a third of the draws."""
    while True:
        shape = rng.integers(3)
        dn = degree if shape != 2 else int(rng.integers(0, degree))
        dd = degree if shape != 1 else int(rng.integers(0, degree))
        m = RationalMap(random_polynomial(rng, dn), random_polynomial(rng, dd))
        if m.degree == degree and not _nearly_identity(m):
            return m


def random_multiple_map(rng, degree):
    """Random map with a double fixed point at a random point of the disk.

    ``num = z*den + (z - a)^2 * s`` with ``deg den = degree - 1`` and
    ``deg s = degree - 2``.
    """
    if degree < 2:
        raise ValueError("need degree >= 2")
    while True:
        a = disk(rng, 1)[0]
        den = random_polynomial(rng, degree - 1)
        s = random_polynomial(rng, degree - 2)
        z = Polynomial([0.0, 1.0])
        num = z * den + Polynomial([-a, 1.0]) ** 2 * s
        m = RationalMap(num, den)
        if m.degree == degree and not _nearly_identity(m):
            return m, complex(a)


def random_mobius(rng, min_det=0.1):
    while True:
        a, b, c, d = disk(rng, 4)
        try:
            g = MobiusMap(a, b, c, d)
        except DegenerateMobiusError:
            continue
        if abs(g.det) >= min_det:
            return g
