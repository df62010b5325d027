"""Induced h-fixed points of harmonic maps ``f = h + conj(g)``.

A pair ``(mu, omega)`` with ``h(mu) = mu`` and ``g(omega) = omega`` gives the
h-fixed point ``zeta = mu + conj(omega)`` with multipliers
``lambda = h'(mu)`` and ``theta = g'(omega)``. Pairs where either component
is infinity are reported by kind only; ``zeta`` is then None.

Only induced points are enumerated: the general solution set of
``mu + conj(omega) = h(mu) + conj(g(omega))`` is a continuum.
"""

import cmath
from dataclasses import dataclass

from .config import DEFAULT
from .errors import DegreeError
from .fixpoint import SUPER_ATTRACTING, fixed_points
from .poly import INF, as_map, evaluate, is_inf

POLYNOMIAL_HARMONIC = "polynomial_harmonic"
RATIONAL_HARMONIC = "rational_harmonic"

FINITE = "finite"
INFINITE_MU_FIXED = "infinite_mu_fixed"        # mu + conj(inf): h(mu) = mu, g fixes inf
INFINITE_OMEGA_FIXED = "infinite_omega_fixed"  # inf + conj(omega): h fixes inf, g(omega) = omega
INFINITE_BOTH = "infinite_both"
KIND_ORDER = (FINITE, INFINITE_MU_FIXED, INFINITE_OMEGA_FIXED, INFINITE_BOTH)


@dataclass(frozen=True)
class HarmonicMap:
    h: object
    g: object

    def __post_init__(self):
        object.__setattr__(self, "h", as_map(self.h))
        object.__setattr__(self, "g", as_map(self.g))

    @property
    def kind(self):
        """``polynomial_harmonic``, ``rational_harmonic`` or None (a component of degree < 2)."""
        if self.h.degree < 2 or self.g.degree < 2:
            return None
        if self.h.is_polynomial() and self.g.is_polynomial():
            return POLYNOMIAL_HARMONIC
        return RATIONAL_HARMONIC

    def __call__(self, z):
        a, b = evaluate(self.h, z), evaluate(self.g, z)
        if is_inf(a) or is_inf(b):
            return INF
        return a + b.conjugate()


@dataclass(frozen=True)
class HFixedPoint:
    mu: object
    omega: object
    zeta: object  # complex, or None for the infinite kinds
    lam: complex
    theta: complex
    kind: str
    multiplicity: tuple = (1, 1)  # (m_h, m_g)

    @property
    def is_finite(self):
        return self.kind == FINITE

    def residual(self, f):
        """``|mu + conj(omega) - h(mu) - conj(g(omega))|`` for a finite point."""
        hm, gw = evaluate(f.h, self.mu), evaluate(f.g, self.omega)
        return abs(self.mu + self.omega.conjugate() - hm - gw.conjugate())

    def sort_key(self):
        mu = (0.0, 0.0) if is_inf(self.mu) else (self.mu.real, self.mu.imag)
        om = (0.0, 0.0) if is_inf(self.omega) else (self.omega.real, self.omega.imag)
        return (KIND_ORDER.index(self.kind),) + mu + om


@dataclass(frozen=True)
class HarmonicAnalysis:
    map: HarmonicMap
    h_report: object
    g_report: object
    points: tuple

    @property
    def finite(self):
        return [p for p in self.points if p.is_finite]


@dataclass(frozen=True)
class ConjectureReport:
    theorem_applies: bool
    witnesses_ge1: tuple
    witnesses_le1: tuple
    passed: bool
    reason: str


@dataclass(frozen=True)
class RemarkReport:
    le1: tuple
    im_nonneg_h: tuple  # None when some fixed point of h is multiple
    im_nonneg_g: tuple


@dataclass(frozen=True)
class QuadraticReport:
    c: complex
    fixed_points: tuple
    multipliers: tuple
    multiplicities: tuple
    h_fixed_points: tuple  # diagonal points mu + conj(mu)
    single_point: bool
    re_exactly_one: bool
    c_is_real: bool
    c_at_least_quarter: bool  # None when c is not real
    consistent: bool          # None when c is not real


def analyze_harmonic(f, tol=DEFAULT):
    if not isinstance(f, HarmonicMap):
        f = HarmonicMap(*f)
    if f.h.degree < 1 or f.g.degree < 1:
        raise DegreeError("both components need degree >= 1")
    hr = fixed_points(f.h, tol)
    gr = fixed_points(f.g, tol)
    pts = []
    for p in hr.points:
        for q in gr.points:
            if not p.is_infinite and not q.is_infinite:
                kind = FINITE
                zeta = p.location + q.location.conjugate()
            elif not p.is_infinite:
                kind, zeta = INFINITE_MU_FIXED, None
            elif not q.is_infinite:
                kind, zeta = INFINITE_OMEGA_FIXED, None
            else:
                kind, zeta = INFINITE_BOTH, None
            pts.append(HFixedPoint(p.location, q.location, zeta, p.multiplier, q.multiplier,
                                   kind, (p.multiplicity, q.multiplicity)))
    pts.sort(key=HFixedPoint.sort_key)
    return HarmonicAnalysis(f, hr, gr, tuple(pts))


def induced_h_fixed_points(f, tol=DEFAULT):
    """All induced h-fixed points, finite ones first in (mu, omega) order."""
    return analyze_harmonic(f, tol).points


def _has_super_attracting(report):
    return any(p.classification == SUPER_ATTRACTING for p in report.points)


def _ge1(points, w):
    return tuple(p for p in points if p.lam.real >= 1 - w and p.theta.real >= 1 - w)


def _le1(points, w):
    return tuple(p for p in points if p.lam.real <= 1 + w and p.theta.real <= 1 + w)


def conjecture_witness(f, tol=DEFAULT, analysis=None):
    """Look for an h-fixed point whose two multipliers both have real part >= 1.

    The existence theorem applies to polynomial harmonic maps, and to rational
    ones whose components each have a super-attracting fixed point. When the
    hypotheses fail the witnesses found are still reported and ``passed``
    stays True: nothing is claimed in that case.
    """
    a = analysis or analyze_harmonic(f, tol)
    kind = a.map.kind
    if kind is None:
        raise DegreeError("both components need degree >= 2")
    if kind == POLYNOMIAL_HARMONIC:
        applies, reason = True, "polynomial harmonic map"
    else:
        sh, sg = _has_super_attracting(a.h_report), _has_super_attracting(a.g_report)
        applies = sh and sg
        if applies:
            reason = "rational harmonic map; h and g each have a super-attracting fixed point"
        else:
            missing = [n for n, ok in (("h", sh), ("g", sg)) if not ok]
            reason = f"hypothesis not met: no super-attracting fixed point of {' and '.join(missing)}"
    w = tol.witness_tol
    ge1 = _ge1(a.points, w)
    le1 = _le1(a.points, w)
    return ConjectureReport(applies, ge1, le1, (not applies) or bool(ge1), reason)


def _im_nonneg(report, w):
    if any(not p.simple for p in report.points):
        return None
    return tuple(p for p in report.points
                 if p.classification != SUPER_ATTRACTING and p.multiplier.imag >= -w)


def remark_witnesses(f, tol=DEFAULT, analysis=None):
    """Points with both multipliers' real parts <= 1, and, per component,
    the non-super-attracting fixed points with ``Im(multiplier) >= 0``."""
    a = analysis or analyze_harmonic(f, tol)
    w = tol.witness_tol
    return RemarkReport(_le1(a.points, w), _im_nonneg(a.h_report, w), _im_nonneg(a.g_report, w))


def quadratic_family_analyze(c, tol=DEFAULT):
    """Closed-form fixed points of ``z^2 + c`` and the h-fixed points of
    ``z^2 + c + conj(z^2 + c)`` on the diagonal ``mu = omega``."""
    c = complex(c)
    if abs(c - 0.25) <= 1e-12:
        fps, lams, mults = (0.5 + 0j,), (1 + 0j,), (2,)
    else:
        s = cmath.sqrt(1 - 4 * c)
        fps = ((1 + s) / 2, (1 - s) / 2)
        lams = (1 + s, 1 - s)
        mults = (1, 1)
    zetas = tuple(z + z.conjugate() for z in fps)
    re_one = all(abs(l.real - 1) <= tol.witness_tol for l in lams)
    real = abs(c.imag) <= 1e-12
    at_least = (c.real >= 0.25 - 1e-12) if real else None
    return QuadraticReport(
        c=c,
        fixed_points=fps,
        multipliers=lams,
        multiplicities=mults,
        h_fixed_points=zetas,
        single_point=len(fps) == 1,
        re_exactly_one=re_one,
        c_is_real=real,
        c_at_least_quarter=at_least,
        consistent=(re_one == at_least) if real else None,
    )
