"""Fixed points of rational maps on the Riemann sphere.

For every fixed point we report the multiplier, the multiplicity (order of
the root of ``R(z) - z``), the residue fixed-point index and a classification.
The point at infinity is always handled through the chart ``w -> 1/R(1/w)``.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .config import DEFAULT
from .errors import ContourError, DegreeError, IdentityMapError, NotAFixedPointError
from .poly import INF, Polynomial, RationalMap, as_map, evaluate, inversion_chart, is_inf
from .roots import find_roots

SUPER_ATTRACTING = "super-attracting"
ATTRACTING = "attracting"
REPELLING = "repelling"
INDIFFERENT = "indifferent"


@dataclass(frozen=True)
class MultiplierClass:
    kind: str
    weakly_repelling: bool
    multiplier_one: bool
    rational_order: int = None  # smallest k <= 64 with lambda**k ~ 1, indifferent case only

    @property
    def rationally_indifferent(self):
        return self.rational_order is not None


@dataclass(frozen=True)
class FixedPoint:
    location: object  # complex or INF
    multiplier: complex
    multiplicity: int
    index: complex
    classification: str
    weakly_repelling: bool
    simple: bool
    multiplier_one: bool
    rational_order: int = None
    index_method: str = "closed-form"

    @property
    def is_infinite(self):
        return is_inf(self.location)


@dataclass(frozen=True)
class FixedPointReport:
    map: RationalMap
    points: tuple
    index_sum: complex
    index_sum_deviation: float
    sweeps: int = 0
    converged: bool = True
    warnings: tuple = ()

    @property
    def finite(self):
        return [p for p in self.points if not p.is_infinite]

    @property
    def infinite(self):
        for p in self.points:
            if p.is_infinite:
                return p
        return None

    def total_multiplicity(self):
        return sum(p.multiplicity for p in self.points)


@dataclass(frozen=True)
class IndexSumCheck:
    sum: complex
    deviation: float
    passed: bool


@dataclass(frozen=True)
class PolynomialSums:
    multipliers: tuple
    e3_sum: complex = None
    e4_sum: float = None
    im_sum: float = None
    re_ge1: tuple = ()
    re_le1: tuple = ()
    im_nonneg: tuple = ()
    multiple_witness: object = None  # a FixedPoint with multiplier 1, when present
    warnings: tuple = field(default=())

    @property
    def skipped(self):
        return self.e3_sum is None


def classify_multiplier(lam, tol=DEFAULT):
    lam = complex(lam)
    r = abs(lam)
    one = abs(lam - 1) <= tol.one_band
    if r <= tol.super_attracting:
        kind = SUPER_ATTRACTING
    elif r < 1 - tol.circle_band:
        kind = ATTRACTING
    elif r > 1 + tol.circle_band:
        kind = REPELLING
    else:
        kind = INDIFFERENT
    order = None
    if kind == INDIFFERENT:
        power = 1 + 0j
        for k in range(1, tol.rational_max_order + 1):
            power *= lam
            if abs(power - 1) <= tol.rational_tol:
                order = k
                break
    return MultiplierClass(kind, kind == REPELLING or one, one, order)


def _derivative_at(rmap, z):
    num, den = rmap.num, rmap.den
    n, d = num(z), den(z)
    dn, dd = num.derivative()(z), den.derivative()(z)
    return (dn * d - n * dd) / (d * d)


def _infinity_multiplier(rmap):
    dn, dd = rmap.num.degree, rmap.den.degree
    if dn >= dd + 2:
        return 0j
    return rmap.den.lead / rmap.num.lead


def _check_fixed(rmap, z, tol):
    if is_inf(z):
        if not rmap.fixes_infinity():
            raise NotAFixedPointError("infinity is not fixed (deg num <= deg den)")
        return
    w = evaluate(rmap, complex(z))
    if is_inf(w) or abs(w - z) > tol.fixed_residual * (1 + abs(z)):
        raise NotAFixedPointError(f"{z!r} is not a fixed point (R(z) = {w!r})")


def multiplier_at(rmap, location, tol=DEFAULT):
    """Multiplier ``R'(z0)``; at infinity, the derivative of the chart at 0."""
    rmap = as_map(rmap)
    _check_fixed(rmap, location, tol)
    if is_inf(location):
        return _infinity_multiplier(rmap)
    return complex(_derivative_at(rmap, complex(location)))


def multiplicity_at(rmap, location, tol=DEFAULT):
    rmap = as_map(rmap)
    _check_fixed(rmap, location, tol)
    report = fixed_points(rmap, tol)
    if is_inf(location):
        return report.infinite.multiplicity
    best = min(report.finite, key=lambda p: abs(p.location - location))
    return best.multiplicity


def _contour_radius(center, others):
    dists = [abs(o - center) for o in others if abs(o - center) > 0]
    if not dists:
        return 0.5 * (1.0 + abs(center))
    return 0.5 * min(dists)


def residue_index_contour(rmap, center, radius=None, n_points=None, tol=DEFAULT, others=()):
    """``(1/2 pi i) * contour integral of dz / (z - R(z))`` around ``center``.

    Trapezoidal rule on equispaced points of the circle, doubling the point
    count from ``n_points`` until two successive values agree. When
    ``radius`` is omitted it is half the distance to the nearest point in
    ``others`` (other fixed points and poles).
    """
    rmap = as_map(rmap)
    center = complex(center)
    if radius is None:
        radius = _contour_radius(center, others)
    n = n_points or tol.contour_start
    num, den = rmap.num.coeffs, rmap.den.coeffs
    if rmap.num.is_zero():
        num = np.zeros(1, dtype=np.complex128)
    prev = None
    while n <= tol.contour_max:
        val, min_den, min_f = _kernels.contour(num, den, center, radius, n)
        if min_den < tol.pole_tol:
            raise ContourError(f"pole on or near the contour |z - {center}| = {radius}")
        if min_f == 0:
            raise ContourError(f"fixed point on the contour |z - {center}| = {radius}")
        if prev is not None and abs(val - prev) <= tol.contour_tol * max(1.0, abs(val)):
            return val
        prev = val
        n *= 2
    raise ContourError(f"contour quadrature did not converge by {tol.contour_max} points")


def _finite_poles(rmap, tol):
    if rmap.den.degree < 1:
        return []
    return find_roots(rmap.den, tol.root_tol).locations()


def _infinity_multiplicity(rmap, F, tol):
    """Order of infinity as a fixed point: the number of vanishing top
    coefficients of ``num - z*den`` counted down from degree ``d+1``."""
    d = rmap.degree
    c = F.padded(d + 2)
    m = 1
    if abs(c[d]) > tol.one_band * abs(rmap.num.lead):
        return m
    scale = np.abs(c).max()
    m = 2
    for k in range(d - 1, -1, -1):
        if abs(c[k]) > tol.one_band * scale:
            break
        m += 1
    return min(m, d + 1)


def fixed_points(rmap, tol=DEFAULT):
    """All fixed points of ``rmap`` on the Riemann sphere with their data."""
    rmap = as_map(rmap)
    if rmap.degree < 1:
        raise DegreeError("constant maps are excluded")
    F = rmap.fixed_point_polynomial()
    scale = max(np.abs(rmap.num.coeffs).max(initial=0.0), np.abs(rmap.den.coeffs).max())
    if F.is_zero() or np.abs(F.coeffs).max() <= tol.identity_tol * scale:
        raise IdentityMapError("identity map excluded: every point is fixed")

    d = rmap.degree
    warnings = []
    m_inf = 0
    if rmap.fixes_infinity():
        m_inf = _infinity_multiplicity(rmap, F, tol)
    finite_deg = d + 1 - m_inf
    Ft = Polynomial(F.padded(d + 2)[: finite_deg + 1])

    sweeps, converged = 0, True
    finite = []
    if finite_deg >= 1:
        rs = find_roots(Ft, tol.root_tol, maxiter=tol.max_sweeps, eps_scale=tol.cluster_eps)
        sweeps, converged = rs.sweeps, rs.converged
        if not converged:
            warnings.append(f"root finder stopped after {sweeps} sweeps without converging")
        finite = list(rs.roots)

    poles = _finite_poles(rmap, tol)
    common = rmap.common_roots(1e-8) if poles else []
    if common:
        warnings.append(f"numerator and denominator share roots near {common}")

    points = []
    locs = [r.location for r in finite]
    for i, r in enumerate(finite):
        z = r.location
        lam = complex(_derivative_at(rmap, z))
        others = locs[:i] + locs[i + 1:] + poles
        points.append(_make_point(rmap, z, lam, r.multiplicity, tol, others))

    if m_inf:
        lam = _infinity_multiplier(rmap)
        points.append(_make_infinite_point(rmap, lam, m_inf, locs, tol))

    for p in points:
        if p.multiplier_one != (p.multiplicity >= 2):
            warnings.append(
                f"multiplier/multiplicity mismatch at {p.location!r}: "
                f"lambda={p.multiplier!r}, m={p.multiplicity}"
            )

    total = complex(sum(p.index for p in points))
    return FixedPointReport(
        map=rmap,
        points=tuple(points),
        index_sum=total,
        index_sum_deviation=abs(total - 1),
        sweeps=sweeps,
        converged=converged,
        warnings=tuple(warnings),
    )


def _make_point(rmap, z, lam, m, tol, others):
    cls = classify_multiplier(lam, tol)
    if cls.multiplier_one:
        idx = residue_index_contour(rmap, z, tol=tol, others=others)
        method = "contour"
    else:
        idx = 1 / (1 - lam)
        method = "closed-form"
    return FixedPoint(
        location=complex(z),
        multiplier=lam,
        multiplicity=int(m),
        index=complex(idx),
        classification=cls.kind,
        weakly_repelling=cls.weakly_repelling,
        simple=m == 1,
        multiplier_one=cls.multiplier_one,
        rational_order=cls.rational_order,
        index_method=method,
    )


def _make_infinite_point(rmap, lam, m, finite_locs, tol):
    cls = classify_multiplier(lam, tol)
    if cls.multiplier_one:
        chart = inversion_chart(rmap)
        others = [1 / z for z in finite_locs if z != 0]
        if chart.den.degree >= 1:
            others += _finite_poles(chart, tol)
        idx = residue_index_contour(chart, 0j, tol=tol, others=others)
        method = "contour"
    else:
        idx = 1 / (1 - lam)
        method = "closed-form"
    return FixedPoint(
        location=INF,
        multiplier=complex(lam),
        multiplicity=int(m),
        index=complex(idx),
        classification=cls.kind,
        weakly_repelling=cls.weakly_repelling,
        simple=m == 1,
        multiplier_one=cls.multiplier_one,
        rational_order=cls.rational_order,
        index_method=method,
    )


def contour_index_of(rmap, fp, report=None, tol=DEFAULT):
    """Contour-quadrature index of ``fp`` with the default radius rule."""
    rmap = as_map(rmap)
    report = report or fixed_points(rmap, tol)
    locs = [p.location for p in report.finite]
    if fp.is_infinite:
        chart = inversion_chart(rmap)
        others = [1 / z for z in locs if z != 0]
        if chart.den.degree >= 1:
            others += _finite_poles(chart, tol)
        return residue_index_contour(chart, 0j, tol=tol, others=others)
    others = [z for z in locs if z != fp.location] + _finite_poles(rmap, tol)
    return residue_index_contour(rmap, fp.location, tol=tol, others=others)


def residue_index(rmap, fp, tol=DEFAULT):
    """Index ``1/(1 - lambda)``, falling back to quadrature when ``lambda ~ 1``."""
    lam = fp.multiplier
    if abs(lam - 1) > tol.one_band:
        return complex(1 / (1 - lam))
    return contour_index_of(rmap, fp, tol=tol)


def verify_index_sum(rmap, tol=DEFAULT):
    report = fixed_points(rmap, tol)
    return IndexSumCheck(report.index_sum, report.index_sum_deviation,
                         report.index_sum_deviation <= tol.sum_pass)


def verify_polynomial_sums(p, tol=DEFAULT):
    """Finite-fixed-point identities of a polynomial of degree >= 2.

    With all finite fixed points simple, ``sum 1/(1 - lambda_i)`` vanishes,
    and so do its real part ``sum (1 - Re lambda_i)/|1 - lambda_i|^2`` and
    imaginary part ``sum Im lambda_i/|1 - lambda_i|^2``.
    """
    rmap = as_map(p)
    if not rmap.is_polynomial() or rmap.degree < 2:
        raise DegreeError("verify_polynomial_sums needs a polynomial of degree >= 2")
    report = fixed_points(rmap, tol)
    pts = report.finite
    lams = tuple(pt.multiplier for pt in pts)
    multiple = [pt for pt in pts if not pt.simple or pt.multiplier_one]
    if multiple:
        return PolynomialSums(lams, multiple_witness=multiple[0],
                              warnings=("multiple fixed point present; sums skipped",))
    lam = np.array(lams, dtype=np.complex128)
    one_minus = 1 - lam
    mod2 = np.abs(one_minus) ** 2
    e3 = complex(np.sum(1 / one_minus))
    e4 = float(np.sum((1 - lam.real) / mod2))
    im = float(np.sum(lam.imag / mod2))
    w = tol.witness_tol
    return PolynomialSums(
        multipliers=lams,
        e3_sum=e3,
        e4_sum=e4,
        im_sum=im,
        re_ge1=tuple(i for i, l in enumerate(lams) if l.real >= 1 - w),
        re_le1=tuple(i for i, l in enumerate(lams) if l.real <= 1 + w),
        im_nonneg=tuple(i for i, l in enumerate(lams) if l.imag >= -w),
    )
