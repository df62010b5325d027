"""Polynomials, rational maps and Möbius maps over complex doubles.

Coefficients are stored in ascending-power order. All three types are
immutable: their coefficient arrays are flagged read-only.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegenerateMobiusError, DegreeError, IndeterminateError, ScaleError

# Degree of the zero polynomial. -inf keeps max()/comparisons in degree
# formulas correct without special cases.
ZERO_DEGREE = -math.inf


class _Infinity:
    """The point at infinity of the Riemann sphere (singleton ``INF``)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_inf(z):
    return z is INF


def _as_coeffs(coeffs):
    arr = np.array(coeffs, dtype=np.complex128).ravel()
    nz = np.flatnonzero(arr)
    arr = arr[: nz[-1] + 1] if nz.size else arr[:0]
    arr.setflags(write=False)
    return arr


class Polynomial:
    """Complex polynomial with trailing zero coefficients stripped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Polynomial):
            self._c = coeffs._c
        else:
            self._c = _as_coeffs(coeffs)

    @classmethod
    def monomial(cls, k, c=1.0):
        out = np.zeros(k + 1, dtype=np.complex128)
        out[k] = c
        return cls(out)

    @classmethod
    def from_roots(cls, roots, lead=1.0):
        c = np.array([lead], dtype=np.complex128)
        for r in roots:
            c = np.convolve(c, np.array([-r, 1.0], dtype=np.complex128))
        return cls(c)

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if len(self._c) else ZERO_DEGREE

    def is_zero(self):
        return len(self._c) == 0

    @property
    def lead(self):
        return complex(self._c[-1]) if len(self._c) else 0j

    def padded(self, n):
        """Coefficients zero-padded to length ``n``."""
        out = np.zeros(max(n, len(self._c)), dtype=np.complex128)
        out[: len(self._c)] = self._c
        return out

    def __call__(self, z):
        if np.ndim(z) == 0:
            acc = 0j
            for c in self._c[::-1]:
                acc = acc * z + c
            return complex(acc)
        return _kernels.polyval(self._c, np.asarray(z))

    def derivative(self):
        if len(self._c) <= 1:
            return Polynomial()
        return Polynomial(self._c[1:] * np.arange(1, len(self._c)))

    def monic(self):
        if self.is_zero():
            raise DegreeError("zero polynomial has no monic normalisation")
        return Polynomial(self._c / self._c[-1])

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if np.ndim(other) == 0:
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return Polynomial(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            return Polynomial(np.convolve(self._c, other._c))
        if np.ndim(other) == 0:
            return Polynomial(self._c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, (int, np.integer)) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Polynomial([1.0])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    __hash__ = None

    def allclose(self, other, rtol=1e-14, atol=0.0):
        n = max(len(self._c), len(other._c))
        a, b = self.padded(n), other.padded(n)
        scale = max(np.abs(a).max(initial=0.0), np.abs(b).max(initial=0.0))
        return bool(np.all(np.abs(a - b) <= atol + rtol * scale))

    def __repr__(self):
        return f"Polynomial({self._c.tolist()!r})"


Z = Polynomial([0.0, 1.0])


class RationalMap:
    """``num/den`` with ``den`` nonzero, normalised so ``den`` is monic.

    ``degree`` is ``max(deg num, deg den)``. No gcd is taken; shared roots
    are reported by :meth:`common_roots`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1.0,), normalize=True):
        num = Polynomial(num)
        den = Polynomial(den)
        if den.is_zero():
            raise DegreeError("denominator is the zero polynomial")
        if normalize:
            lead = den.lead
            with np.errstate(over="ignore", invalid="ignore"):
                nc = num.coeffs / lead
                dc = den.coeffs / lead
            if not (np.all(np.isfinite(nc)) and np.all(np.isfinite(dc))):
                raise ScaleError(f"denominator leading coefficient {lead!r} too small to normalise")
            if lead != 1:
                num = Polynomial(nc)
            dc[-1] = 1.0  # exactly 1, and no signed-zero imaginary part
            den = Polynomial(dc)
        self.num = num
        self.den = den

    @classmethod
    def polynomial(cls, coeffs):
        return cls(coeffs, [1.0])

    @property
    def degree(self):
        d = max(self.num.degree, self.den.degree)
        return int(d)

    def is_polynomial(self):
        return self.den.degree == 0

    def fixes_infinity(self):
        return self.num.degree > self.den.degree

    def fixed_point_polynomial(self):
        """``num(z) - z*den(z)``; its roots are the finite fixed points."""
        return self.num - Z * self.den

    def __call__(self, z):
        return evaluate(self, z)

    def common_roots(self, tol=1e-8):
        """Approximate roots shared by ``num`` and ``den`` (should be empty)."""
        from .roots import find_roots

        if self.num.degree < 1 or self.den.degree < 1:
            return []
        rn = find_roots(self.num).locations()
        rd = find_roots(self.den).locations()
        out = []
        for a in rn:
            for b in rd:
                if abs(a - b) <= tol * (1.0 + abs(a)):
                    out.append(complex(0.5 * (a + b)))
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def allclose(self, other, rtol=1e-14, atol=0.0):
        return self.num.allclose(other.num, rtol, atol) and self.den.allclose(other.den, rtol, atol)

    def __repr__(self):
        return f"RationalMap(num={self.num.coeffs.tolist()!r}, den={self.den.coeffs.tolist()!r})"


def as_map(obj):
    if isinstance(obj, RationalMap):
        return obj
    return RationalMap(obj, [1.0])


def evaluate(rmap, z):
    """Value of ``rmap`` at ``z`` (``INF`` allowed); returns ``INF`` at a pole.

    Raises IndeterminateError when numerator and denominator both vanish.
    """
    if is_inf(z):
        dn, dd = rmap.num.degree, rmap.den.degree
        if dn > dd:
            return INF
        return rmap.num.lead / rmap.den.lead if dn == dd else 0j
    n = rmap.num(z)
    d = rmap.den(z)
    if d == 0:
        if n == 0:
            raise IndeterminateError(f"0/0 at z={z!r}: numerator and denominator share a root")
        return INF
    return n / d


def derivative(rmap):
    num, den = rmap.num, rmap.den
    if den.degree == 0:
        return RationalMap(num.derivative() * (1.0 / den.lead), [1.0])
    return RationalMap(num.derivative() * den - num * den.derivative(), den * den)


def inversion_chart(rmap):
    """The map ``w -> 1/R(1/w)``, which moves infinity to the origin."""
    n = rmap.degree + 1
    if rmap.num.is_zero():
        raise DegreeError("the zero map has no inversion chart")
    rev_num = rmap.num.padded(n)[::-1]
    rev_den = rmap.den.padded(n)[::-1]
    return RationalMap(rev_den, rev_num)


@dataclass(frozen=True)
class MobiusMap:
    """``z -> (a*z + b) / (c*z + d)``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for k in "abcd":
            object.__setattr__(self, k, complex(getattr(self, k)))
        scale = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        if scale == 0 or abs(self.det) < 1e-14 * scale * scale:
            raise DegenerateMobiusError(f"ad - bc = {self.det!r} is degenerate")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __call__(self, z):
        a, b, c, d = self.a, self.b, self.c, self.d
        if is_inf(z):
            return INF if c == 0 else a / c
        den = c * z + d
        if den == 0:
            return INF
        return (a * z + b) / den


def mobius_conjugate(rmap, mob):
    """``g o R o g^-1`` for the Möbius map ``g = mob``.

    Uses homogeneous substitution of ``g^-1(w) = (d*w - b)/(-c*w + a)`` into
    numerator and denominator, so the degree is preserved.
    """
    n = rmap.degree
    a, b, c, d = mob.a, mob.b, mob.c, mob.d
    top = Polynomial([-b, d])
    bottom = Polynomial([a, -c])
    top_pows = [Polynomial([1.0])]
    bot_pows = [Polynomial([1.0])]
    for _ in range(n):
        top_pows.append(top_pows[-1] * top)
        bot_pows.append(bot_pows[-1] * bottom)

    def homog(p):
        acc = Polynomial()
        for k, coef in enumerate(p.coeffs):
            if coef != 0:
                acc = acc + coef * (top_pows[k] * bot_pows[n - k])
        return acc

    pn = homog(rmap.num)
    pd = homog(rmap.den)
    return RationalMap(a * pn + b * pd, c * pn + d * pd)
