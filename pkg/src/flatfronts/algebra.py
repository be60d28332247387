"""Exact arithmetic over the Gaussian rationals Q(i).

Polynomials are stored as tuples of :class:`GaussianRational` coefficients in
ascending order, ``(a0, a1, ..., an)`` with ``an != 0``; the zero polynomial
is the empty tuple and has degree :data:`ZERO_DEGREE` (``-inf``), so that
``deg(p * q) == deg(p) + deg(q)`` holds without special cases.

Root finding is hybrid: a square-free decomposition fixes multiplicities
exactly, numeric roots of each square-free factor come from Aberth-Ehrlich
iteration, and every numeric root is tested for being an exact Gaussian
rational (rounded onto the lattice its denominator must live on, then checked
by exact evaluation).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

ZERO_DEGREE = float("-inf")

DEFAULT_ROOT_TOL = 1e-12
DEFAULT_VERIFY_TOL = 1e-9


class RootFindingError(ArithmeticError):
    """Numeric root iteration ran out of its iteration budget."""


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = _fraction(re)
        self.im = _fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(value)

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return _fmt_frac(self.re)
        if self.re == 0:
            return _fmt_imag(self.im)
        imag = _fmt_imag(abs(self.im))
        sign = "-" if self.im < 0 else "+"
        return f"{_fmt_frac(self.re)}{sign}{imag}"

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _maybe_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe_gr(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _maybe_gr(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _maybe_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def denominator_lcm(self) -> int:
        return math.lcm(self.re.denominator, self.im.denominator)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)) or isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def _maybe_gr(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, Rational):
        return GaussianRational(value)
    return NotImplemented


def _fmt_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _fmt_imag(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{_fmt_frac(x)}*i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

Scalar = Union[GaussianRational, complex]


def is_exact(value) -> bool:
    return isinstance(value, (GaussianRational, Rational))


# --------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """Univariate polynomial over Q(i); immutable."""

    __slots__ = ("coeffs", "_numeric")

    def __init__(self, coeffs: Iterable = ()):
        cs = [GaussianRational.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)
        self._numeric = None

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls.constant(1)
        for r in roots:
            p = p * cls((-GaussianRational.coerce(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if is_exact(other):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result, base = Polynomial.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        if len(rem) - 1 < dq:
            return Polynomial(), self
        inv_lead = ONE / other.leading
        quot = [ZERO] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] = rem[k - dq + j] - c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def scale(self, c) -> "Polynomial":
        c = GaussianRational.coerce(c)
        return Polynomial(a * c for a in self.coeffs)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(ONE / self.leading)

    def derivative(self) -> "Polynomial":
        return Polynomial(c * k for k, c in enumerate(self.coeffs) if k > 0)

    def antiderivative(self) -> "Polynomial":
        """Primitive with zero constant term."""
        return Polynomial([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def reversed(self, n: int | None = None) -> "Polynomial":
        """``z^n p(1/z)``; ``n`` defaults to the degree."""
        if n is None:
            n = len(self.coeffs) - 1
        cs = list(self.coeffs) + [ZERO] * (n + 1 - len(self.coeffs))
        return Polynomial(reversed(cs[: n + 1]))

    def __call__(self, z):
        if isinstance(z, (GaussianRational, Rational)):
            z = GaussianRational.coerce(z)
            acc = ZERO
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return acc
        return self.evaluate_numeric(z)

    @property
    def numeric(self) -> np.ndarray:
        """Complex coefficients, ascending order."""
        if self._numeric is None:
            self._numeric = np.array([complex(c) for c in self.coeffs], dtype=complex)
        return self._numeric

    def evaluate_numeric(self, z):
        cs = self.numeric
        if isinstance(z, np.ndarray):
            acc = np.zeros(z.shape, dtype=complex)
        else:
            z = complex(z)
            acc = 0j
        for c in cs[::-1]:
            acc = acc * z + c
        return acc

    def taylor_shift(self, p) -> list:
        """Coefficients of ``q(t) = self(p + t)`` in ascending order.

        Works with an exact or a numeric base point; for a numeric base point
        the coefficients are complex.
        """
        if is_exact(p):
            p = GaussianRational.coerce(p)
            cs = list(self.coeffs)
            zero = ZERO
        else:
            p = complex(p)
            cs = list(self.numeric)
            zero = 0j
        n = len(cs)
        # repeated synthetic division
        out = []
        for _ in range(n):
            acc = zero
            rem = []
            for c in reversed(cs):
                acc = acc * p + c
                rem.append(acc)
            out.append(rem[-1])
            cs = list(reversed(rem[:-1]))
        return out

    def content_scale(self) -> Fraction:
        """Positive integer multiplier that clears every denominator."""
        return reduce(math.lcm, (c.denominator_lcm() for c in self.coeffs), 1)


def _as_poly(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (GaussianRational, Rational)):
        return Polynomial.constant(value)
    return NotImplemented


Z = Polynomial((0, 1))


def format_polynomial(p: Polynomial, var: str = "z") -> str:
    if p.is_zero:
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        if not mono:
            body = str(c)
            negative = c.im == 0 and c.re < 0
            if negative:
                body = str(-c)
        elif c == 1:
            body, negative = mono, False
        elif c == -1:
            body, negative = mono, True
        elif c.im == 0:
            negative = c.re < 0
            body = f"{_fmt_frac(abs(c.re))}*{mono}"
        else:
            body, negative = f"({c})*{mono}", False
        terms.append((negative, body))
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for negative, body in terms[1:]:
        out += (" - " if negative else " + ") + body
    return out


_PRIME = 2**31 - 1  # = 3 mod 4, so Z[i] / p is the field with p^2 elements


def _mod_p(c: GaussianRational) -> tuple[int, int] | None:
    den = c.re.denominator * c.im.denominator
    if den % _PRIME == 0:
        return None
    inv = pow(den % _PRIME, -1, _PRIME)
    return (c.re.numerator * c.im.denominator * inv % _PRIME, c.im.numerator * c.re.denominator * inv % _PRIME)


def _reduce_mod_p(p: Polynomial) -> list[tuple[int, int]] | None:
    out = []
    for c in p.coeffs:
        r = _mod_p(c)
        if r is None:
            return None
        out.append(r)
    return out if out and out[-1] != (0, 0) else None


def _coprime_mod_p(a: Polynomial, b: Polynomial) -> bool:
    """True when the images mod p are coprime, which proves ``gcd(a, b) = 1``.

    Reduction only lowers the gcd degree when p divides a leading
    coefficient, and that case is excluded by :func:`_reduce_mod_p`.
    """
    pa, pb = _reduce_mod_p(a), _reduce_mod_p(b)
    if pa is None or pb is None:
        return False
    q = _PRIME

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % q, (x[0] * y[1] + x[1] * y[0]) % q)

    def inv(x):
        n = pow((x[0] * x[0] + x[1] * x[1]) % q, -1, q)
        return (x[0] * n % q, -x[1] * n % q)

    def trim(v):
        while v and v[-1] == (0, 0):
            v.pop()
        return v

    while pb:
        if len(pb) == 1:
            return True
        lead = inv(pb[-1])
        rem = list(pa)
        db = len(pb) - 1
        for k in range(len(rem) - 1, db - 1, -1):
            c = mul(rem[k], lead)
            if c != (0, 0):
                for j, y in enumerate(pb):
                    t = mul(c, y)
                    r = rem[k - db + j]
                    rem[k - db + j] = ((r[0] - t[0]) % q, (r[1] - t[1]) % q)
        pa, pb = pb, trim(rem[:db])
    return len(pa) == 1


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if a and b and (a.degree == 0 or b.degree == 0 or _coprime_mod_p(a, b)):
        return Polynomial.constant(1)
    # monic remainders keep the rational coefficients from growing
    if b:
        b = b.monic()
    while b:
        r = a % b
        a, b = b, (r.monic() if r else r)
    return a.monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: ``monic(p) = prod f_i ** i`` with each ``f_i`` square-free."""
    if p.degree < 1:
        return []
    f = p.monic()
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = f.exact_div(a0)
    c = fp.exact_div(a0)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


# --------------------------------------------------------------------------
# Rational maps


class RationalMap:
    """Reduced quotient ``num / den``: coprime, monic nonzero denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num) if not isinstance(num, Polynomial) else num
        den = _as_poly(den) if not isinstance(den, Polynomial) else den
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("polynomial or exact scalar expected")
        if den.is_zero:
            raise ZeroDivisionError("rational map with zero denominator")
        if num.is_zero:
            self.num, self.den = Polynomial(), Polynomial.constant(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.leading
        if lead != 1:
            inv = ONE / lead
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def constant(cls, c) -> "RationalMap":
        return cls(Polynomial.constant(c))

    @classmethod
    def identity(cls) -> "RationalMap":
        return cls(Z)

    def __repr__(self):
        return f"RationalMap({self})"

    def __str__(self):
        return format_rational(self)

    def __eq__(self, other):
        if isinstance(other, RationalMap):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Polynomial, GaussianRational, Rational)):
            return self == RationalMap(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree < 1 and self.den.degree == 0

    @property
    def degree(self) -> int:
        """``max(deg num, deg den)``; zero map counts as degree 0."""
        return max(int(max(self.num.degree, 0)), int(self.den.degree))

    @property
    def leading(self) -> GaussianRational:
        """Leading coefficient ratio, used to normalise logarithmic primitives."""
        return self.num.leading / self.den.leading

    def __neg__(self):
        return RationalMap(-self.num, self.den)

    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalMap(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalMap(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational map")
        return RationalMap(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer exponent expected")
        if n >= 0:
            return RationalMap(self.num**n, self.den**n)
        if self.is_zero:
            raise ZeroDivisionError("negative power of the zero map")
        return RationalMap(self.den ** (-n), self.num ** (-n))

    def __call__(self, z):
        if is_exact(z):
            d = self.den(z)
            if not d:
                raise ZeroDivisionError("evaluation at a pole")
            return self.num(z) / d
        return self.num.evaluate_numeric(z) / self.den.evaluate_numeric(z)

    def derivative(self) -> "RationalMap":
        return differentiate(self)

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """``self(inner(z))`` via homogenisation."""
        n = self.degree
        a, b = inner.num, inner.den
        apow = [Polynomial.constant(1)]
        bpow = [Polynomial.constant(1)]
        for _ in range(n):
            apow.append(apow[-1] * a)
            bpow.append(bpow[-1] * b)
        top = Polynomial()
        bottom = Polynomial()
        for k in range(n + 1):
            mono = apow[k] * bpow[n - k]
            top = top + mono.scale(self.num[k])
            bottom = bottom + mono.scale(self.den[k])
        return RationalMap(top, bottom)

    def mobius(self, a) -> "RationalMap":
        """``(a11 R + a12) / (a21 R + a22)`` for a 2x2 exact matrix ``a``."""
        (a11, a12), (a21, a22) = [[GaussianRational.coerce(x) for x in row] for row in a]
        top = self.num.scale(a11) + self.den.scale(a12)
        bottom = self.num.scale(a21) + self.den.scale(a22)
        return RationalMap(top, bottom)


def _as_rational(value):
    if isinstance(value, RationalMap):
        return value
    if isinstance(value, (Polynomial, GaussianRational, Rational)):
        return RationalMap(value)
    return NotImplemented


def format_rational(r: RationalMap, var: str = "z") -> str:
    top = format_polynomial(r.num, var)
    if r.den.degree == 0:
        return top
    return f"({top})/({format_polynomial(r.den, var)})"


def normalize(num: Polynomial, den: Polynomial) -> RationalMap:
    """Reduced form of ``num / den``; raises ``ZeroDivisionError`` if ``den == 0``."""
    return RationalMap(num, den)


def differentiate(r: RationalMap) -> RationalMap:
    """Exact quotient-rule derivative, reduced."""
    return RationalMap(r.num.derivative() * r.den - r.num * r.den.derivative(), r.den * r.den)


# --------------------------------------------------------------------------
# Roots


def _aberth(coeffs: np.ndarray, max_iter: int, tol: float) -> np.ndarray:
    """Simultaneous root iteration for a polynomial with ascending complex coefficients."""
    n = len(coeffs) - 1
    c = coeffs / coeffs[-1]
    # Cauchy-type radius bound for the initial circle
    radius = 1.0 + float(np.max(np.abs(c[:-1])))
    start = np.exp(2j * np.pi * (np.arange(n) + 0.25) / n)
    z = radius * 0.5 * start + (-c[-2] / n if n > 0 else 0)
    dc = c[1:] * np.arange(1, n + 1)
    for _ in range(max_iter):
        pz = np.polyval(c[::-1], z)
        dpz = np.polyval(dc[::-1], z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            corr = ratio / (1.0 - ratio * inv.sum(axis=1))
        corr = np.where(np.isfinite(corr), corr, 0.0)
        # multiple roots converge slowly; freeze a root once |p(z)| is at rounding level
        floor = 16 * n * np.finfo(float).eps * np.polyval(np.abs(c[::-1]), np.abs(z))
        settled = np.abs(pz) <= floor
        corr = np.where(settled, 0.0, corr)
        z = z - corr
        if np.all(settled | (np.abs(corr) <= tol * np.maximum(1.0, np.abs(z)))):
            return z
    raise RootFindingError(f"Aberth iteration budget of {max_iter} steps exhausted")


def _polish(coeffs: np.ndarray, z: complex, steps: int = 4) -> complex:
    d = np.polynomial.polynomial.polyder(coeffs)
    for _ in range(steps):
        pz = np.polynomial.polynomial.polyval(z, coeffs)
        dz = np.polynomial.polynomial.polyval(z, d)
        if dz == 0 or pz == 0:
            break
        z = z - pz / dz
    return complex(z)


def numeric_roots(coeffs: Sequence[complex], tol: float = DEFAULT_ROOT_TOL, max_iter: int = 500) -> list[complex]:
    """All roots (with repetition) of a polynomial given by ascending complex coefficients."""
    c = np.asarray(coeffs, dtype=complex)
    nz = np.nonzero(c)[0]
    if len(nz) == 0:
        raise ValueError("the zero polynomial has no finite root set")
    c = c[: nz[-1] + 1]
    # factor out roots at the origin
    low = nz[0]
    out = [0j] * int(low)
    c = c[low:]
    n = len(c) - 1
    if n == 0:
        return out
    if n == 1:
        return out + [complex(-c[0] / c[1])]
    z = _aberth(c, max_iter, max(tol * 1e-3, 1e-15))
    return out + [_polish(c, complex(r)) for r in z]


def _lattice_candidate(r: complex, scale: int) -> GaussianRational | None:
    re = round(r.real * scale)
    im = round(r.imag * scale)
    if not (math.isfinite(r.real) and math.isfinite(r.imag)):
        return None
    return GaussianRational(Fraction(re, scale), Fraction(im, scale))


def _exact_roots_of_squarefree(s: Polynomial, tol: float) -> tuple[list[GaussianRational], Polynomial]:
    """Split off every Gaussian-rational root of a square-free polynomial.

    Clearing denominators gives Gaussian-integer coefficients with leading
    coefficient ``g``; any root ``u/v`` in lowest terms has ``v | g``, so
    ``N(g) * root`` is a Gaussian integer and rounding onto that lattice
    recovers the root from an accurate numeric approximation.
    """
    exact: list[GaussianRational] = []
    rest = s
    changed = True
    while changed and rest.degree >= 1:
        changed = False
        lead = rest.scale(rest.content_scale()).leading
        scale = int(lead.norm())
        for r in numeric_roots(rest.numeric, tol):
            cand = _lattice_candidate(r, scale)
            if cand is None or abs(complex(cand) - r) > 1e-6 * (1 + abs(r)):
                continue
            if not rest(cand):
                exact.append(cand)
                rest = rest.exact_div(Polynomial((-cand, 1)))
                changed = True
                break
    return exact, rest


def _cluster(points: list[tuple[complex, int]], radius: float) -> list[tuple[complex, int]]:
    merged: list[list] = []
    for z, m in points:
        for item in merged:
            if abs(item[0] - z) <= radius:
                total = item[1] + m
                item[0] = (item[0] * item[1] + z * m) / total
                item[1] = total
                break
        else:
            merged.append([z, m])
    return [(complex(z), m) for z, m in merged]


def _point_key(p):
    z = complex(p)
    return (round(z.real, 12), round(z.imag, 12))


def roots(p: Polynomial, tol: float = DEFAULT_ROOT_TOL) -> list[tuple[Scalar, int]]:
    """Roots with multiplicities; exact Gaussian-rational roots are returned exactly.

    Numeric roots that land within ``10 * tol`` of one another are merged.
    """
    return list(_roots(p, tol))


@lru_cache(maxsize=2048)
def _roots(p: Polynomial, tol: float) -> tuple[tuple[Scalar, int], ...]:
    if p.is_zero:
        raise ValueError("roots of the zero polynomial are undefined")
    exact: list[tuple[GaussianRational, int]] = []
    numeric: list[tuple[complex, int]] = []
    for factor, mult in squarefree_decomposition(p):
        ex, rest = _exact_roots_of_squarefree(factor, tol)
        exact.extend((r, mult) for r in ex)
        if rest.degree >= 1:
            for r in numeric_roots(rest.numeric, tol):
                numeric.append((_polish(factor.numeric, r), mult))
    numeric = _cluster(numeric, 10 * tol * max(1.0, max((abs(z) for z, _ in numeric), default=1.0)))
    out: list[tuple[Scalar, int]] = list(exact) + list(numeric)
    out.sort(key=lambda item: (not isinstance(item[0], GaussianRational), _point_key(item[0])))
    return tuple(out)


# --------------------------------------------------------------------------
# Partial fractions


@dataclass(frozen=True)
class PoleTerm:
    """``coefficient / (z - location) ** order``."""

    location: Scalar
    order: int
    coefficient: Scalar

    @property
    def exact(self) -> bool:
        return isinstance(self.location, GaussianRational)


@dataclass(frozen=True)
class PFDecomp:
    polynomial: Polynomial
    terms: tuple[PoleTerm, ...] = field(default_factory=tuple)

    def poles(self) -> list[tuple[Scalar, int]]:
        seen: dict = {}
        for t in self.terms:
            seen[t.location] = max(seen.get(t.location, 0), t.order)
        return list(seen.items())

    def residue(self, location) -> Scalar:
        for t in self.terms:
            if t.order == 1 and t.location == location:
                return t.coefficient
        return ZERO

    def residues(self) -> dict:
        return {t.location: t.coefficient for t in self.terms if t.order == 1}

    def __call__(self, z):
        """Re-sum the decomposition at ``z`` (numerically unless everything is exact)."""
        if is_exact(z) and all(t.exact for t in self.terms):
            z = GaussianRational.coerce(z)
            acc = self.polynomial(z)
            for t in self.terms:
                acc = acc + t.coefficient / (z - t.location) ** t.order
            return acc
        z = complex(z) if not isinstance(z, np.ndarray) else z
        acc = self.polynomial.evaluate_numeric(z)
        for t in self.terms:
            acc = acc + complex(t.coefficient) / (z - complex(t.location)) ** t.order
        return acc


def _series_divide(top: list, bottom: list, n: int, zero) -> list:
    """First ``n`` coefficients of ``top / bottom`` as power series (``bottom[0] != 0``)."""
    out = []
    inv0 = 1 / bottom[0] if not isinstance(bottom[0], GaussianRational) else ONE / bottom[0]
    for k in range(n):
        acc = top[k] if k < len(top) else zero
        for j in range(1, k + 1):
            if j < len(bottom):
                acc = acc - bottom[j] * out[k - j]
        out.append(acc * inv0)
    return out


def partial_fractions(r: RationalMap, tol: float = DEFAULT_ROOT_TOL) -> PFDecomp:
    """Polynomial part plus principal parts at every finite pole."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    poly, rem = divmod(r.num, r.den)
    terms: list[PoleTerm] = []
    if rem.is_zero:
        return PFDecomp(poly, ())
    for loc, m in roots(r.den, tol):
        zero = ZERO if isinstance(loc, GaussianRational) else 0j
        top = rem.taylor_shift(loc)
        bottom = r.den.taylor_shift(loc)[m:]
        series = _series_divide(top, bottom, m, zero)
        for j in range(1, m + 1):
            c = series[m - j]
            if isinstance(c, GaussianRational) and not c:
                continue
            terms.append(PoleTerm(loc, j, c))
    return PFDecomp(poly, tuple(terms))
