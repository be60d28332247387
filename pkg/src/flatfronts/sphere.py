"""Rational maps and 1-forms on the Riemann sphere.

Points are exact :class:`~flatfronts.algebra.GaussianRational` values, plain
``complex`` numbers (numeric), or the singleton :data:`INF`.  Everything at
infinity goes through the chart ``w = 1/z``; differential weights
(``dz = -dw/w^2``, ``dz^2 = dw^2/w^4``) are applied by the callers that need
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .algebra import (
    DEFAULT_ROOT_TOL,
    GaussianRational,
    Polynomial,
    RationalMap,
    Scalar,
    ZERO,
    is_exact,
    partial_fractions,
    roots,
)

CLUSTER_TOL = 1e-9


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Point = Union[GaussianRational, complex, _Infinity]


def as_point(value) -> Point:
    if value is INF or isinstance(value, (GaussianRational, complex)):
        return value
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    if isinstance(value, float):
        return complex(value)
    return GaussianRational.coerce(value)


def chordal_distance(p: Point, q: Point) -> float:
    if p is INF and q is INF:
        return 0.0
    if p is INF or q is INF:
        other = q if p is INF else p
        return 1.0 / np.sqrt(1.0 + abs(complex(other)) ** 2)
    a, b = complex(p), complex(q)
    return abs(a - b) / np.sqrt((1 + abs(a) ** 2) * (1 + abs(b) ** 2))


def same_point(p: Point, q: Point, tol: float = CLUSTER_TOL) -> bool:
    """Exact equality when both points are exact, chordal closeness otherwise."""
    if p is INF or q is INF:
        return p is q
    if isinstance(p, GaussianRational) and isinstance(q, GaussianRational):
        return p == q
    return chordal_distance(p, q) <= tol


def point_sort_key(p: Point):
    if p is INF:
        return (1, 0.0, 0.0)
    z = complex(p)
    return (0, round(z.real, 9), round(z.imag, 9))


def is_finite(p: Point) -> bool:
    return p is not INF


# Evaluation ------------------------------------------------------------------


def reciprocal_chart(r: RationalMap) -> RationalMap:
    """``r(1/w)`` as a rational map in ``w``."""
    dn, dd = r.num.degree, r.den.degree
    if r.is_zero:
        return r
    shift = int(dd - dn)
    top, bottom = r.num.reversed(), r.den.reversed()
    if shift >= 0:
        top = top * Polynomial.monomial(shift)
    else:
        bottom = bottom * Polynomial.monomial(-shift)
    return RationalMap(top, bottom)


def evaluate(r: RationalMap, p: Point) -> Point:
    """Value of ``r`` at ``p`` in C u {inf}."""
    if p is INF:
        return evaluate(reciprocal_chart(r), ZERO)
    if isinstance(p, GaussianRational) or is_exact(p):
        p = GaussianRational.coerce(p)
        d = r.den(p)
        if not d:
            return INF
        return r.num(p) / d
    d = r.den.evaluate_numeric(p)
    n = r.num.evaluate_numeric(p)
    if d == 0 or abs(d) <= 1e-300 * max(1.0, abs(n)):
        return INF
    return complex(n / d)


def _exact_order(poly: Polynomial, p: GaussianRational) -> int:
    k = 0
    lin = Polynomial((-p, 1))
    while poly and not poly(p):
        poly = poly.exact_div(lin)
        k += 1
    return k


def _numeric_order(poly: Polynomial, p: complex, tol: float) -> int:
    if poly.degree < 1:
        return 0
    return sum(m for z, m in roots(poly) if abs(complex(z) - p) <= tol * (1 + abs(p)))


def order_at(r: RationalMap, p: Point, tol: float = CLUSTER_TOL) -> int:
    """Vanishing order of ``r`` at ``p`` (negative for poles); weight-free."""
    if r.is_zero:
        raise ValueError("order of the zero map is undefined")
    if p is INF:
        return int(r.den.degree - r.num.degree)
    if isinstance(p, GaussianRational):
        return _exact_order(r.num, p) - _exact_order(r.den, p)
    p = complex(p)
    return _numeric_order(r.num, p, tol) - _numeric_order(r.den, p, tol)


def degree(g: RationalMap) -> int:
    if g.is_constant or g.is_zero:
        raise ValueError("degree of a constant map is not defined here")
    return g.degree


def local_multiplicity(g: RationalMap, p: Point) -> int:
    """Multiplicity of ``g`` at ``p`` as a map of the sphere (>= 1)."""
    value = evaluate(g, p)
    if value is INF:
        return -order_at(g, p)
    shifted = g - RationalMap.constant(value) if is_exact(value) else None
    if shifted is not None:
        return order_at(shifted, p)
    # numeric value: multiplicity = 1 + order of g' (chart-aware at INF)
    if p is INF:
        return local_multiplicity(reciprocal_chart(g), ZERO)
    return 1 + order_at(g.derivative(), p)


# 1-forms -------------------------------------------------------------------


@dataclass(frozen=True)
class RationalOneForm:
    """The form ``coefficient(z) dz``."""

    coefficient: RationalMap

    def at_infinity(self) -> RationalMap:
        """Coefficient of the pulled-back form in ``w = 1/z`` (``dz = -dw/w^2``)."""
        c = reciprocal_chart(self.coefficient)
        return -c * RationalMap(Polynomial.constant(1), Polynomial.monomial(2))

    def order_at(self, p: Point) -> int:
        if p is INF:
            return order_at(self.at_infinity(), ZERO)
        return order_at(self.coefficient, p)


def residue(form: RationalOneForm, p: Point, tol: float = DEFAULT_ROOT_TOL) -> Scalar:
    """Coefficient of ``(z-p)^-1``; at infinity taken in the chart ``w = 1/z``."""
    if form.coefficient.is_zero:
        return ZERO
    if p is INF:
        return residue(RationalOneForm(form.at_infinity()), ZERO, tol)
    pf = partial_fractions(form.coefficient, tol)
    for term in pf.terms:
        if term.order == 1 and same_point(term.location, p):
            return term.coefficient
    return ZERO


@dataclass(frozen=True)
class PoleRecord:
    location: Point
    order: int
    residue: Scalar

    @property
    def exact(self) -> bool:
        return isinstance(self.residue, GaussianRational)


def poles(form: RationalOneForm, tol: float = DEFAULT_ROOT_TOL) -> list[PoleRecord]:
    """Every pole on the sphere with its order and residue."""
    coef = form.coefficient
    if coef.is_zero:
        return []
    pf = partial_fractions(coef, tol)
    out = []
    orders: dict = {}
    res: dict = {}
    for term in pf.terms:
        key = term.location
        orders[key] = max(orders.get(key, 0), term.order)
        if term.order == 1:
            res[key] = term.coefficient
    for loc, m in orders.items():
        r = res.get(loc, ZERO if isinstance(loc, GaussianRational) else 0j)
        out.append(PoleRecord(loc, m, r))
    inf_order = form.order_at(INF)
    if inf_order < 0:
        out.append(PoleRecord(INF, -inf_order, residue(form, INF, tol)))
    out.sort(key=lambda rec: point_sort_key(rec.location))
    return out


# Critical points -----------------------------------------------------------


def wronskian(g: RationalMap) -> Polynomial:
    return g.num.derivative() * g.den - g.num * g.den.derivative()


def critical_divisor(g: RationalMap, tol: float = DEFAULT_ROOT_TOL) -> dict:
    """Branch points of ``g`` on the sphere with branching order (multiplicity - 1)."""
    if g.is_constant:
        raise ValueError("constant maps have no critical divisor")
    div: dict = {}
    w = wronskian(g)
    if w.degree >= 1:
        for loc, m in roots(w, tol):
            div[loc] = m
    e_inf = local_multiplicity(g, INF)
    if e_inf > 1:
        div[INF] = e_inf - 1
    return dict(sorted(div.items(), key=lambda kv: point_sort_key(kv[0])))


def divisor_degree(div: dict) -> int:
    return sum(div.values())
