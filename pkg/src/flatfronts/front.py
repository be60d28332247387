"""Flat fronts in hyperbolic 3-space from a pair of hyperbolic Gauss maps.

Given rational ``G``, ``G*`` on a punctured sphere with real residues of
``eta = dG / (G - G*)``, the holomorphic lift is

    E = [[G/xi, xi G*/(G - G*)], [1/xi, xi/(G - G*)]],   xi = c exp(int eta),

and the front is ``f = E E*`` with unit normal ``nu = E e3 E*``.  Every entry
of ``f`` and ``nu`` involves ``xi`` only through ``u = |xi|^2``, so the engine
works with ``L = log u`` and never tracks a branch of ``xi``.  ``L`` comes
from the canonical primitive of ``eta``: ``sum r log(z - p)`` over simple
poles, ``-c / ((j-1)(z-p)^(j-1))`` for higher-order terms and the
antiderivative (zero constant term) of the polynomial part.  Only ``|c|^2``
is stored, as ``scale_sq``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence, Union

import numpy as np

from .algebra import (
    DEFAULT_ROOT_TOL,
    GaussianRational,
    I,
    ONE,
    Polynomial,
    RationalMap,
    ZERO,
    is_exact,
    partial_fractions,
    roots,
)
from .hyperbolic import HermitianPoint, congruence, coords_from_matrices, to_ball
from .sphere import (
    INF,
    Point,
    RationalOneForm,
    as_point,
    critical_divisor,
    evaluate,
    order_at,
    point_sort_key,
    poles,
    same_point,
)

RESIDUE_IMAG_TOL = 1e-10

# chart motions used near poles of G or G*: (matrix, determinant)
J = ((ZERO, I), (I, ZERO))
_CHARTS = (
    ((ONE, ZERO), (ZERO, ONE)),
    J,
    ((ONE, -ONE), (ONE, ONE)),
    ((ONE, I), (I, ONE)),
)
_CHART_SWITCH = 1e2


class FrontError(ValueError):
    """Input data do not define a front."""


class PeriodConditionError(FrontError):
    """Some residue of ``dG/(G - G*)`` is not real."""


ScaleSq = Union[Fraction, float]


def _exact_sqrt(x: Fraction) -> ScaleSq:
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return math.sqrt(x)


def scale_squared(c) -> ScaleSq:
    """``|c|^2``, exact for exact input."""
    if isinstance(c, GaussianRational):
        return c.norm()
    if isinstance(c, (int, Fraction)):
        return Fraction(c) ** 2
    if isinstance(c, str):
        from .expr import parse_constant

        return parse_constant(c).norm()
    return abs(complex(c)) ** 2


def _mul_scale(s: ScaleSq, factor: ScaleSq) -> ScaleSq:
    if isinstance(s, Fraction) and isinstance(factor, Fraction):
        return s * factor
    return float(s) * float(factor)


@dataclass(frozen=True)
class FrontSpec:
    """Input data of the construction.

    ``ends`` must contain every point of the sphere where ``G = G*``; use
    :meth:`build` to infer them.
    """

    gauss: RationalMap
    gauss_star: RationalMap
    scale_sq: ScaleSq = Fraction(1)
    genus: int = 0
    ends: tuple = ()

    def __post_init__(self):
        if self.gauss == self.gauss_star:
            raise FrontError("G = G* identically")
        if self.gauss.is_constant and self.gauss_star.is_constant:
            raise FrontError("both hyperbolic Gauss maps are constant")
        if not self.scale_sq > 0:
            raise FrontError("scale must be nonzero")
        if self.genus != 0:
            raise FrontError("rational Gauss maps live on a genus-0 surface")

    @classmethod
    def build(cls, gauss, gauss_star, scale=1, extra_ends: Sequence = ()) -> "FrontSpec":
        """Spec with the minimal end set (solutions of ``G = G*``) plus ``extra_ends``."""
        if gauss == gauss_star:
            raise FrontError("G = G* identically")
        ends = list(infer_ends(gauss, gauss_star))
        for p in extra_ends:
            p = as_point(p)
            if not any(same_point(p, q) for q in ends):
                ends.append(p)
        ends.sort(key=point_sort_key)
        return cls(gauss, gauss_star, scale_squared(scale), 0, tuple(ends))

    @property
    def scale(self) -> float:
        return math.sqrt(self.scale_sq)

    @property
    def is_horosphere(self) -> bool:
        return self.gauss.is_constant or self.gauss_star.is_constant

    @cached_property
    def eta(self) -> RationalOneForm:
        """``dG / (G - G*)``."""
        return RationalOneForm(self.gauss.derivative() / (self.gauss - self.gauss_star))


# Ends and conditions ---------------------------------------------------------


def coincidence_points(g: RationalMap, gs: RationalMap) -> list[tuple[Point, int]]:
    """Solutions of ``G = G*`` on the sphere with intersection multiplicity.

    Uses ``P S - R Q`` for ``G = P/Q`` and ``G* = R/S``, so common poles count
    as coincidences; the multiplicities add up to ``deg G + deg G*``.
    """
    h = g.num * gs.den - gs.num * g.den
    if h.is_zero:
        raise FrontError("G = G* identically")
    out: list[tuple[Point, int]] = list(roots(h)) if h.degree >= 1 else []
    deficit = g.degree + gs.degree - int(h.degree)
    if deficit > 0:
        out.append((INF, deficit))
    return out


def infer_ends(g: RationalMap, gs: RationalMap) -> list[Point]:
    return sorted((p for p, _ in coincidence_points(g, gs)), key=point_sort_key)


@dataclass(frozen=True)
class FrontCondition:
    holds: bool
    witness: Point | None = None
    horosphere: bool = False


def front_condition(g: RationalMap, gs: RationalMap, ends: Sequence = ()) -> FrontCondition:
    """No common branch point of ``G`` and ``G*`` away from the ends."""
    if g.is_constant or gs.is_constant:
        return FrontCondition(True, None, horosphere=True)
    branch = critical_divisor(g)
    branch_star = critical_divisor(gs)
    for p in branch:
        if any(same_point(p, e) for e in ends):
            continue
        if any(same_point(p, q) for q in branch_star):
            return FrontCondition(False, p)
    return FrontCondition(True)


@dataclass(frozen=True)
class PeriodPole:
    location: Point
    order: int
    residue: object
    real: bool
    exact: bool


@dataclass(frozen=True)
class PeriodReport:
    poles: tuple[PeriodPole, ...]
    verdict: bool
    justification: str = (
        "on a punctured sphere every cycle integral of eta is 2*pi*i times a sum of "
        "residues, so the periods are imaginary iff every residue is real"
    )

    def residue_at(self, p: Point):
        for rec in self.poles:
            if same_point(rec.location, as_point(p)):
                return rec.residue
        return ZERO


def _is_real(r) -> bool:
    if isinstance(r, GaussianRational):
        return r.im == 0
    return abs(complex(r).imag) <= RESIDUE_IMAG_TOL


def period_check(g: RationalMap, gs: RationalMap, tol: float = DEFAULT_ROOT_TOL) -> PeriodReport:
    if g == gs:
        raise FrontError("G = G* identically")
    form = RationalOneForm(g.derivative() / (g - gs))
    recs = []
    for rec in poles(form, tol):
        recs.append(PeriodPole(rec.location, rec.order, rec.residue, _is_real(rec.residue), rec.exact))
    return PeriodReport(tuple(recs), all(r.real for r in recs))


# Canonical primitive and charts -------------------------------------------------


@dataclass(frozen=True)
class _Primitive:
    locs: np.ndarray
    orders: np.ndarray
    coeffs: np.ndarray
    poly: np.ndarray

    @classmethod
    def of(cls, form: RationalOneForm) -> "_Primitive":
        if form.coefficient.is_zero:
            e = np.zeros(0)
            return cls(e.astype(complex), e.astype(int), e.astype(complex), e.astype(complex))
        pf = partial_fractions(form.coefficient)
        for t in pf.terms:
            if t.order == 1 and not _is_real(t.coefficient):
                raise PeriodConditionError(f"non-real residue {t.coefficient} at {t.location}")
        return cls(
            np.array([complex(t.location) for t in pf.terms], dtype=complex),
            np.array([t.order for t in pf.terms], dtype=int),
            np.array([complex(t.coefficient) for t in pf.terms], dtype=complex),
            pf.polynomial.antiderivative().numeric,
        )

    def real_part(self, z: np.ndarray) -> np.ndarray:
        """``Re F(z)`` for the canonical primitive ``F``."""
        out = np.polynomial.polynomial.polyval(z, self.poly).real if len(self.poly) else np.zeros(z.shape)
        with np.errstate(divide="ignore", invalid="ignore"):
            for loc, j, c in zip(self.locs, self.orders, self.coeffs):
                w = z - loc
                if j == 1:
                    out = out + c.real * np.log(np.abs(w))
                else:
                    out = out + (-c / ((j - 1) * w ** (j - 1))).real
        return out

    def pole_locations(self) -> np.ndarray:
        return self.locs


@dataclass(frozen=True)
class _Chart:
    matrix: tuple
    det_abs: float
    gauss: RationalMap
    gauss_star: RationalMap
    primitive: _Primitive
    log_scale_sq: float

    @property
    def adjugate(self) -> np.ndarray:
        (a11, a12), (a21, a22) = [[complex(x) for x in row] for row in self.matrix]
        return np.array([[a22, -a12], [-a21, a11]], dtype=complex)


def _matrix_det(a) -> GaussianRational:
    (a11, a12), (a21, a22) = [[GaussianRational.coerce(x) for x in row] for row in a]
    return a11 * a22 - a12 * a21


def _transformed_scale(spec: FrontSpec, a) -> ScaleSq:
    """``|c|^2`` of the lift ``a E`` normalised to determinant one."""
    (_, _), (a21, a22) = [[GaussianRational.coerce(x) for x in row] for row in a]
    denom = spec.gauss * a21 + RationalMap.constant(a22)
    lead_norm = denom.leading.norm()
    det_abs = _exact_sqrt(_matrix_det(a).norm())
    return _mul_scale(spec.scale_sq, _mul_scale(det_abs, Fraction(1) / lead_norm if isinstance(det_abs, Fraction) else 1.0 / float(lead_norm)))


def _make_chart(spec: FrontSpec, a) -> _Chart:
    g = spec.gauss.mobius(a)
    gs = spec.gauss_star.mobius(a)
    form = RationalOneForm(g.derivative() / (g - gs))
    det_abs = float(_exact_sqrt(_matrix_det(a).norm()))
    return _Chart(a, det_abs, g, gs, _Primitive.of(form), math.log(float(_transformed_scale(spec, a))))


class _Evaluator:
    """Numeric front evaluation for one spec; charts are built lazily."""

    def __init__(self, spec: FrontSpec):
        self.spec = spec
        self._charts: dict[int, _Chart] = {}
        self.g = spec.gauss
        self.gs = spec.gauss_star

        # a chart is unusable when a21 G + a22 vanishes identically
        self.valid = [k == 0 or not self.g.mobius(((ONE, ZERO), a[1])).is_zero for k, a in enumerate(_CHARTS)]

    def chart(self, k: int) -> _Chart:
        if k not in self._charts:
            self._charts[k] = _make_chart(self.spec, _CHARTS[k])
        return self._charts[k]

    def log_u(self, z: np.ndarray, k: int = 0) -> np.ndarray:
        ch = self.chart(k)
        return ch.log_scale_sq + 2.0 * ch.primitive.real_part(z)

    def choose_charts(self, z: np.ndarray) -> np.ndarray:
        p, q = self.g.num.evaluate_numeric(z), self.g.den.evaluate_numeric(z)
        r, s = self.gs.num.evaluate_numeric(z), self.gs.den.evaluate_numeric(z)
        badness = []
        with np.errstate(divide="ignore", invalid="ignore"):
            for k, a in enumerate(_CHARTS):
                if not self.valid[k]:
                    badness.append(np.full(z.shape, np.inf))
                    continue
                (a11, a12), (a21, a22) = [[complex(x) for x in row] for row in a]
                b1 = np.abs(a11 * p + a12 * q) / np.abs(a21 * p + a22 * q)
                b2 = np.abs(a11 * r + a12 * s) / np.abs(a21 * r + a22 * s)
                badness.append(np.nan_to_num(np.maximum(b1, b2), nan=np.inf))
        badness = np.array(badness)
        choice = np.argmin(badness, axis=0)
        return np.where(badness[0] <= _CHART_SWITCH, 0, choice)

    def matrices(self, z: np.ndarray, t: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
        z = np.asarray(z, dtype=complex)
        shape = z.shape
        z = z.ravel()
        f = np.empty((len(z), 2, 2), dtype=complex)
        nu = np.empty_like(f)
        choice = self.choose_charts(z)
        for k in np.unique(choice):
            idx = np.nonzero(choice == k)[0]
            ch = self.chart(int(k))
            zk = z[idx]
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                g = ch.gauss(zk)
                gs = ch.gauss_star(zk)
                lu = self.log_u(zk, int(k))
                fk, nk = lift_matrices(g, gs, lu)
            if k:
                adj = ch.adjugate
                fk = congruence(adj, fk) / ch.det_abs
                nk = congruence(adj, nk) / ch.det_abs
            f[idx], nu[idx] = fk, nk
        if t:
            with np.errstate(invalid="ignore", over="ignore"):
                f, nu = math.cosh(t) * f + math.sinh(t) * nu, math.cosh(t) * nu + math.sinh(t) * f
        return f.reshape(shape + (2, 2)), nu.reshape(shape + (2, 2))


def lift_matrices(g, gs, log_u) -> tuple[np.ndarray, np.ndarray]:
    """``f = E E*`` and ``nu = E e3 E*`` written through ``u = exp(log_u)`` only."""
    g = np.asarray(g, dtype=complex)
    gs = np.asarray(gs, dtype=complex)
    u = np.exp(np.asarray(log_u, dtype=float))
    inv_u = np.exp(-np.asarray(log_u, dtype=float))
    w = u / np.abs(g - gs) ** 2
    a11, a12, a22 = np.abs(g) ** 2 * inv_u, g * inv_u, inv_u
    b11, b12, b22 = w * np.abs(gs) ** 2, w * gs, w
    f = np.empty(g.shape + (2, 2), dtype=complex)
    nu = np.empty_like(f)
    f[..., 0, 0], f[..., 0, 1], f[..., 1, 1] = a11 + b11, a12 + b12, a22 + b22
    f[..., 1, 0] = np.conj(f[..., 0, 1])
    nu[..., 0, 0], nu[..., 0, 1], nu[..., 1, 1] = a11 - b11, a12 - b12, a22 - b22
    nu[..., 1, 0] = np.conj(nu[..., 0, 1])
    return f, nu


def lift_matrices_charted(g, gs, log_u) -> tuple[np.ndarray, np.ndarray]:
    """Like :func:`lift_matrices`, switching pointwise to a chart where ``G`` and ``G*`` are moderate.

    ``log_u`` must be finite at the input points; this is the path used when
    no exact primitive is available.
    """
    g = np.asarray(g, dtype=complex).ravel()
    gs = np.asarray(gs, dtype=complex).ravel()
    log_u = np.asarray(log_u, dtype=float).ravel()
    f = np.empty((len(g), 2, 2), dtype=complex)
    nu = np.empty_like(f)
    badness, moved = [], []
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for a in _CHARTS:
            (a11, a12), (a21, a22) = [[complex(x) for x in row] for row in a]
            den, den_s = a21 * g + a22, a21 * gs + a22
            gt, gst = (a11 * g + a12) / den, (a11 * gs + a12) / den_s
            # values at infinity map to a11/a21
            if a21:
                gt = np.where(np.isinf(g), a11 / a21, gt)
                gst = np.where(np.isinf(gs), a11 / a21, gst)
            moved.append((gt, gst, den))
            badness.append(np.nan_to_num(np.maximum(np.abs(gt), np.abs(gst)), nan=np.inf))
    badness = np.array(badness)
    choice = np.where(badness[0] <= _CHART_SWITCH, 0, np.argmin(badness, axis=0))
    for k in np.unique(choice):
        idx = np.nonzero(choice == k)[0]
        gt, gst, den = (m[idx] for m in moved[k])
        if k == 0:
            f[idx], nu[idx] = lift_matrices(gt, gst, log_u[idx])
            continue
        a = _CHARTS[k]
        det_abs = float(_exact_sqrt(_matrix_det(a).norm()))
        with np.errstate(divide="ignore", invalid="ignore"):
            lt = log_u[idx] + math.log(det_abs) - 2 * np.log(np.abs(den))
        fk, nk = lift_matrices(gt, gst, lt)
        (a11, a12), (a21, a22) = [[complex(x) for x in row] for row in a]
        adj = np.array([[a22, -a12], [-a21, a11]], dtype=complex)
        f[idx] = congruence(adj, fk) / det_abs
        nu[idx] = congruence(adj, nk) / det_abs
    return f, nu


@lru_cache(maxsize=64)
def _evaluator(spec: FrontSpec) -> _Evaluator:
    return _Evaluator(spec)


def _require_period(spec: FrontSpec) -> None:
    # building the identity chart raises PeriodConditionError on a bad residue
    _evaluator(spec).chart(0)


def xi_log_modulus(spec: FrontSpec, z) -> float | np.ndarray:
    """``L(z) = log |xi(z)|^2``."""
    _require_period(spec)
    arr = np.asarray(z, dtype=complex)
    out = _evaluator(spec).log_u(arr.ravel()).reshape(arr.shape)
    if arr.ndim == 0:
        value = float(out)
        if not math.isfinite(value):
            raise FrontError(f"{z} is a singular point of the primitive")
        return value
    return out


@dataclass(frozen=True)
class FrontPoint:
    f: HermitianPoint
    nu: HermitianPoint
    ball: np.ndarray


def front_matrices(spec: FrontSpec, z, t: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(f_t, nu_t)`` as stacks of 2x2 Hermitian matrices."""
    _require_period(spec)
    return _evaluator(spec).matrices(np.asarray(z, dtype=complex), t)


def evaluate_front(spec: FrontSpec, z, t: float = 0.0) -> FrontPoint:
    """Point of the parallel front ``f_t`` and its unit normal at ``z``."""
    z = complex(z)
    for e in spec.ends:
        if e is not INF and abs(complex(e) - z) == 0:
            raise FrontError(f"{z} is an end")
    f, nu = front_matrices(spec, np.array([z]), t)
    if not (np.all(np.isfinite(f)) and np.all(np.isfinite(nu))):
        raise FrontError(f"front is not defined at {z}")
    fp = HermitianPoint.from_matrix(f[0])
    return FrontPoint(fp, HermitianPoint.from_matrix(nu[0]), fp.to_ball())


def ball_points(f: np.ndarray) -> np.ndarray:
    return to_ball(coords_from_matrices(f))


# Canonical data ----------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalData:
    """``omega = omega_factor * xi^-2 dz``, ``theta = theta_factor * xi^2 dz``, ``Q = hopf dz^2``."""

    omega_factor: RationalMap
    theta_factor: RationalMap
    hopf: RationalMap
    omega_xi_power: int = -2
    theta_xi_power: int = 2


def canonical_data(spec: FrontSpec) -> CanonicalData:
    g, gs = spec.gauss, spec.gauss_star
    diff = g - gs
    omega = -g.derivative()
    theta = gs.derivative() / (diff * diff)
    hopf = -(g.derivative() * gs.derivative()) / (diff * diff)
    return CanonicalData(omega, theta, hopf)


def log_rho_sq(spec: FrontSpec, z) -> np.ndarray:
    """``log |rho|^2`` with ``rho = theta / omega``; ``-inf`` where ``rho`` vanishes."""
    z = np.asarray(z, dtype=complex)
    g, gs = spec.gauss, spec.gauss_star
    with np.errstate(divide="ignore", invalid="ignore"):
        if gs.is_constant:
            return np.full(z.shape, -np.inf)
        lu = xi_log_modulus(spec, z.ravel()).reshape(z.shape) if z.ndim else xi_log_modulus(spec, z)
        dg = g.derivative()(z)
        dgs = gs.derivative()(z)
        diff = g(z) - gs(z)
        return 4 * lu + 2 * np.log(np.abs(dgs)) - 2 * np.log(np.abs(dg)) - 4 * np.log(np.abs(diff))


# Ends ---------------------------------------------------------------------------


def _form_order(r: RationalMap, p: Point, weight: int) -> int:
    """Order of ``r dz^weight`` at ``p`` (the ``w = 1/z`` chart adds ``-2 weight`` at infinity)."""
    if p is INF:
        return order_at(r, INF) - 2 * weight
    return order_at(r, p)


@dataclass(frozen=True)
class EndRecord:
    point: Point
    ord_q: int | None
    regular: bool
    complete_by_pole: bool
    gauss_value: Point
    gauss_star_value: Point
    values_agree: bool
    q_at_most_double_pole: bool
    gauss_meromorphic: bool
    gauss_star_meromorphic: bool
    complete_by_metric: bool | None = None


@dataclass(frozen=True)
class OssermanSummary:
    d: int
    dstar: int
    k: int
    all_regular: bool
    complete: bool
    holds: bool
    equality: bool
    embedded: bool


def _metric_exponent(spec: FrontSpec, p: Point, report: PeriodReport, derivs) -> bool | None:
    """Whether ``|omega|^2 + |theta|^2`` has infinite area near ``p``.

    Near ``p`` one has ``|xi|^2 ~ |z - p|^(2r)`` with ``r`` the (real) residue of
    ``eta``; that is only valid when ``eta`` has at most a simple pole there.
    """
    eta = spec.eta
    if not eta.coefficient.is_zero and eta.order_at(p) < -1:
        return None
    r = float(complex(report.residue_at(p)).real)
    dg, dgs, diff = derivs
    exps = []
    if dg is not None:
        exps.append(_form_order(dg, p, 1) - 2 * r)
    if dgs is not None:
        exps.append(2 * r + _form_order(dgs, p, 1) - 2 * order_at(diff, p))
    return min(exps) <= -1 if exps else None


def classify_ends(spec: FrontSpec) -> tuple[list[EndRecord], OssermanSummary]:
    hopf = canonical_data(spec).hopf
    report = period_check(spec.gauss, spec.gauss_star)
    g, gs = spec.gauss, spec.gauss_star
    derivs = (
        None if g.is_constant else g.derivative(),
        None if gs.is_constant else gs.derivative(),
        g - gs,
    )
    records = []
    for p in spec.ends:
        ord_q = None if hopf.is_zero else _form_order(hopf, p, 2)
        q_ok = ord_q is None or ord_q >= -2
        gv, gsv = evaluate(spec.gauss, p), evaluate(spec.gauss_star, p)
        records.append(
            EndRecord(
                point=p,
                ord_q=ord_q,
                regular=q_ok,
                complete_by_pole=ord_q is not None and -2 <= ord_q <= -1,
                gauss_value=gv,
                gauss_star_value=gsv,
                values_agree=same_point(gv, gsv),
                q_at_most_double_pole=q_ok,
                # rational maps extend meromorphically over every puncture
                gauss_meromorphic=True,
                gauss_star_meromorphic=True,
                complete_by_metric=_metric_exponent(spec, p, report, derivs) if report.verdict else None,
            )
        )
    d = 0 if spec.gauss.is_constant else spec.gauss.degree
    ds = 0 if spec.gauss_star.is_constant else spec.gauss_star.degree
    k = len(spec.ends)
    all_regular = all(r.regular for r in records)
    summary = OssermanSummary(
        d=d,
        dstar=ds,
        k=k,
        all_regular=all_regular,
        complete=all(r.complete_by_pole for r in records),
        holds=d + ds >= k,
        equality=d + ds == k,
        embedded=all_regular and d + ds == k,
    )
    return records, summary


# Motions and duality -----------------------------------------------------------


def apply_motion(a, target):
    """Rigid motion by ``a`` in ``SL(2, C)``.

    A :class:`FrontSpec` needs an exact matrix and maps to the spec whose front
    is ``a f a*``; Hermitian points and matrix stacks are congruenced directly.
    """
    if isinstance(target, FrontSpec):
        det = _matrix_det(a)
        if det != 1:
            raise FrontError(f"motion must have determinant 1, got {det}")
        return FrontSpec(
            target.gauss.mobius(a),
            target.gauss_star.mobius(a),
            _transformed_scale(target, a),
            target.genus,
            target.ends,
        )
    m = np.asarray([[complex(x) for x in row] for row in a], dtype=complex)
    if abs(np.linalg.det(m) - 1) > 1e-12:
        raise FrontError("motion must have determinant 1")
    if isinstance(target, HermitianPoint):
        return target.congruence(m)
    return congruence(m, np.asarray(target, dtype=complex))


def dual(spec: FrontSpec) -> FrontSpec:
    """Swap ``G`` and ``G*``; the scale is chosen so the front itself is unchanged.

    With ``E' = E [[0, i], [i, 0]]`` one gets ``|xi'|^2 = |G - G*|^2 / |xi|^2``;
    comparing canonical primitives gives ``|c'|^2 = N(lc(G - G*)) / |c|^2``.
    """
    lead = (spec.gauss - spec.gauss_star).leading.norm()
    s = spec.scale_sq
    new_scale = lead / s if isinstance(s, Fraction) else float(lead) / s
    return FrontSpec(spec.gauss_star, spec.gauss, new_scale, spec.genus, spec.ends)


def singular_locus(spec: FrontSpec, plan, resolution: int = 256):
    """Preimage of the singular set, ``|rho| = 1``, sampled on ``plan``."""
    from .mesh import singular_locus as _locus

    return _locus(spec, plan, resolution)
