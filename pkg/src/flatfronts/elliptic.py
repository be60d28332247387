"""Weierstrass functions on the square torus C / (Z + iZ) and a torus front.

``wp`` is evaluated through the odd Jacobi theta function with nome
``q = exp(-pi)``:

    wp(z) = pi^2 (theta1'''(0) / (3 theta1'(0)) - (log theta1)''(pi z)),

after reducing ``z`` into the fundamental cell so that the theta series
converges in a handful of terms.  ``g3 = 0`` on this lattice, hence
``wp'^2 = 4 wp (wp^2 - a^2)`` with ``a = wp(1/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .expr import EllipticExpr, parse_function
from .front import lift_matrices_charted
from .hyperbolic import to_ball, coords_from_matrices

NOME = math.exp(-math.pi)
_TERMS = 10
_N = np.arange(_TERMS)
_K = 2 * _N + 1
_W = 2.0 * (-1.0) ** _N * NOME ** ((_N + 0.5) ** 2)

PERIOD_TOL = 1e-6
IDENTITY_TOL = 1e-7


class EllipticError(ValueError):
    pass


def reduce_to_cell(z):
    """Representative of ``z`` modulo the lattice with real and imaginary parts in ``[-1/2, 1/2]``."""
    z = np.asarray(z, dtype=complex)
    return z - np.round(z.real) - 1j * np.round(z.imag)


def _theta_derivs(v: np.ndarray):
    """``theta1`` and its first three derivatives in ``v``."""
    kv = v[..., None] * _K
    s, c = np.sin(kv), np.cos(kv)
    th0 = np.sum(_W * s, axis=-1)
    th1 = np.sum(_W * _K * c, axis=-1)
    th2 = -np.sum(_W * _K**2 * s, axis=-1)
    th3 = -np.sum(_W * _K**3 * c, axis=-1)
    return th0, th1, th2, th3


_TH1_0 = float(np.sum(_W * _K))
_TH3_0 = float(-np.sum(_W * _K**3))
_SHIFT = _TH3_0 / (3 * _TH1_0)


def wp_eval(z):
    """``(wp(z), wp'(z))``; a scalar lattice point raises, array entries there become nan."""
    z = reduce_to_cell(z)
    poles = z == 0
    if np.any(poles):
        if z.ndim == 0:
            raise EllipticError("wp has a pole at lattice points")
        z = np.where(poles, np.nan, z)
    th, d1, d2, d3 = _theta_derivs(math.pi * z)
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = d1 / th
        log2 = d2 / th - r1**2
        log3 = d3 / th - 3 * r1 * d2 / th + 2 * r1**3
    wp = math.pi**2 * (_SHIFT - log2)
    wpp = -(math.pi**3) * log3
    if wp.ndim == 0:
        return complex(wp), complex(wpp)
    return wp, wpp


@dataclass(frozen=True)
class SquareTorus:
    """The lattice Z + iZ with ``a = wp(1/2)``, ``g2 = 4 a^2`` and ``g3 = 0``."""

    @cached_property
    def a(self) -> float:
        return wp_eval(0.5)[0].real

    @property
    def g2(self) -> float:
        return 4 * self.a**2

    @property
    def g3(self) -> float:
        return 0.0

    def wp(self, z):
        return wp_eval(z)

    def derivatives(self, z):
        """``wp, wp', wp'', wp'''`` at ``z``."""
        wp, wpp = wp_eval(z)
        return wp, wpp, 6 * wp**2 - self.g2 / 2, 12 * wp * wpp

    def residual(self, z):
        """Relative defect of ``wp'^2 = 4 wp (wp^2 - a^2)``."""
        wp, wpp = wp_eval(z)
        return np.abs(wpp**2 - 4 * wp * (wp**2 - self.a**2)) / (1 + np.abs(wp) ** 3)


TORUS = SquareTorus()


# Integration helpers ---------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _segment_integral(func, z0: complex, z1: complex, panels: int) -> complex:
    """Composite Gauss-Legendre integral of ``func`` along the segment ``z0 -> z1``."""
    edges = np.linspace(0.0, 1.0, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    s = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    pts = z0 + s * (z1 - z0)
    return complex(np.sum(w * func(pts)) * (z1 - z0))


def _segment_distance(z0: complex, z1: complex, points: np.ndarray) -> float:
    """Distance from the segment to the nearest lattice translate of ``points``."""
    if len(points) == 0:
        return math.inf
    d = z1 - z0
    best = math.inf
    for p in points:
        # translates within reach of the segment
        lo = min(z0.real, z1.real) - 1, max(z0.real, z1.real) + 1
        lo_i = min(z0.imag, z1.imag) - 1, max(z0.imag, z1.imag) + 1
        for m in range(math.floor(lo[0] - p.real), math.ceil(lo[1] - p.real) + 1):
            for n in range(math.floor(lo_i[0] - p.imag), math.ceil(lo_i[1] - p.imag) + 1):
                q = p + m + 1j * n
                if d == 0:
                    dist = abs(q - z0)
                else:
                    s = min(1.0, max(0.0, ((q - z0) * d.conjugate()).real / abs(d) ** 2))
                    dist = abs(z0 + s * d - q)
                best = min(best, dist)
    return best


# The torus front ---------------------------------------------------------------


def _cluster_mod_lattice(points: Sequence[complex], tol: float = 1e-7) -> list[complex]:
    out: list[complex] = []
    for p in points:
        p = complex(reduce_to_cell(p))
        if not any(abs(complex(reduce_to_cell(p - q))) < tol for q in out):
            out.append(p)
    return out


def _canonical_rep(p: complex) -> complex:
    """Representative in ``[0, 1)^2`` rounded to kill signed zeros and 1 - eps."""
    x, y = p.real % 1.0, p.imag % 1.0
    x = 0.0 if abs(x) < 1e-12 or abs(x - 1) < 1e-12 else x
    y = 0.0 if abs(y) < 1e-12 or abs(y - 1) < 1e-12 else y
    return complex(x, y)


@dataclass(frozen=True)
class TorusFront:
    """Front on the square torus with Gauss maps written in ``wp`` and ``wp'``.

    ``L = log |xi|^2`` is obtained by numerically integrating ``2 Re eta``
    from ``base``; the additive constant is absorbed into ``scale_sq``.
    """

    gauss: EllipticExpr
    gauss_star: EllipticExpr
    scale_sq: float = 1.0
    end_values: tuple = ()
    base: complex = 0.3 + 0.2j
    torus: SquareTorus = TORUS
    backend: str = "numeric-path"
    source: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_text(cls, g: str, gs: str, end_polynomial_roots: Sequence[complex] = (), scale: float = 1.0):
        return cls(
            parse_function(g),
            parse_function(gs),
            float(abs(scale)) ** 2,
            tuple(end_polynomial_roots),
            source={"gauss": g, "gauss_star": gs},
        )

    def _constants(self):
        return {"a": self.torus.a}

    def maps(self, z):
        """``(G, G', G*, G*')`` at ``z``."""
        wp, wpp, wp2, wp3 = self.torus.derivatives(np.asarray(z, dtype=complex))
        g, dg = self.gauss.evaluate(wp, wpp, wp2, self._constants())
        gs, dgs = self.gauss_star.evaluate(wp, wpp, wp2, self._constants())
        return g, dg, gs, dgs

    def eta(self, z):
        g, dg, gs, _ = self.maps(z)
        with np.errstate(divide="ignore", invalid="ignore"):
            return dg / (g - gs)

    # ends and singular points

    @cached_property
    def ends(self) -> tuple[complex, ...]:
        """Distinct solutions of ``wp = w`` for the declared values ``w``."""
        pts = []
        for w in self.end_values:
            pts.extend(solve_wp(complex(w)))
        reps = (_canonical_rep(_snap_half_period(p)) for p in _cluster_mod_lattice(pts))
        return tuple(sorted(reps, key=lambda p: (p.real, p.imag)))

    @cached_property
    def coincidences(self) -> tuple[complex, ...]:
        """All points of the torus where ``G = G*`` (chordally), by grid scan and Newton refinement."""
        return tuple(sorted((_canonical_rep(p) for p in find_coincidences(self)), key=lambda p: (p.real, p.imag)))

    @property
    def coincidences_outside_ends(self) -> tuple[complex, ...]:
        return tuple(p for p in self.coincidences if not any(abs(complex(reduce_to_cell(p - e))) < 1e-6 for e in self.ends))

    def singular_points(self) -> list[complex]:
        """Points where ``eta`` may blow up: coincidences, lattice points and zeros of ``wp``."""
        return list(self._singular)

    @cached_property
    def _singular(self) -> tuple[complex, ...]:
        pts = list(self.coincidences) + [0j] + list(solve_wp(0j))
        return tuple(_cluster_mod_lattice(pts))

    def excluded_points(self) -> list[complex]:
        """Ends and coincidences, with all lattice translates meeting the unit cell and its neighbours."""
        base = _cluster_mod_lattice(list(self.ends) + list(self.coincidences))
        out = []
        for p in base:
            p = _canonical_rep(p)
            for m in (-1, 0, 1):
                for n in (-1, 0, 1):
                    out.append(p + m + 1j * n)
        return out

    # numeric primitive

    def path_integral(self, z0: complex, z1: complex, avoid: float = 0.02) -> complex:
        """``int eta`` from ``z0`` to ``z1`` along a polygon kept ``avoid`` away from singular points."""
        sing = np.array(self.singular_points(), dtype=complex)
        for path in _candidate_paths(z0, z1):
            dists = [_segment_distance(a, b, sing) for a, b in zip(path[:-1], path[1:])]
            if min(dists) >= avoid:
                total = 0j
                for (a, b), dist in zip(zip(path[:-1], path[1:]), dists):
                    panels = max(2, int(math.ceil(4 * abs(b - a) / dist)))
                    total += _segment_integral(self.eta, a, b, panels)
                return total
        raise EllipticError(f"no admissible integration path from {z0} to {z1}")

    def log_u(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        flat = z.ravel()
        out = np.array([2 * self.path_integral(self.base, complex(p)).real for p in flat])
        return (math.log(self.scale_sq) + out).reshape(z.shape)

    def log_u_grid(self, z: np.ndarray, valid: np.ndarray) -> np.ndarray:
        """``L`` on a rectangular grid by integrating along grid edges between valid vertices."""
        out = np.full(z.shape, np.nan)
        seen = np.zeros(z.shape, dtype=bool)
        ny, nx = z.shape
        for start in zip(*np.nonzero(valid)):
            if seen[start]:
                continue
            out[start] = self.log_u(z[start])
            seen[start] = True
            frontier = [start]
            while frontier:
                # integrate all frontier edges of this generation in one batch
                src, dst = [], []
                for i, j in frontier:
                    for di, dj in ((0, 1), (1, 0), (0, -1), (-1, 0)):
                        a, b = i + di, j + dj
                        if 0 <= a < ny and 0 <= b < nx and valid[a, b] and not seen[a, b]:
                            seen[a, b] = True
                            src.append((i, j))
                            dst.append((a, b))
                if not dst:
                    break
                za = np.array([z[p] for p in src])
                zb = np.array([z[p] for p in dst])
                s = 0.5 * (_GL_NODES[None, :] + 1)
                pts = za[:, None] + s * (zb - za)[:, None]
                incr = 0.5 * np.sum(_GL_WEIGHTS[None, :] * self.eta(pts), axis=1) * (zb - za)
                for p, q, v in zip(src, dst, incr):
                    out[q] = out[p] + 2 * v.real
                frontier = dst
        return out

    # geometry

    def matrices_from_log_u(self, z, log_u, t: float = 0.0):
        g, _, gs, _ = self.maps(z)
        f, nu = lift_matrices_charted(g, gs, log_u)
        if t:
            with np.errstate(invalid="ignore", over="ignore"):
                f, nu = math.cosh(t) * f + math.sinh(t) * nu, math.cosh(t) * nu + math.sinh(t) * f
        shape = np.shape(z)
        return f.reshape(shape + (2, 2)), nu.reshape(shape + (2, 2))

    def _grid_valid(self, z: np.ndarray) -> np.ndarray:
        # keep grid edges at least two spacings away from the singular points of eta
        spacing = max(abs(z[0, 1] - z[0, 0]), abs(z[1, 0] - z[0, 0])) if min(z.shape) > 1 else 0.0
        radius = max(1e-3, 2 * spacing)
        valid = np.ones(z.shape, dtype=bool)
        sing = np.array(self.singular_points(), dtype=complex)
        for p in sing:
            valid &= np.abs(reduce_to_cell(z - p)) > radius
        return valid

    def log_u_on(self, z):
        """``L`` at ``z``: grid integration for 2-d grids, independent paths otherwise."""
        z = np.asarray(z, dtype=complex)
        if z.ndim == 2:
            return self.log_u_grid(z, self._grid_valid(z))
        return self.log_u(z)

    def log_u_polyline(self, line) -> np.ndarray:
        """``L`` along a polyline by chaining short Gauss-Legendre steps."""
        line = np.asarray(line, dtype=complex)
        out = np.empty(len(line))
        if len(line) == 0:
            return out
        out[0] = self.log_u(line[0])
        s = 0.5 * (_GL_NODES + 1)
        za, zb = line[:-1], line[1:]
        pts = za[:, None] + s[None, :] * (zb - za)[:, None]
        incr = 0.5 * np.sum(_GL_WEIGHTS[None, :] * self.eta(pts), axis=1) * (zb - za)
        out[1:] = out[0] + np.cumsum(2 * incr.real)
        return out

    def matrices(self, z, t: float = 0.0):
        z = np.asarray(z, dtype=complex)
        return self.matrices_from_log_u(z, self.log_u_on(z), t)

    def polyline_matrices(self, line, t: float = 0.0):
        line = np.asarray(line, dtype=complex)
        return self.matrices_from_log_u(line, self.log_u_polyline(line), t)

    def log_rho_sq(self, z, log_u=None):
        z = np.asarray(z, dtype=complex)
        if log_u is None:
            log_u = self.log_u_on(z)
        g, dg, gs, dgs = self.maps(z)
        with np.errstate(divide="ignore", invalid="ignore"):
            return 4 * log_u + 2 * np.log(np.abs(dgs)) - 2 * np.log(np.abs(dg)) - 4 * np.log(np.abs(g - gs))

    def ball(self, z, t: float = 0.0):
        f, _ = self.matrices(z, t)
        return to_ball(coords_from_matrices(f))

    def describe(self) -> dict:
        return {
            "gauss": self.gauss.source,
            "gauss_star": self.gauss_star.source,
            "genus": 1,
            "lattice": "Z+iZ",
            "a": self.torus.a,
            "scale_sq": self.scale_sq,
            "ends": [[p.real, p.imag] for p in self.ends],
        }


def _candidate_paths(z0: complex, z1: complex):
    yield [z0, z1]
    d = z1 - z0
    normal = 1j * d / abs(d) if d else 1.0
    for k in (0.1, -0.1, 0.2, -0.2, 0.35, -0.35, 0.5, -0.5):
        mid = 0.5 * (z0 + z1) + k * normal
        yield [z0, mid, z1]
    for a in (0.15 + 0.05j, -0.15 + 0.1j, 0.1 - 0.2j, -0.05 - 0.15j):
        yield [z0, z0 + a, z1 + a, z1]


# Root finding on the torus -------------------------------------------------------


def _newton(func, z: complex, accept, steps: int = 80, tol: float = 1e-14) -> complex | None:
    """Newton iteration on ``h / h'`` (insensitive to multiplicity).

    Returns the last iterate at which ``func`` could be evaluated, provided
    ``accept`` approves it.
    """
    last = None
    for _ in range(steps):
        try:
            h, dh, d2h = func(z)
        except (EllipticError, ZeroDivisionError):
            break
        if not (np.isfinite(h) and np.isfinite(dh) and np.isfinite(d2h)):
            break
        last = z
        denom = dh * dh - h * d2h
        if h == 0 or denom == 0:
            break
        step = h * dh / denom
        if abs(step) < tol:
            break
        z -= step
    if last is None:
        return None
    try:
        return last if accept(last) else None
    except (EllipticError, ZeroDivisionError):
        return None


def solve_wp(w: complex, seeds: int = 12) -> list[complex]:
    """Distinct solutions of ``wp(z) = w`` in the torus."""

    def func(z):
        wp, wpp, wp2, _ = TORUS.derivatives(z)
        return complex(wp) - w, complex(wpp), complex(wp2)

    def critical(z):
        _, wpp, wp2, wp3 = TORUS.derivatives(z)
        return complex(wpp), complex(wp2), complex(wp3)

    def accept(z):
        return abs(complex(wp_eval(z)[0]) - w) <= 1e-7 * (1 + abs(w))

    found = []
    rng = np.random.default_rng(0)
    for s in rng.uniform(0.05, 0.95, size=(seeds, 2)):
        r = _newton(func, complex(s[0], s[1]), accept)
        if r is None:
            continue
        if abs(complex(wp_eval(r)[1])) < 1e-4:
            # multiple root: it is a simple zero of wp', which Newton resolves to full precision
            polished = _newton(critical, r, accept)
            r = polished if polished is not None else r
        found.append(r)
    return _cluster_mod_lattice(found)


def find_coincidences(front: TorusFront, grid: int = 40) -> list[complex]:
    """Points where ``G = G*`` on the sphere, located on a grid and refined by Newton."""

    def chordal(z):
        g, _, gs, _ = front.maps(z)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            d = np.abs(g - gs) / np.sqrt((1 + np.abs(g) ** 2) * (1 + np.abs(gs) ** 2))
            dinv = np.abs(1 / g - 1 / gs) / np.sqrt((1 + np.abs(1 / g) ** 2) * (1 + np.abs(1 / gs) ** 2))
            d = np.where(np.abs(g) > 1, dinv, d)
            return np.nan_to_num(d, nan=1.0)

    xs = (np.arange(grid) + 0.5) / grid
    z = xs[None, :] + 1j * xs[:, None]
    c = chordal(z)
    found = []
    for i in range(grid):
        for j in range(grid):
            nb = [c[(i + di) % grid, (j + dj) % grid] for di in (-1, 0, 1) for dj in (-1, 0, 1)]
            if c[i, j] <= min(nb) and c[i, j] < 0.2:
                seed = complex(reduce_to_cell(z[i, j]))
                r = _newton(lambda w: _hfunc(front, w), seed, lambda w: chordal(np.array([w]))[0] < 1e-6)
                if r is not None:
                    found.append(r)
    return [_snap_half_period(p) for p in _cluster_mod_lattice(found, 1e-6)]


def _snap_half_period(p: complex, tol: float = 1e-7) -> complex:
    """Replace ``p`` by a lattice or half-lattice point when it is that close."""
    q = complex(round(2 * p.real) / 2, round(2 * p.imag) / 2)
    return q if abs(p - q) < tol else p


def _hfunc(front: TorusFront, z: complex):
    """``G - G*``, or ``1/G - 1/G*`` where ``|G| > 1``, with its first two derivatives.

    The second derivative is a central difference of the analytic first one.
    """
    step = 1e-5
    g0 = complex(front.maps(np.array([z]))[0][0])
    inverse = not (np.isfinite(g0) and abs(g0) <= 1)

    def first(w):
        g, dg, gs, dgs = (complex(v[0]) for v in front.maps(np.array([w])))
        if inverse:
            return 1 / g - 1 / gs, -dg / g**2 + dgs / gs**2
        return g - gs, dg - dgs

    with np.errstate(all="ignore"):
        try:
            hv, d1 = first(z)
            d2 = (first(z + step)[1] - first(z - step)[1]) / (2 * step)
        except ZeroDivisionError:
            return complex("nan"), complex("nan"), complex("nan")
    return hv, d1, d2


# Checks -----------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleIntegral:
    start: complex
    direction: complex
    value: complex
    winding: int
    in_lattice: bool


@dataclass(frozen=True)
class TorusPeriodReport:
    cycles: tuple[CycleIntegral, ...]
    identity_max_error: float
    verdict: bool


def torus_period_check(front: TorusFront, resolution: int = 64, samples: int = 100, seed: int = 0) -> TorusPeriodReport:
    """Integrate ``eta`` over both generators and check ``eta = wp'/wp`` at random points."""
    sing = np.array(front.singular_points(), dtype=complex)
    starts = [0.1 + 0.13j, 0.37 + 0.11j, 0.21 + 0.41j, 0.07 + 0.29j, 0.44 + 0.06j]
    cycles = []
    for direction in (1.0 + 0j, 1j):
        for z0 in starts:
            if _segment_distance(z0, z0 + direction, sing) >= 0.03:
                break
        else:
            raise EllipticError("every candidate cycle passes too close to a singular point")
        val = _segment_integral(front.eta, z0, z0 + direction, resolution)
        n = round(val.imag / (2 * math.pi))
        ok = abs(val.real) <= PERIOD_TOL and abs(val.imag - 2 * math.pi * n) <= PERIOD_TOL
        cycles.append(CycleIntegral(z0, direction, val, n, ok))
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 1, samples) + 1j * rng.uniform(0, 1, samples)
    wp, wpp = wp_eval(pts)
    err = np.abs(front.eta(pts) - wpp / wp) / (1 + np.abs(wpp / wp))
    emax = float(np.max(err))
    return TorusPeriodReport(tuple(cycles), emax, all(c.in_lattice for c in cycles) and emax <= IDENTITY_TOL)


def _winding(values: np.ndarray) -> np.ndarray:
    """Winding numbers about 0 of closed sampled loops (last axis)."""
    ang = np.angle(values)
    d = np.diff(np.concatenate([ang, ang[..., :1]], axis=-1), axis=-1)
    d = (d + np.pi) % (2 * np.pi) - np.pi
    return np.rint(d.sum(axis=-1) / (2 * np.pi)).astype(int)


def elliptic_degree(func, probes: int = 5, cells: int = 24, samples: int = 24, seed: int = 0) -> int:
    """Number of solutions of ``F = w`` in a fundamental cell for random regular ``w``.

    ``func`` maps complex arrays to ``F``.  The cell is cut into squares;
    for a random value the zeros and poles of ``F - w`` land in different squares,
    so the positive winding numbers add up to the number of solutions.
    """
    rng = np.random.default_rng(seed)
    counts = []
    attempts = 0
    while len(counts) < probes:
        attempts += 1
        if attempts > 10 * probes:
            raise EllipticError("degree count did not stabilise")
        w = complex(rng.normal(), rng.normal()) * 2
        off = complex(rng.uniform(0, 1), rng.uniform(0, 1))
        h = 1.0 / cells
        corners = off + h * (np.arange(cells)[None, :] + 1j * np.arange(cells)[:, None])
        s = np.arange(samples) / samples
        loop = np.concatenate([s * h, h + 1j * s * h, h + 1j * h - s * h, 1j * h - 1j * s * h])
        pts = corners[..., None] + loop
        with np.errstate(all="ignore"):
            vals = func(pts) - w
        if not np.all(np.isfinite(vals)) or np.min(np.abs(vals)) < 1e-6:
            continue
        # refine: doubling the sampling must not change any winding number
        pts2 = corners[..., None] + np.concatenate(
            [np.arange(2 * samples) / (2 * samples) * h + 0j, h + 1j * np.arange(2 * samples) / (2 * samples) * h,
             h + 1j * h - np.arange(2 * samples) / (2 * samples) * h, 1j * h - 1j * np.arange(2 * samples) / (2 * samples) * h]
        )
        with np.errstate(all="ignore"):
            vals2 = func(pts2) - w
        wind, wind2 = _winding(vals), _winding(vals2)
        if not np.array_equal(wind, wind2):
            continue
        counts.append(int(wind[wind > 0].sum()))
    if len(set(counts)) != 1:
        raise EllipticError(f"unstable degree counts {counts}")
    return counts[0]


def end_count(front: TorusFront) -> int:
    return len(front.ends)


def gauss_degrees(front: TorusFront, probes: int = 5) -> tuple[int, int]:
    def g(z):
        return front.maps(z)[0]

    def gs(z):
        return front.maps(z)[2]

    return elliptic_degree(g, probes), elliptic_degree(gs, probes, seed=1)
