"""Acceptance criteria 1-10.

Each criterion runs under its time budget and records one PASS/FAIL line,
printed at the end of the pytest session (or directly when this file is run
as a script).
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import numpy as np

from _oracle import nu_oracle
from flatfronts import catalog
from flatfronts.algebra import GaussianRational as GR
from flatfronts.algebra import Polynomial, RationalMap
from flatfronts.elliptic import TORUS, end_count, gauss_degrees, torus_period_check
from flatfronts.expr import parse_constant
from flatfronts.front import (
    FrontError,
    FrontSpec,
    apply_motion,
    classify_ends,
    front_condition,
    front_matrices,
    period_check,
)
from flatfronts.hyperbolic import coords_from_matrices, lorentz
from flatfronts.sphere import INF, RationalOneForm, critical_divisor, divisor_degree, poles
from flatfronts.valuedist import corollary_feasibility, totally_ramified, verify_main_theorem

RESULTS: dict[int, str] = {}
Z = RationalMap.identity()


def record(number: int, budget: float):
    """Decorator: time the criterion, check the budget and store its summary line."""

    def wrap(fn):
        def run():
            start = time.perf_counter()
            try:
                detail = fn()
            except AssertionError as exc:
                elapsed = time.perf_counter() - start
                RESULTS[number] = f"criterion {number:2d}: FAIL ({elapsed:.2f} s) {exc}"
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < budget
            status = "PASS" if ok else "FAIL"
            RESULTS[number] = f"criterion {number:2d}: {status} ({elapsed:.2f} s < {budget:g} s) {detail or ''}".rstrip()
            assert ok, f"criterion {number} took {elapsed:.2f} s, budget {budget} s"

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def _residues(g, gs):
    rep = period_check(g, gs)
    return {p.location: p.residue for p in rep.poles}, rep


# 1 -----------------------------------------------------------------------


@record(1, 1.0)
def test_criterion_01_k1_residues():
    """Residues of dG/(G - G*) for the four-end family at three parameter values."""
    for a in ("2", "-3", "1/2"):
        av = parse_constant(a)
        res, rep = _residues(Z * Z, Z * (Z + av) / (av * Z + 1))
        assert rep.verdict
        assert res[GR(1)] == (1 + av) / av, f"a={a} at 1"
        assert res[GR(-1)] == (av - 1) / av, f"a={a} at -1"
        assert res[INF] == -2, f"a={a} at inf"
    return "a in {2, -3, 1/2}"


# 2 -----------------------------------------------------------------------


@record(2, 1.0)
def test_criterion_02_k2_residues():
    res, rep = _residues(Z**3, Z * (Z + 6) / (2 * Z + 5))
    assert rep.verdict
    expected = {GR(1): Fraction(7, 5), GR(-2): -2, GR(Fraction(-3, 2)): Fraction(18, 5), INF: -3}
    for loc, value in expected.items():
        assert res[loc] == value, f"residue at {loc}"
    return "(7/5, -2, 18/5, -3)"


# 3 -----------------------------------------------------------------------


@record(3, 1.0)
def test_criterion_03_k1_hopf_orders():
    spec = catalog.build("k1-four-ends")
    records, summary = classify_ends(spec)
    ords = {r.point: r.ord_q for r in records}
    assert (ords[GR(0)], ords[GR(1)], ords[GR(-1)], ords[INF]) == (-1, -2, -2, -1)
    assert all(r.regular and r.complete_by_pole for r in records)
    assert summary.all_regular and summary.complete
    return "ordQ (0, 1, -1, inf) = (-1, -2, -2, -1)"


# 4 -----------------------------------------------------------------------


@record(4, 10.0)
def test_criterion_04_osserman():
    _, s1 = classify_ends(catalog.build("k1-four-ends"))
    assert (s1.d, s1.dstar, s1.k) == (2, 2, 4) and s1.equality and s1.embedded
    _, s2 = classify_ends(catalog.build("k2-five-ends"))
    assert (s2.d, s2.dstar, s2.k) == (3, 2, 5) and s2.equality and s2.embedded
    torus = catalog.build("k3-torus")
    d, dstar = gauss_degrees(torus)
    k = end_count(torus)
    assert (d + dstar, k) == (6, 5)
    assert d + dstar > k
    return "k1 2+2=4, k2 3+2=5, k3 6>5"


# 5 -----------------------------------------------------------------------


@record(5, 5.0)
def test_criterion_05_totally_ramified():
    k1 = catalog.build("k1-four-ends")
    assert totally_ramified(k1.gauss, k1.ends).nu == 3
    assert totally_ramified(k1.gauss_star, k1.ends).nu == 2
    k2 = catalog.build("k2-five-ends")
    rgs = totally_ramified(k2.gauss_star, k2.ends)
    assert rgs.nu == 1
    assert [r.nu for r in rgs.ramified] == [2, 2]
    ends = [e if e is INF else complex(e) for e in k2.ends]
    oracle, _, _ = nu_oracle(k2.gauss, ends)
    fixture = catalog.get("k2-five-ends").fixture["nu_G"]
    assert totally_ramified(k2.gauss, k2.ends).nu == oracle == fixture.value
    assert fixture.tag == "computed" and fixture.note
    return f"k2 nu_G = {oracle} (brute-force oracle)"


# 6 -----------------------------------------------------------------------


def _random_map(rng: random.Random, max_degree: int) -> RationalMap:
    while True:
        num = Polynomial([GR(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(rng.randint(0, max_degree) + 1)])
        den = Polynomial([GR(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(rng.randint(0, max_degree) + 1)])
        if num.is_zero or den.is_zero:
            continue
        r = RationalMap(num, den)
        if not r.is_constant:
            return r


def random_valid_front(rng: random.Random) -> FrontSpec | None:
    """A front satisfying the period condition by construction.

    Pick ``G`` and a form ``eta`` with simple poles and real residues, then
    ``G* = G - G' / eta`` gives ``dG / (G - G*) = eta``.
    """
    g = _random_map(rng, 2)
    eta = RationalMap.constant(0)
    for _ in range(rng.randint(1, 3)):
        p = GR(rng.randint(-3, 3), rng.randint(-2, 2))
        r = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 2))
        eta = eta + RationalMap.constant(GR(r)) / (Z - p)
    if eta.is_zero:
        return None
    gs = g - g.derivative() / eta
    if gs.is_constant or gs == g or gs.degree > 4 or g.degree > 4:
        return None
    try:
        return FrontSpec.build(g, gs)
    except FrontError:
        return None


@record(6, 60.0)
def test_criterion_06_theorem_property_suite():
    rng = random.Random(20240)
    tuples = 0
    both_large = 0
    attempts = 0
    while tuples < 500:
        attempts += 1
        assert attempts < 5000, "generator could not produce 500 valid fronts"
        spec = random_valid_front(rng)
        if spec is None:
            continue
        if not front_condition(spec.gauss, spec.gauss_star, spec.ends).holds:
            continue
        _, summary = classify_ends(spec)
        if not (summary.complete and summary.all_regular):
            continue
        k = len(spec.ends)
        rg = totally_ramified(spec.gauss, spec.ends)
        rgs = totally_ramified(spec.gauss_star, spec.ends)
        tuples += 1
        chi = 2 * 0 - 2 + k
        for rep, d in ((rg, summary.d), (rgs, summary.dstar)):
            assert rep.nu <= 2 + Fraction(chi, d), f"per-map bound fails for {spec}"
        if rg.nu > 2 and rgs.nu > 2 and chi > 0:
            both_large += 1
            verdict = verify_main_theorem(rg.nu, rgs.nu, 0, k)
            assert verdict.holds, f"inequality fails for {spec}"
    # random draws almost never give both numbers above 2; this front (found by a
    # wider search) does, so the inequality branch is always exercised
    g = RationalMap(Polynomial([GR(1), GR(2), GR(1)]), Polynomial([GR(-1), GR(1)]))
    gs = RationalMap(Polynomial([GR(-1), GR(1), GR(2)]), Polynomial([GR(-1), GR(1)]))
    spec = FrontSpec.build(g, gs)
    assert front_condition(g, gs, spec.ends).holds
    _, summary = classify_ends(spec)
    assert summary.complete and summary.all_regular
    nu_g, nu_gs = totally_ramified(g, spec.ends).nu, totally_ramified(gs, spec.ends).nu
    assert (nu_g, nu_gs) == (nu_oracle(g, spec.ends)[0], nu_oracle(gs, spec.ends)[0])
    verdict = verify_main_theorem(nu_g, nu_gs, 0, len(spec.ends), summary.d, summary.dstar)
    assert verdict.applicable and verdict.holds and all(verdict.nu_bounds.values())
    return f"{tuples} random fronts ({both_large} with both nu > 2) + 1 structured front with nu = {nu_g}, {nu_gs}"


# 7 -----------------------------------------------------------------------

_GENUS0 = ("revolution", "kuy-z-z2", "k1-four-ends", "k2-five-ends")
X0_MAX = 1e3


def _sample(rng, spec, n):
    ends = np.array([complex(e) for e in getattr(spec, "ends") if e is not INF] or [1e9])
    out = []
    while len(out) < n:
        z = complex(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5))
        if np.min(np.abs(ends - z)) > 0.1 and abs(z) > 0.1:
            out.append(z)
    return np.array(out)


def _fd_normal_defect(evaluate, z, t, nu, h: float = 1e-4) -> float:
    # fourth-order central differences; the defect is relative to |df|
    worst = 0.0
    for step in (h, 1j * h):
        pts = np.array([z + 2 * step, z + step, z - step, z - 2 * step])
        f = evaluate(pts, t)
        df = (-f[0] + 8 * f[1] - 8 * f[2] + f[3]) / (12 * h)
        inner = abs(lorentz(coords_from_matrices(df), coords_from_matrices(nu)))
        worst = max(worst, inner / np.linalg.norm(df))
    return worst


@record(7, 30.0)
def test_criterion_07_geometry_invariants():
    rng = np.random.default_rng(7)
    motion = [[GR(1), GR(Fraction(1, 2), 1)], [GR(0), GR(1)]]
    n_points = 0
    worst = {"det_f": 0.0, "det_nu": 0.0, "normal": 0.0, "motion": 0.0}
    # beyond x0 = 1e3 the entries of f are so large that float cancellation alone
    # puts |det f - 1| above 1e-9; there only the error relative to x0^2 is checked
    far_relative = 0.0
    far = 0
    for name in _GENUS0:
        spec = catalog.build(name)
        moved = apply_motion(motion, spec)
        z = []
        while len(z) < 200:
            zi = _sample(rng, spec, 1)[0]
            ti = rng.uniform(-1, 1)
            f, nu = front_matrices(spec, np.array([zi]), ti)
            x0 = float(np.trace(f[0]).real) / 2
            if x0 > X0_MAX:
                far += 1
                far_relative = max(far_relative, abs(np.linalg.det(f[0]) - 1) / x0**2)
                continue
            z.append(zi)
            worst["det_f"] = max(worst["det_f"], abs(np.linalg.det(f[0]) - 1))
            worst["det_nu"] = max(worst["det_nu"], abs(np.linalg.det(nu[0]) + 1))
            worst["normal"] = max(
                worst["normal"], _fd_normal_defect(lambda p, s: front_matrices(spec, p, s)[0], zi, ti, nu[0])
            )
            fm, _ = front_matrices(moved, np.array([zi]), ti)
            worst["motion"] = max(worst["motion"], float(np.max(np.abs(apply_motion(motion, f) - fm))))
        z = np.array(z)
        ref = front_matrices(FrontSpec.build(spec.gauss, spec.gauss_star, "5"), z, 0.25)
        for c in ("3+4*i", "5*i", "-5"):
            out = front_matrices(FrontSpec.build(spec.gauss, spec.gauss_star, c), z, 0.25)
            assert np.array_equal(out[0], ref[0]) and np.array_equal(out[1], ref[1]), f"phase of c changes {name}"
        n_points += len(z)

    torus = catalog.build("k3-torus")
    singular = torus.singular_points()
    zt = []
    while len(zt) < 400:
        w = complex(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95))
        if min(_torus_dist(w, p) for p in singular) > 0.05:
            zt.append(w)
    zt = np.array(zt)
    tt = rng.uniform(-1, 1, len(zt))
    log_u = torus.log_u(zt)
    h = 1e-4
    accepted = 0
    for zi, li, ti in zip(zt, log_u, tt):
        if accepted == 200:
            break
        f, nu = torus.matrices_from_log_u(np.array([zi]), np.array([li]), ti)
        x0 = float(np.trace(f[0]).real) / 2
        if x0 > X0_MAX:
            far += 1
            far_relative = max(far_relative, abs(np.linalg.det(f[0]) - 1) / x0**2)
            continue
        accepted += 1
        worst["det_f"] = max(worst["det_f"], abs(np.linalg.det(f[0]) - 1))
        worst["det_nu"] = max(worst["det_nu"], abs(np.linalg.det(nu[0]) + 1))
        for step in (h, 1j * h):
            # L along the stencil by short Gauss-Legendre steps from the base point
            stencil = zi + step * np.array([0, 2, 1, -1, -2])
            lus = torus.log_u_polyline(np.array([zi, zi + step, zi + 2 * step]))
            lds = torus.log_u_polyline(np.array([zi, zi - step, zi - 2 * step]))
            lu = np.array([li, li - lus[0] + lus[2], li - lus[0] + lus[1], li - lds[0] + lds[1], li - lds[0] + lds[2]])
            fs, _ = torus.matrices_from_log_u(stencil, lu, ti)
            df = (-fs[1] + 8 * fs[2] - 8 * fs[3] + fs[4]) / (12 * h)
            inner = abs(lorentz(coords_from_matrices(df), coords_from_matrices(nu[0])))
            worst["normal"] = max(worst["normal"], inner / np.linalg.norm(df))
    n_points += accepted

    assert far_relative < 1e-13, far_relative
    assert n_points >= 1000, n_points
    assert worst["det_f"] < 1e-9, worst
    assert worst["det_nu"] < 1e-9, worst
    assert worst["normal"] < 1e-6, worst
    assert worst["motion"] < 1e-9, worst
    return (
        f"{n_points} points with x0 <= {X0_MAX:g}, "
        + ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
        + f"; {far} farther points, det error / x0^2 {far_relative:.1e}"
    )


def _torus_dist(w: complex, p: complex) -> float:
    d = w - p
    d -= round(d.real) + 1j * round(d.imag)
    return abs(d)


# 8 -----------------------------------------------------------------------


@record(8, 10.0)
def test_criterion_08_riemann_hurwitz_and_residues():
    rng = random.Random(8)
    for _ in range(200):
        g = _random_map(rng, 6)
        assert divisor_degree(critical_divisor(g)) == 2 * g.degree - 2, f"RH fails for {g}"
    for _ in range(200):
        den = Polynomial.constant(1)
        for _ in range(rng.randint(1, 4)):
            p = GR(Fraction(rng.randint(-6, 6), rng.randint(1, 3)), Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
            den = den * Polynomial.from_roots([p] * rng.randint(1, 2))
        den_deg = den.degree
        num = Polynomial([GR(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(1, 7))])
        if num.is_zero or den_deg > 6:
            continue
        form = RationalOneForm(RationalMap(num, den))
        total = sum((rec.residue for rec in poles(form)), GR(0))
        assert all(isinstance(rec.residue, GR) for rec in poles(form))
        assert total == 0, f"residues of {form} sum to {total}"
    return "200 maps, 200 forms, exact"


# 9 -----------------------------------------------------------------------


@record(9, 60.0)
def test_criterion_09_elliptic_kernel():
    rng = np.random.default_rng(9)
    z = rng.uniform(0.02, 0.98, 100) + 1j * rng.uniform(0.02, 0.98, 100)
    residual = float(np.max(TORUS.residual(z)))
    assert residual < 1e-8
    torus = catalog.build("k3-torus")
    rep = torus_period_check(torus)
    assert rep.verdict
    for c in rep.cycles:
        assert abs(c.value - 2j * np.pi * c.winding) < 1e-6
    assert gauss_degrees(torus) == (2, 4)
    assert end_count(torus) == 5
    return f"residual {residual:.1e}, degrees (2, 4), 5 ends"


# 10 ----------------------------------------------------------------------


@record(10, 1.0)
def test_criterion_10_corollaries():
    assert not corollary_feasibility(0, 4, 4).feasible
    assert not corollary_feasibility(1, 5, 5).feasible
    f = corollary_feasibility(0, 3, 3)
    assert f.feasible and f.min_ends == 4
    f = corollary_feasibility(1, 4, 4)
    assert f.feasible and f.ends_regular_and_embedded
    return "(0,4,4) (1,5,5) infeasible; (0,3,3) k >= 4; (1,4,4) embedded"


def summary_lines() -> list[str]:
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failed += 1
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)
