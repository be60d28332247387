from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatfronts.algebra import GaussianRational, RationalMap
from flatfronts.expr import parse_rational
from flatfronts.front import (
    FrontError,
    FrontSpec,
    PeriodConditionError,
    apply_motion,
    canonical_data,
    classify_ends,
    dual,
    evaluate_front,
    front_condition,
    front_matrices,
    log_rho_sq,
    period_check,
    xi_log_modulus,
)
from flatfronts.hyperbolic import coords_from_matrices, lorentz
from flatfronts.sphere import INF

Z = RationalMap.identity()
G1 = GaussianRational(1)


def k1(a=2):
    a = GaussianRational.coerce(a)
    return FrontSpec.build(Z * Z, Z * (Z + a) / (a * Z + 1))


def k2():
    return FrontSpec.build(Z**3, Z * (Z + 6) / (2 * Z + 5))


SPECS = {
    "revolution": lambda: FrontSpec.build(Z, Z / 3),
    "kuy": lambda: FrontSpec.build(Z, Z * Z),
    "k1": k1,
    "k2": k2,
}

sample_z = st.complex_numbers(min_magnitude=0.2, max_magnitude=4, allow_nan=False, allow_infinity=False)
sample_t = st.floats(min_value=-1, max_value=1, allow_nan=False)


def _away_from_ends(spec, z, margin=0.05):
    return all(e is INF or abs(complex(e) - z) > margin for e in spec.ends)


def test_horosphere_point():
    spec = FrontSpec.build(Z, RationalMap.constant(0))
    p = evaluate_front(spec, 1)
    assert np.allclose(p.f.coords, (1.5, 1.0, 0.0, -0.5), atol=1e-14)
    assert spec.is_horosphere
    assert spec.ends == (GaussianRational(0),)


@pytest.mark.parametrize("name", list(SPECS))
@settings(max_examples=25, deadline=None)
@given(z=sample_z, t=sample_t)
def test_determinants(name, z, t):
    spec = SPECS[name]()
    if not _away_from_ends(spec, z):
        return
    f, nu = front_matrices(spec, np.array([z]), t)
    assert abs(np.linalg.det(f[0]) - 1) < 1e-9
    assert abs(np.linalg.det(nu[0]) + 1) < 1e-9


@pytest.mark.parametrize("name", list(SPECS))
def test_null_directions_are_the_gauss_maps(name):
    # f + nu and f - nu are null with projective classes (G, 1) and (G*, 1)
    spec = SPECS[name]()
    z = np.array([0.3 + 0.7j, -1.2 + 0.4j, 2.1 - 0.9j])
    f, nu = front_matrices(spec, z, 0.0)
    plus, minus = f + nu, f - nu
    assert np.max(np.abs(np.linalg.det(plus))) < 1e-9
    assert np.allclose(plus[:, 0, 1] / plus[:, 1, 1], spec.gauss(z), rtol=1e-9)
    assert np.allclose(minus[:, 0, 1] / minus[:, 1, 1], spec.gauss_star(z), rtol=1e-9)


@pytest.mark.parametrize("name", list(SPECS))
def test_area_density_matches_rho(name):
    # the induced area element is |omega|^2 |1 - |rho|^2|, so it vanishes on |rho| = 1
    spec = SPECS[name]()
    z = np.array([0.3 + 0.7j, -1.2 + 0.4j, 2.1 - 0.9j])
    h = 1e-6
    fx = (front_matrices(spec, z + h)[0] - front_matrices(spec, z - h)[0]) / (2 * h)
    fy = (front_matrices(spec, z + 1j * h)[0] - front_matrices(spec, z - 1j * h)[0]) / (2 * h)
    x, y = coords_from_matrices(fx), coords_from_matrices(fy)
    area = np.sqrt(np.abs(lorentz(x, x) * lorentz(y, y) - lorentz(x, y) ** 2))
    omega_sq = np.abs(spec.gauss.derivative()(z)) ** 2 * np.exp(-2 * xi_log_modulus(spec, z))
    expected = omega_sq * np.abs(1 - np.exp(log_rho_sq(spec, z)))
    assert np.allclose(area, expected, rtol=1e-5)


@pytest.mark.parametrize("name", list(SPECS))
def test_normal_is_orthogonal_to_tangent(name):
    spec = SPECS[name]()
    z = np.array([0.4 + 0.9j, -0.7 - 1.3j])
    h = 1e-6
    for t in (0.0, 0.6):
        _, nu = front_matrices(spec, z, t)
        for step in (h, 1j * h):
            df = (front_matrices(spec, z + step, t)[0] - front_matrices(spec, z - step, t)[0]) / (2 * h)
            inner = lorentz(coords_from_matrices(df), coords_from_matrices(nu))
            assert np.max(np.abs(inner)) < 1e-6


def test_charts_agree_near_poles_of_g():
    spec = k1()
    z = np.array([1e3 + 1e3j, -0.5 + 1e-4j])
    f, _ = front_matrices(spec, z)
    assert np.all(np.isfinite(f))
    assert np.allclose(np.linalg.det(f), 1, atol=1e-8)


def test_k1_residues_and_log_scale():
    rep = period_check(Z * Z, Z * (Z + 2) / (2 * Z + 1))
    assert rep.verdict
    assert rep.residue_at(G1) == Fraction(3, 2)
    assert rep.residue_at(GaussianRational(-1)) == Fraction(1, 2)
    assert rep.residue_at(INF) == -2
    assert abs(xi_log_modulus(k1(), 2.0) - np.log(3)) < 1e-12


def test_period_failure_is_reported_and_raised():
    spec = k1(GaussianRational(1, 1))
    rep = period_check(spec.gauss, spec.gauss_star)
    assert not rep.verdict
    assert rep.residue_at(G1) == GaussianRational(2, 1) / GaussianRational(1, 1)
    with pytest.raises(PeriodConditionError):
        front_matrices(spec, np.array([0.5j]))


def test_invalid_specs():
    with pytest.raises(FrontError):
        FrontSpec.build(Z, Z)
    with pytest.raises(FrontError):
        FrontSpec.build(RationalMap.constant(1), RationalMap.constant(2))
    with pytest.raises(FrontError):
        FrontSpec.build(Z, 2 * Z, scale=0)


def test_dual_is_involution_with_same_front():
    spec = k1()
    d = dual(spec)
    assert dual(d) == spec
    z = np.array([0.3 + 0.2j, 1.7 - 0.4j])
    f, nu = front_matrices(spec, z)
    fd, nud = front_matrices(d, z)
    assert np.allclose(f, fd, atol=1e-12)
    assert np.allclose(nu, -nud, atol=1e-12)


def test_motion_equivariance():
    spec = k1()
    a = [[GaussianRational(1), GaussianRational(1, 2)], [GaussianRational(0), GaussianRational(1)]]
    moved = apply_motion(a, spec)
    z = np.array([0.3 + 0.2j, 1.7 - 0.4j, -2 + 1j])
    f, nu = front_matrices(spec, z, 0.4)
    fm, num = front_matrices(moved, z, 0.4)
    assert np.allclose(apply_motion(a, f), fm, atol=1e-9)
    assert np.allclose(apply_motion(a, nu), num, atol=1e-9)


def test_phase_of_scale_is_invisible():
    z = np.array([0.3 + 0.2j, 1.7 - 0.4j])
    g, gs = Z * Z, Z * (Z + 2) / (2 * Z + 1)
    ref = front_matrices(FrontSpec.build(g, gs, "5"), z, 0.3)
    for c in ("3+4*i", "5*i", "-5", "4-3*i"):
        out = front_matrices(FrontSpec.build(g, gs, c), z, 0.3)
        assert np.array_equal(out[0], ref[0]) and np.array_equal(out[1], ref[1])


def test_k1_end_classification():
    records, summary = classify_ends(k1())
    assert [r.point for r in records] == [GaussianRational(-1), GaussianRational(0), G1, INF]
    assert [r.ord_q for r in records] == [-2, -1, -2, -1]
    assert all(r.regular and r.complete_by_pole for r in records)
    assert (summary.d, summary.dstar, summary.k) == (2, 2, 4)
    assert summary.embedded


def test_k2_hopf_differential():
    q = canonical_data(k2()).hopf
    expected = parse_rational("-(3/2)*(z^2+5*z+15)") / parse_rational("(z-1)^2*(z+2)^2*(z+3/2)^2")
    assert q == expected


def test_hopf_of_revolution_family():
    spec = FrontSpec.build(Z, Z / 3)
    assert canonical_data(spec).hopf == parse_rational("(-3/4)/z^2")


def test_front_condition_ignores_branch_points_at_ends():
    # G = z^2 and G* = z^2 + z^3 are both branched at 0, which is an end
    spec = FrontSpec.build(Z * Z, Z * Z + Z**3)
    assert front_condition(spec.gauss, spec.gauss_star, spec.ends).holds
    assert not front_condition(spec.gauss, spec.gauss_star).holds


def test_common_branch_point_off_the_ends_fails():
    # both maps are branched at 0 but G(0) = 0 and G*(0) = 1
    g = Z * Z / (Z - 2)
    gs = 1 / (Z * Z + 1)
    spec = FrontSpec.build(g, gs)
    cond = front_condition(g, gs, spec.ends)
    assert not cond.holds
    assert cond.witness == GaussianRational(0)
