from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _strategies import gaussian, nonzero_gaussian, polynomials, rational_maps
from flatfronts.algebra import (
    GaussianRational,
    Polynomial,
    RationalMap,
    numeric_roots,
    partial_fractions,
    poly_gcd,
    roots,
    squarefree_decomposition,
)


@given(gaussian, gaussian, nonzero_gaussian)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) / c * c == a * b
    assert a - a == GaussianRational(0)
    assert (a * c).norm() == a.norm() * c.norm()


def test_gaussian_formatting():
    assert str(GaussianRational(Fraction(3, 2), Fraction(-1, 2))) == "3/2-1/2*i"
    assert str(GaussianRational(0, 1)) == "i"
    assert str(GaussianRational(-2)) == "-2"


@given(polynomials(4, 1), polynomials(3, 1), polynomials(2, 1))
def test_gcd_divides_and_recovers_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert (a * c).exact_div(g) * g == a * c
    assert (b * c).exact_div(g) * g == b * c
    # c divides the gcd
    q = g.exact_div(poly_gcd(g, c))
    assert poly_gcd(q * poly_gcd(g, c), c).degree >= c.degree


@given(polynomials(3, 1), polynomials(2, 1))
def test_squarefree_decomposition_reconstructs(a, b):
    p = a * a * b
    prod = Polynomial.constant(1)
    for factor, mult in squarefree_decomposition(p):
        prod = prod * factor**mult
    assert prod.monic() == p.monic()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(gaussian, st.integers(1, 3)), min_size=1, max_size=4, unique_by=lambda t: t[0]))
def test_exact_roots_recovered_with_multiplicity(spec):
    p = Polynomial.constant(1)
    for r, m in spec:
        p = p * Polynomial.from_roots([r] * m)
    found = dict(roots(p))
    assert found == {r: m for r, m in spec}


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False), min_size=1, max_size=7))
def test_numeric_roots_match_numpy(rs):
    coeffs = np.poly(rs)[::-1]
    mine = np.sort_complex(np.array(numeric_roots(coeffs)))
    ref = np.sort_complex(np.roots(coeffs[::-1]))
    # compare as multisets via the residual of each root in the other's product
    for z in mine:
        assert np.min(np.abs(ref - z)) < 1e-4 * (1 + abs(z))


@settings(max_examples=60, deadline=None)
@given(rational_maps(4), gaussian)
def test_partial_fractions_resum(r, z):
    if not r.den(z):
        return
    pf = partial_fractions(r)
    if all(t.exact for t in pf.terms):
        assert pf(z) == r(z)
    else:
        assert abs(complex(pf(complex(z))) - complex(r(z))) < 1e-8 * (1 + abs(complex(r(z))))


def test_partial_fractions_known_case():
    # 1/(z^2 - 1) = (1/2)/(z-1) - (1/2)/(z+1)
    r = RationalMap(Polynomial.constant(1), Polynomial((-1, 0, 1)))
    res = partial_fractions(r).residues()
    assert res == {GaussianRational(1): Fraction(1, 2), GaussianRational(-1): Fraction(-1, 2)}


def test_rational_map_is_reduced():
    z = RationalMap.identity()
    r = (z * z - 1) / (z - 1)
    assert r == z + 1
    assert r.den == Polynomial.constant(1)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalMap(Polynomial.constant(1), Polynomial())
