from fractions import Fraction as F

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from spinchain.basis import ChainSpec
from spinchain.errors import UnsupportedSizeError
from spinchain.oracle import rs_corrections
from spinchain.perturbation import (SERIES_COEFFS, coefficient_rows, correction, corrections,
                                    derived_coefficients, ground_energy, leading_coefficient,
                                    pfeuty_reference, series_e0_ratio, series_e0_ratio_exact)
from spinchain.single_spin import FieldParams


@pytest.mark.parametrize("n", [5, 7, 12])
def test_transverse_limit(n):
    J = 0.3
    c = corrections(ChainSpec(n), FieldParams(1, 0, 0, J))
    assert c.e1 == 0 and c.e3 == 0
    assert c.e2 == pytest.approx(-n * J ** 2 / 32, rel=1e-15)
    assert c.e4 == pytest.approx(-n * J ** 4 / 2048, rel=1e-15)


def test_longitudinal_limit():
    J = 0.3
    c = corrections(ChainSpec(6), FieldParams(0, 0, 2, J))
    assert c.e1 == pytest.approx(-6 * J / 4)
    assert c.e2 == c.e3 == c.e4 == 0
    assert c.total == pytest.approx(-6 - 6 * J / 4)
    assert ground_energy(ChainSpec(6), FieldParams(0, 0, 2, J)) == c.total


def test_matches_numeric_sums_n6():
    chain = ChainSpec(6)
    p = FieldParams(1, 0, 1, 0.05)
    r = rs_corrections(chain, p)
    for m in range(1, 5):
        assert correction(m, chain, p) == pytest.approx(r.order(m), rel=1e-12)


@settings(max_examples=10)
@given(st.integers(5, 7), st.floats(0.1, 4), st.floats(0, 4), st.floats(0.1, 4), st.floats(0.01, 2))
def test_matches_numeric_sums_random(n, hx, hy, hz, J):
    chain = ChainSpec(n)
    p = FieldParams(hx, hy, hz, J)
    r = rs_corrections(chain, p)
    for m in range(1, 5):
        want = r.order(m)
        assert abs(correction(m, chain, p) - want) <= 1e-11 * abs(want) + 1e-13 * p.J ** m / p.h ** (m - 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_small_chains_refused(n):
    with pytest.raises(UnsupportedSizeError):
        correction(1, ChainSpec(n), FieldParams(1, 0, 0, 0.1))


def test_bad_order():
    with pytest.raises(ValueError):
        correction(5, ChainSpec(6), FieldParams(1, 0, 0, 0.1))


@given(st.integers(5, 12), st.floats(0.01, 4), st.floats(0, 4), st.floats(0.01, 4), st.floats(0.001, 3))
def test_exact_scaling(n, hx, hy, hz, J):
    p = FieldParams(hx, hy, hz, J)
    for m in range(1, 5):
        base = correction(m, ChainSpec(n), p)
        assert correction(m, ChainSpec(n), p.with_J(2 * J)) == 2 ** m * base
        assert correction(m, ChainSpec(2 * n), p) == 2 * base


def test_series_examples():
    assert series_e0_ratio(0.0, 0.6, 0.8) == 1
    for z in (0.1, 0.5, 1.0):
        assert series_e0_ratio(z, 0.0, 1.0) == pytest.approx(1 + z ** 2 / 64 + z ** 4 / 16384, rel=1e-15)
    assert series_e0_ratio(0.4, 1.0, 0.0) == pytest.approx(1.1)
    with pytest.raises(ValueError):
        series_e0_ratio(0.1, 0.5, 0.5)


def test_pfeuty_reference():
    assert pfeuty_reference(0) == 1
    assert pfeuty_reference(F(1)) == 1 + F(1, 64) + F(1, 16384)
    with pytest.raises(ValueError):
        pfeuty_reference(-0.1)


@pytest.mark.parametrize("z", [F(0), F(1, 10), F(1, 3), F(1), F(7, 2)])
def test_series_equals_pfeuty_exactly(z):
    assert series_e0_ratio_exact(z, F(1)) == pfeuty_reference(z)


@given(st.integers(5, 12), st.floats(0, 2 * np.pi), st.floats(0.01, 3), st.floats(0.001, 1.5))
def test_series_matches_corrections(n, theta, h, z):
    f, g = abs(np.cos(theta)), abs(np.sin(theta))
    f, g = f / np.hypot(f, g), g / np.hypot(f, g)
    p = FieldParams(h * g, 0.0, h * f, z * h / 2)
    total = corrections(ChainSpec(n), p).total
    eps0 = -p.h / 2
    got = eps0 * n * series_e0_ratio(z, p.f, p.g)
    assert got == pytest.approx(total, rel=1e-12)


def test_coefficient_table():
    expected = {
        (2, 0): F(1, 8), (2, 1): F(7, 64),
        (3, 0): F(1, 16), (3, 1): F(39, 256), (3, 2): F(23, 256),
        (4, 0): F(1, 32), (4, 1): F(151, 1024), (4, 2): F(161, 768), (4, 3): F(4589, 49152),
    }
    assert SERIES_COEFFS == expected
    assert all(c > 0 for c in SERIES_COEFFS.values())
    assert [leading_coefficient(m) for m in (2, 3, 4)] == [F(1, 8), F(1, 16), F(1, 32)]
    assert (4, 3, 4589, 49152) in coefficient_rows()
    assert coefficient_rows() == sorted(coefficient_rows())


def test_coefficients_recovered_from_corrections():
    assert derived_coefficients() == SERIES_COEFFS


def test_coefficients_sympy_reexpansion():
    """Independent re-expansion of the correction formulas with f^2 = 1 - g^2."""
    N, J, h, g2 = sp.symbols("N J h g2", positive=True)
    f2 = 1 - g2
    R = sp.Rational
    E = {
        1: -N * f2 * J / 4,
        2: -N * f2 * g2 * J ** 2 / (4 * h) - N * g2 ** 2 * J ** 2 / (32 * h),
        3: -R(7, 64) * N * f2 * g2 ** 2 * J ** 3 / h ** 2 + N * f2 ** 2 * g2 * J ** 3 / (4 * h ** 2),
        4: (-R(13, 192) * N * f2 * g2 ** 3 + R(55, 128) * N * f2 ** 2 * g2 ** 2
            - N * f2 ** 3 * g2 / 4 - N * g2 ** 4 / 2048) * J ** 4 / h ** 3,
    }
    z = sp.symbols("z", positive=True)
    eps0 = -h / 2
    for m in range(2, 5):
        ratio = sp.expand(sp.simplify((E[m] / (N * eps0)).subs(J, z * h / 2) / z ** m))
        poly = sp.Poly(ratio, g2)
        assert poly.coeff_monomial(1) == 0
        for k in range(m):
            want = (-1) ** (m - k) * sp.Rational(SERIES_COEFFS[(m, k)].numerator,
                                                 SERIES_COEFFS[(m, k)].denominator)
            assert poly.coeff_monomial(g2 ** (k + 1)) == want
    first = sp.expand((E[1] / (N * eps0)).subs(J, z * h / 2))
    assert sp.simplify(first - (1 - g2) * z / 4) == 0
