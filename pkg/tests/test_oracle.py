import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinchain.basis import ChainSpec
from spinchain.errors import NotHermitianError, ResourceLimitError
from spinchain.hamiltonian import build_matrix
from spinchain.oracle import (build_lambda, eigensolve, exact_ground_energy, exchange_expectation,
                              ground_state, product_rotation, rs_corrections)
from spinchain.single_spin import FieldParams


def test_single_site_chain_rejected():
    with pytest.raises(ValueError):
        ChainSpec(1)


def test_n2_pure_exchange():
    # only the exchange part is probed: h = 0 is not a valid FieldParams, so
    # subtract the field contribution of a unit hz field instead
    c = ChainSpec(2)
    with pytest.warns(RuntimeWarning):
        full = build_lambda(c, FieldParams(0, 0, 1, 1)).entries
    with pytest.warns(RuntimeWarning):
        field = build_lambda(c, FieldParams(0, 0, 1, 0)).entries
    w = np.linalg.eigvalsh(full - field)
    assert np.allclose(w, [-0.5, -0.5, 0.5, 0.5], atol=1e-14)


def test_n3_free_longitudinal():
    w = eigensolve(build_lambda(ChainSpec(3), FieldParams(0, 0, 1, 0))).eigenvalues
    assert np.allclose(w, [-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5], atol=1e-14)


def test_lambda_matrix_is_hermitian():
    m = build_lambda(ChainSpec(5), FieldParams(0.3, 1.1, 0.6, 0.8))
    assert m.hermiticity_error() < 1e-14
    assert np.iscomplexobj(m.entries)


def test_product_rotation_unitary():
    c = ChainSpec(4)
    U = product_rotation(c, FieldParams(0.3, 1.1, 0.6))
    assert np.abs(U.conj().T @ U - np.eye(c.dim)).max() < 1e-13


@pytest.mark.parametrize("n", range(2, 11))
def test_free_spectrum_multiset(n):
    p = FieldParams(0.7, 0.4, 1.1, 0.0)
    c = ChainSpec(n)
    w = eigensolve(build_matrix(c, p, "lambda" if n <= 8 else "eps")).eigenvalues
    expect = np.sort(np.concatenate([np.full(math.comb(n, m), p.h * m - n * p.h / 2)
                                     for m in range(n + 1)]))
    assert np.abs(w - expect).max() < 1e-9


def test_eigensolve_two_by_two():
    p = FieldParams(0.3, 0.4, 1.2)
    w = eigensolve(p.field_matrix()).eigenvalues
    assert np.allclose(w, [-p.h / 2, p.h / 2], atol=1e-15)


def test_eigensolve_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        eigensolve(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotHermitianError):
        eigensolve(np.ones((2, 3)))


@settings(max_examples=20)
@given(st.integers(2, 6), st.floats(0.1, 3), st.floats(0, 3), st.floats(0, 3), st.floats(0, 3))
def test_spectrum_invariants(n, hx, hy, hz, J):
    H = build_lambda(ChainSpec(n), FieldParams(hx, hy, hz, J))
    s = eigensolve(H, want_vector=True)
    assert np.all(np.diff(s.eigenvalues) >= 0)
    assert abs(s.eigenvalues.sum() - np.trace(H.entries).real) < 1e-9 * H.dim
    v = s.ground_vector
    assert np.linalg.norm(H.entries @ v - s.ground_energy * v) < 1e-9
    e0, _ = ground_state(H)
    assert abs(e0 - s.ground_energy) < 1e-10


def test_rs_zero_coupling():
    r = rs_corrections(ChainSpec(5), FieldParams(1, 0.2, 0.7, 0.0))
    assert (r.e1, r.e2, r.e3, r.e4) == (0.0, 0.0, 0.0, 0.0)


def test_rs_second_order_transverse():
    J = 0.1
    r = rs_corrections(ChainSpec(6), FieldParams(1, 0, 0, J), order=2)
    assert r.e2 == pytest.approx(-6 * J * J / 32, rel=1e-12)
    assert math.isnan(r.e3) and math.isnan(r.e4)


def test_rs_order_bounds():
    c = ChainSpec(4)
    p = FieldParams(1, 0, 1, 0.1)
    with pytest.raises(ValueError):
        rs_corrections(c, p, order=5)
    with pytest.raises(ValueError):
        rs_corrections(c, p, order=0)
    with pytest.raises(ResourceLimitError):
        rs_corrections(ChainSpec(9), p)


def third_order_parts(n, p):
    """Closed forms of the three third-order partial sums."""
    f2, g2, J, h = p.f ** 2, p.g ** 2, p.J, p.h
    pair = n * f2 * g2 * J * J / (4 * h * h) + n * g2 * g2 * J * J / (64 * h * h)
    s1 = pair * (-n * f2 * J / 4 + f2 * J)
    s2 = -n * f2 * g2 * g2 * J ** 3 / (8 * h * h)
    s3 = (n * f2 * J / 4) * pair
    return s1, s2, s3


@settings(max_examples=15)
@given(st.integers(5, 7), st.floats(0.1, 3), st.floats(0, 3), st.floats(0.1, 3), st.floats(0.01, 1))
def test_third_order_partial_sums(n, hx, hy, hz, J):
    p = FieldParams(hx, hy, hz, J)
    r = rs_corrections(ChainSpec(n), p, order=3)
    scale = abs(r.s1) + abs(r.s2) + abs(r.s3)
    assert abs(r.e3 - (r.s1 + r.s2 + r.s3)) <= 1e-12 * scale
    for got, want in zip((r.s1, r.s2, r.s3), third_order_parts(n, p)):
        assert got == pytest.approx(want, rel=1e-10, abs=1e-14 * scale)


def test_low_orders_scale_with_coupling():
    c = ChainSpec(6)
    base = FieldParams(0.8, 0.3, 0.6, 0.05)
    a = rs_corrections(c, base, order=2)
    for J in (0.01, 0.2, 0.7):
        b = rs_corrections(c, base.with_J(J), order=2)
        assert b.e1 / J == pytest.approx(a.e1 / base.J, rel=1e-12)
        assert b.e2 / J ** 2 == pytest.approx(a.e2 / base.J ** 2, rel=1e-12)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_hellmann_feynman_exchange(n):
    c = ChainSpec(n)
    p = FieldParams(1.0, 0.4, 0.7, 0.3)
    step = 1e-5 * p.h
    dE = (exact_ground_energy(c, p.with_J(p.J + step))
          - exact_ground_energy(c, p.with_J(p.J - step))) / (2 * step)
    _, v = ground_state(build_lambda(c, p))
    assert abs(dE + exchange_expectation(v, c)) < 1e-6 * n


def test_ground_energy_even_in_each_field():
    c = ChainSpec(5)
    e = exact_ground_energy(c, FieldParams(0.4, 0.7, 0.9, 0.6))
    # negative components are outside FieldParams, so flip signs on the raw operator
    from spinchain.oracle import _site_operator
    from spinchain.single_spin import spin_matrix_lambda
    base = build_lambda(c, FieldParams(0.4, 0.7, 0.9, 0.6)).entries
    for axis, hval in (("x", 0.4), ("y", 0.7), ("z", 0.9)):
        s = spin_matrix_lambda(axis)
        shift = sum(_site_operator(s, i, 5) for i in range(1, 6)).toarray()
        flipped = base + 2 * hval * shift
        assert abs(np.linalg.eigvalsh(flipped)[0] - e) < 1e-12
