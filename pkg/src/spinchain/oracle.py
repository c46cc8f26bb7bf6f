"""Brute-force references: tensor-product Hamiltonian, dense eigensolver and
a Rayleigh-Schroedinger engine that sums the perturbation series numerically.

Nothing here uses the closed-form matrix elements of
:mod:`spinchain.hamiltonian`; the eps-basis perturbation is obtained by
rotating the lambda-basis operator with ``P`` on every site.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np
import scipy.linalg as la
from scipy import sparse

from . import basis as B
from .basis import ChainSpec
from .errors import NotHermitianError, ResourceLimitError
from .hamiltonian import HamiltonianMatrix, warn_if_double_bond
from .single_spin import FieldParams, solve_single, spin_matrix_lambda

RS_MAX_SITES = 8
HERMITIAN_TOL = 1e-10


def _site_operator(op, i: int, n: int):
    """Embed a 2x2 operator at site ``i`` (1-based) of an ``n``-site chain."""
    factors = [sparse.identity(2, format="csr", dtype=complex)] * n
    factors[i - 1] = sparse.csr_matrix(op)
    return reduce(lambda x, y: sparse.kron(x, y, format="csr"), factors)


def _lambda_parts(chain: ChainSpec, params: FieldParams):
    n = chain.n_sites
    sx, sy, sz = (spin_matrix_lambda(ax) for ax in "xyz")
    field = sparse.csr_matrix((chain.dim, chain.dim), dtype=complex)
    exchange = sparse.csr_matrix((chain.dim, chain.dim), dtype=complex)
    for i in range(1, n + 1):
        field = field - params.hx * _site_operator(sx, i, n) \
            - params.hy * _site_operator(sy, i, n) - params.hz * _site_operator(sz, i, n)
        j = chain.wrap(i + 1)
        exchange = exchange - params.J * (_site_operator(sz, i, n) @ _site_operator(sz, j, n))
    return field, exchange


def build_lambda(chain: ChainSpec, params: FieldParams) -> HamiltonianMatrix:
    """``H`` assembled literally from Kronecker products in the S^z basis."""
    B.require_dense(chain)
    warn_if_double_bond(chain)
    field, exchange = _lambda_parts(chain, params)
    return HamiltonianMatrix("lambda", (field + exchange).toarray())


def product_rotation(chain: ChainSpec, params: FieldParams) -> np.ndarray:
    """``P`` tensored over all sites; columns are the eps product states."""
    P = solve_single(params).P
    return reduce(np.kron, [P] * chain.n_sites)


def to_eps(matrix: np.ndarray, chain: ChainSpec, params: FieldParams) -> np.ndarray:
    U = product_rotation(chain, params)
    return U.conj().T @ matrix @ U


@dataclass
class Spectrum:
    eigenvalues: np.ndarray
    ground_vector: Optional[np.ndarray] = None

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])


def _as_array(H) -> np.ndarray:
    return H.entries if isinstance(H, HamiltonianMatrix) else np.asarray(H)


def _checked(H) -> np.ndarray:
    a = _as_array(H)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {a.shape}")
    err = np.abs(a - a.conj().T).max() if a.size else 0.0
    if err > HERMITIAN_TOL:
        raise NotHermitianError(f"matrix is not Hermitian (max |H - H^dagger| = {err:.3e})")
    if np.iscomplexobj(a) and not np.any(a.imag):
        a = a.real
    return a


def eigensolve(H, want_vector: bool = False) -> Spectrum:
    """Full dense spectrum, ascending."""
    a = _checked(H)
    if want_vector:
        w, v = la.eigh(a)
        return Spectrum(w, v[:, 0])
    return Spectrum(la.eigh(a, eigvals_only=True))


def ground_state(H):
    """Lowest eigenpair only; cheaper than a full solve for N >= 10."""
    a = _checked(H)
    w, v = la.eigh(a, subset_by_index=[0, 0])
    return float(w[0]), v[:, 0]


def exchange_expectation(vector: np.ndarray, chain: ChainSpec) -> float:
    """``<sum_i Sz_i Sz_{i+1}>`` in a state given in the lambda basis."""
    bt = B.bit_table(chain).astype(float)
    sz = 0.5 - bt
    zz = (sz * np.roll(sz, -1, axis=1)).sum(axis=1)
    return float(np.sum(np.abs(vector) ** 2 * zz))


def spin_expectation(axis: str, vector: np.ndarray, chain: ChainSpec) -> float:
    """``<sum_i S^axis_i>`` in a state given in the lambda basis."""
    op = sparse.csr_matrix((chain.dim, chain.dim), dtype=complex)
    s = spin_matrix_lambda(axis)
    for i in range(1, chain.n_sites + 1):
        op = op + _site_operator(s, i, chain.n_sites)
    return float(np.real(np.vdot(vector, op @ vector)))


def exact_ground_energy(chain: ChainSpec, params: FieldParams) -> float:
    return ground_state(build_lambda(chain, params))[0]


@dataclass
class NumericCorrections:
    e1: float
    e2: float
    e3: float
    e4: float
    s1: float
    s2: float
    s3: float

    def order(self, m: int) -> float:
        return (self.e1, self.e2, self.e3, self.e4)[m - 1]


def rs_corrections(chain: ChainSpec, params: FieldParams, order: int = 4) -> NumericCorrections:
    """Ground-state Rayleigh-Schroedinger corrections up to ``order`` by direct summation.

    The perturbation is ``H_I`` rotated from the lambda basis; the unperturbed
    energies are read off the rotated ``H_F``.  Orders above ``order`` are
    returned as NaN.
    """
    if not 1 <= order <= 4:
        raise ValueError(f"order must be 1..4, got {order}")
    if chain.n_sites > RS_MAX_SITES:
        raise ResourceLimitError(
            f"numeric perturbation sums need N<={RS_MAX_SITES}, got {chain.n_sites}")
    B.require_dense(chain)
    field, exchange = _lambda_parts(chain, params)
    U = product_rotation(chain, params)
    E = np.real(np.diag(U.conj().T @ field.toarray() @ U))
    V = np.real(U.conj().T @ exchange.toarray() @ U)

    V00 = V[0, 0]
    v = V[1:, 0]
    Vp = V[1:, 1:]
    D = E[0] - E[1:]              # E_0 - E_s, all negative
    w = v / D

    nan = float("nan")
    e1 = float(V00)
    e2 = s1 = s2 = s3 = e3 = e4 = nan
    if order >= 2:
        e2 = float(v @ w)
    if order >= 3:
        s1 = float(np.sum(w * w * np.diag(Vp)))
        off = Vp - np.diag(np.diag(Vp))
        s2 = float(w @ off @ w)
        s3 = float(-V00 * (w @ w))
        e3 = float(w @ Vp @ w - V00 * (w @ w))
    if order >= 4:
        Vw = Vp @ w
        e4 = float(Vw @ (Vw / D)
                   - 2 * V00 * (w @ (Vw / D))
                   + V00**2 * np.sum(w * w / D)
                   - e2 * (w @ w))
    return NumericCorrections(e1, e2, e3, e4, s1, s2, s3)
