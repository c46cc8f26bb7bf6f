"""Single-site field Hamiltonian, its eigenbasis and spin operators.

The single-site field term is ``-hx Sx - hy Sy - hz Sz``, written in the
S^z eigenbasis (the "lambda" basis, spin up first) as
``-1/2 [[hz, a], [a*, -hz]]`` with ``a = hx - i hy``.  The "eps" basis is its
eigenbasis ordered by energy: ``eps_0 = -h/2`` (aligned with the field) then
``eps_1 = +h/2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

AXES = ("x", "y", "z")

# below this ratio g is treated as exactly zero and eps basis == lambda basis
G_EPS = 1e-12


@dataclass(frozen=True)
class FieldParams:
    hx: float = 0.0
    hy: float = 0.0
    hz: float = 0.0
    J: float = 0.0

    def __post_init__(self):
        for name in ("hx", "hy", "hz", "J"):
            value = getattr(self, name)
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value!r}")
        if self.hx == 0 and self.hy == 0 and self.hz == 0:
            raise ValueError("the total field h must be positive")

    @cached_property
    def h(self) -> float:
        return float(np.sqrt(self.hx**2 + self.hy**2 + self.hz**2))

    @cached_property
    def f(self) -> float:
        return self.hz / self.h

    @cached_property
    def g(self) -> float:
        return float(np.hypot(self.hx, self.hy)) / self.h

    @property
    def a(self) -> complex:
        return complex(self.hx, -self.hy)

    @property
    def z(self) -> float:
        """Dimensionless coupling -J/eps_0 = 2J/h."""
        return 2.0 * self.J / self.h

    @property
    def transverse_free(self) -> bool:
        return self.g < G_EPS

    def with_J(self, J: float) -> "FieldParams":
        return FieldParams(self.hx, self.hy, self.hz, J)

    def field_matrix(self) -> np.ndarray:
        """Single-site field Hamiltonian in the lambda basis."""
        a = self.a
        return -0.5 * np.array([[self.hz, a], [a.conjugate(), -self.hz]], dtype=complex)


@dataclass(frozen=True)
class SingleSpinEigen:
    """``P`` columns are ``c_k (a, b_k)``; ``b``/``c`` are NaN without a transverse field."""
    eps: np.ndarray
    b: np.ndarray
    c: np.ndarray
    P: np.ndarray
    D: np.ndarray


def solve_single(params: FieldParams) -> SingleSpinEigen:
    """Eigen-decomposition ``H_F = P D P^dagger`` of the single-site field term.

    Columns of ``P`` are the eigenvectors in the lambda basis.  For a field
    with a transverse part the ground column is
    ``(e^{-i phi} sqrt((1+f)/2), sqrt((1-f)/2))`` and the excited column is
    ``(e^{-i phi} sqrt((1-f)/2), -sqrt((1+f)/2))`` with ``e^{-i phi} = a/|a|``.
    This fixes the phases so that ``<eps_0|Sz|eps_1> = +g/2``.
    Equivalently column ``k`` is ``c_k (a, b_k)`` with ``b_k = h cos(k pi) - hz``
    and ``c_k = (2h (h - hz cos(k pi)))^(-1/2)``.
    For a purely longitudinal field ``P`` is the identity.
    """
    h, hz = params.h, params.hz
    eps = np.array([-h / 2, h / 2])
    D = np.diag(eps)
    if params.transverse_free:
        nan = np.full(2, np.nan)
        return SingleSpinEigen(eps=eps, b=nan, c=nan, P=np.eye(2, dtype=complex), D=D)
    t = abs(params.a)
    # h - hz and h + hz without cancellation
    below = t * t / (h + hz)
    above = h + hz
    b = np.array([below, -above])
    c = 1 / np.sqrt(2 * h * np.array([below, above]))
    phase = params.a / t
    up = np.sqrt(above / (2 * h))
    dn = t / np.sqrt(2 * h * above)
    P = np.array([[phase * up, phase * dn], [dn, -up]], dtype=complex)
    return SingleSpinEigen(eps=eps, b=b, c=c, P=P, D=D)


def spin_element_lambda(axis: str, j: int, k: int) -> complex:
    """Spin-1/2 operator elements in the S^z eigenbasis (hbar = 1)."""
    _check_jk(j, k)
    same = j == k
    if axis == "z":
        return complex((0.5 if j == 0 else -0.5) if same else 0.0)
    if axis == "x":
        return complex(0.0 if same else 0.5)
    if axis == "y":
        if same:
            return 0j
        return -0.5j if j == 0 else 0.5j
    raise ValueError(f"unknown axis {axis!r}")


def spin_element_eps(axis: str, j: int, k: int, params: FieldParams) -> complex:
    """Spin-1/2 operator elements ``<eps_j|S^axis|eps_k>`` in closed form."""
    _check_jk(j, k)
    if axis not in AXES:
        raise ValueError(f"unknown axis {axis!r}")
    if params.transverse_free:
        return spin_element_lambda(axis, j, k)
    h, hz, a = params.h, params.hz, params.a
    cj = 1 - 2 * j
    ck = 1 - 2 * k
    if j == k:
        along = {"x": params.hx, "y": params.hy, "z": hz}[axis]
        return complex(along / (2 * h) * cj)
    if axis == "z":
        return complex(params.g / 2)
    denom = 4 * h * np.hypot(params.hx, params.hy)
    if axis == "x":
        return -((h * ck + hz) * a + (h * cj + hz) * a.conjugate()) / denom
    return 1j * ((h * cj + hz) * a.conjugate() - (h * ck + hz) * a) / denom


def spin_matrix_lambda(axis: str) -> np.ndarray:
    return np.array([[spin_element_lambda(axis, j, k) for k in (0, 1)] for j in (0, 1)])


def spin_matrix_eps(axis: str, params: FieldParams) -> np.ndarray:
    return np.array([[spin_element_eps(axis, j, k, params) for k in (0, 1)] for j in (0, 1)])


def _check_jk(j, k):
    if j not in (0, 1) or k not in (0, 1):
        raise ValueError(f"single-spin labels must be 0 or 1, got ({j}, {k})")
