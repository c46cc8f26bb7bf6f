"""Magnetizations and nearest-neighbour correlation from the quartic energy series.

Per spin, ``e0 = -h/2 + sum_m J^m h^(1-m) A_m(u)`` with ``u = f^2``,
``A_1 = -u/4`` and ``A_m = -2^(m-1) S_m(1-u)`` for m >= 2.  The observables are
total derivatives of that polynomial (Hellmann-Feynman):

    m_a   = -2 de0/dh_a      (a = x, y, z; f and h both depend on h_a)
    c_i,i+1 = -4 de0/dJ
"""
from __future__ import annotations

from dataclasses import dataclass

from .perturbation import MAX_ORDER, SERIES_COEFFS
from .single_spin import AXES, FieldParams


def _coefficients(m: int):
    """A_m as a polynomial in u = f^2: list of (coef, power)."""
    if m == 1:
        return [(-0.25, 1)]
    # S_m(g2) with g2 = 1 - u expanded later; keep as g2 powers
    return [(-(2 ** (m - 1)) * (-1) ** (m - k) * float(SERIES_COEFFS[(m, k)]), k + 1)
            for k in range(m)]


def _A(m: int, u: float) -> float:
    if m == 1:
        return -0.25 * u
    return sum(c * (1 - u) ** p for c, p in _coefficients(m))


def _dA(m: int, u: float) -> float:
    """dA_m/du."""
    if m == 1:
        return -0.25
    return sum(-c * p * (1 - u) ** (p - 1) for c, p in _coefficients(m))


def energy_per_spin(params: FieldParams) -> float:
    h, u, J = params.h, params.f ** 2, params.J
    return -h / 2 + sum(J ** m * h ** (1 - m) * _A(m, u) for m in range(1, MAX_ORDER + 1))


def energy_gradient(params: FieldParams) -> dict:
    """Total derivatives of the series ``e0`` w.r.t. hx, hy, hz and J."""
    h, f, J = params.h, params.f, params.J
    u = f * f
    de_dh = -0.5 + sum((1 - m) * J ** m * h ** (-m) * _A(m, u) for m in range(1, MAX_ORDER + 1))
    de_du = sum(J ** m * h ** (1 - m) * _dA(m, u) for m in range(1, MAX_ORDER + 1))
    grad = {}
    for axis in AXES:
        ha = getattr(params, "h" + axis)
        du = 2 * f / h * ((1.0 if axis == "z" else 0.0) - f * ha / h)
        grad["h" + axis] = ha / h * de_dh + du * de_du
    grad["J"] = sum(m * J ** (m - 1) * h ** (1 - m) * _A(m, u) for m in range(1, MAX_ORDER + 1))
    return grad


def magnetization(axis: str, params: FieldParams) -> float:
    """``(2/N) <sum_i S^axis_i>`` in the perturbative ground state."""
    if axis not in AXES:
        raise ValueError(f"unknown axis {axis!r}")
    return -2 * energy_gradient(params)["h" + axis]


def correlation(params: FieldParams) -> float:
    """``(4/N) <sum_i Sz_i Sz_{i+1}>`` in the perturbative ground state."""
    z, f2, g2 = params.z, params.f ** 2, params.g ** 2
    out = f2
    for m in range(2, MAX_ORDER + 1):
        s = sum((-1) ** (m - k) * float(SERIES_COEFFS[(m, k)]) * g2 ** (k + 1) for k in range(m))
        out += 4 * m * z ** (m - 1) * s
    return out


@dataclass(frozen=True)
class ObservableSet:
    mx: float
    my: float
    mz: float
    corr: float


def observables(params: FieldParams) -> ObservableSet:
    grad = energy_gradient(params)
    return ObservableSet(mx=-2 * grad["hx"], my=-2 * grad["hy"], mz=-2 * grad["hz"],
                         corr=correlation(params))
