"""Closed-form fourth-order ground-state energy of the field-Ising ring.

Each correction ``E0^(m)`` is ``N J^m / h^(m-1)`` times a polynomial in
``f^2`` and ``g^2``.  The same numbers, with ``f^2 = 1 - g^2`` substituted and
the energy divided by ``N eps_0``, give the per-spin series

    e0/eps0 = 1 + (f^2/4) z + sum_{m=2..4} z^m sum_{k<m} (-1)^(m-k) c_k^(m) (g^2)^(k+1)

with ``z = 2J/h``.  Polynomials are kept as exact fractions until evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

from .basis import ChainSpec
from .errors import UnsupportedSizeError
from .single_spin import FieldParams

MIN_SITES = 5
MAX_ORDER = 4

# E0^(m) = N J^m h^(1-m) * sum(coef * (f^2)^p * (g^2)^q) over (coef, p, q)
CORRECTION_TERMS = {
    1: ((F(-1, 4), 1, 0),),
    2: ((F(-1, 4), 1, 1), (F(-1, 32), 0, 2)),
    3: ((F(-7, 64), 1, 2), (F(1, 4), 2, 1)),
    4: ((F(-13, 192), 1, 3), (F(55, 128), 2, 2), (F(-1, 4), 3, 1), (F(-1, 2048), 0, 4)),
}

# c_k^(m) for k >= 1; c_0^(m) follows the 1/2^(m+1) rule
_LISTED = {
    (2, 1): F(7, 64),
    (3, 1): F(39, 256), (3, 2): F(23, 256),
    (4, 1): F(151, 1024), (4, 2): F(161, 768), (4, 3): F(4589, 49152),
}


def leading_coefficient(m: int) -> F:
    return F(1, 2 ** (m + 1))


def series_coefficients() -> dict:
    """Exact table ``{(m, k): c_k^(m)}`` for m = 2..4."""
    table = {}
    for m in range(2, MAX_ORDER + 1):
        table[(m, 0)] = leading_coefficient(m)
        for k in range(1, m):
            table[(m, k)] = _LISTED[(m, k)]
    return table


SERIES_COEFFS = series_coefficients()


def coefficient_rows():
    """``(m, k, numerator, denominator)`` in table order."""
    return [(m, k, c.numerator, c.denominator) for (m, k), c in sorted(SERIES_COEFFS.items())]


def _poly_mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_pow(p, n):
    out = [F(1)]
    for _ in range(n):
        out = _poly_mul(out, p)
    return out


def reexpand_correction(m: int) -> list:
    """Coefficient of ``z^m`` in ``e0/eps0`` as a polynomial in ``u = g^2``.

    Uses ``f^2 = 1 - u`` and ``E0^(m) / (N eps0) = -2^(1-m) * poly * z^m``.
    Index ``q`` of the returned list holds the coefficient of ``u^q``.
    """
    total = [F(0)] * (MAX_ORDER + 2)
    scale = -F(2) ** (1 - m)
    for coef, p, q in CORRECTION_TERMS[m]:
        term = _poly_mul(_poly_pow([F(1), F(-1)], p), [F(0)] * q + [F(1)])
        for i, c in enumerate(term):
            total[i] += scale * coef * c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def derived_coefficients() -> dict:
    """``c_k^(m)`` recovered by re-expanding the four correction formulas."""
    table = {}
    for m in range(2, MAX_ORDER + 1):
        poly = reexpand_correction(m)
        if poly[0] != 0:
            raise ArithmeticError(f"order {m} has a g-independent term {poly[0]}")
        for k in range(m):
            c = poly[k + 1] if k + 1 < len(poly) else F(0)
            table[(m, k)] = (-1) ** (m - k) * c
    return table


def _check_chain(chain: ChainSpec):
    if chain.n_sites < MIN_SITES:
        raise UnsupportedSizeError(
            f"closed-form corrections are only verified for N>={MIN_SITES}, got {chain.n_sites}")


def correction(m: int, chain: ChainSpec, params: FieldParams) -> float:
    """Closed-form ground-state energy correction of order ``m`` (1..4)."""
    if m not in CORRECTION_TERMS:
        raise ValueError(f"order must be 1..4, got {m}")
    _check_chain(chain)
    f2, g2 = params.f ** 2, params.g ** 2
    poly = sum(float(c) * f2 ** p * g2 ** q for c, p, q in CORRECTION_TERMS[m])
    return chain.n_sites * params.J ** m * params.h ** (1 - m) * poly


@dataclass(frozen=True)
class CorrectionSet:
    e1: float
    e2: float
    e3: float
    e4: float
    unperturbed: float

    @property
    def total(self) -> float:
        return self.unperturbed + self.e1 + self.e2 + self.e3 + self.e4

    def order(self, m: int) -> float:
        return (self.e1, self.e2, self.e3, self.e4)[m - 1]


def corrections(chain: ChainSpec, params: FieldParams) -> CorrectionSet:
    es = [correction(m, chain, params) for m in range(1, MAX_ORDER + 1)]
    return CorrectionSet(*es, unperturbed=-chain.n_sites * params.h / 2)


def ground_energy(chain: ChainSpec, params: FieldParams) -> float:
    return corrections(chain, params).total


def series_terms(g2: float) -> list:
    """``S_m(g^2) = sum_k (-1)^(m-k) c_k^(m) (g^2)^(k+1)`` for m = 2..4."""
    return [sum((-1) ** (m - k) * float(SERIES_COEFFS[(m, k)]) * g2 ** (k + 1)
                for k in range(m))
            for m in range(2, MAX_ORDER + 1)]


def series_e0_ratio(z: float, f: float, g: float) -> float:
    """Per-spin ground energy over ``eps_0 = -h/2`` as a quartic in ``z``."""
    if abs(f * f + g * g - 1) > 1e-12:
        raise ValueError(f"f^2 + g^2 must be 1, got {f * f + g * g!r}")
    out = 1 + f * f / 4 * z
    for m, s in zip(range(2, MAX_ORDER + 1), series_terms(g * g)):
        out += z ** m * s
    return out


def series_e0_ratio_exact(z: F, g2: F) -> F:
    """Rational-arithmetic twin of :func:`series_e0_ratio` with ``f^2 = 1 - g^2``."""
    out = 1 + (1 - g2) / 4 * z
    for m in range(2, MAX_ORDER + 1):
        out += z ** m * sum((-1) ** (m - k) * SERIES_COEFFS[(m, k)] * g2 ** (k + 1)
                            for k in range(m))
    return out


def pfeuty_reference(z):
    """Quartic Taylor truncation of the exact transverse-field Ising ground energy
    per spin (in units of ``eps_0``).  Exact for Fraction input."""
    if z < 0:
        raise ValueError("z must be non-negative")
    return 1 + z ** 2 / 64 + z ** 4 / 16384
