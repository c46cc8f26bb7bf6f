"""Integer labelling of product states on a periodic spin-1/2 chain.

A basis state is an integer ``r`` in ``[0, 2**N)``.  Site ``i`` (1-based) is
the ``i``-th most significant of the ``N`` bits, so ``r = sum(r_i * 2**(N-i))``.
All site arithmetic wraps periodically: site 0 is site N, site N+1 is site 1.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .errors import ResourceLimitError

MAX_SITES = 24
DENSE_MAX_SITES = 14


@dataclass(frozen=True)
class ChainSpec:
    n_sites: int

    def __post_init__(self):
        n = self.n_sites
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise TypeError(f"n_sites must be an integer, got {n!r}")
        if not 2 <= n <= MAX_SITES:
            raise ValueError(f"n_sites must lie in [2, {MAX_SITES}], got {n}")

    @property
    def dim(self) -> int:
        return 1 << self.n_sites

    @property
    def full_mask(self) -> int:
        return self.dim - 1

    def wrap(self, i: int) -> int:
        """Map any integer site label onto 1..N."""
        return (i - 1) % self.n_sites + 1


def dense_cap() -> int:
    """Largest N allowed for dense builds.

    ``SPINCHAIN_MAX_N`` may lower the default cap of 14 but never raise it.
    """
    env = os.environ.get("SPINCHAIN_MAX_N")
    if env is None or env.strip() == "":
        return DENSE_MAX_SITES
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"SPINCHAIN_MAX_N must be an integer, got {env!r}") from None
    return min(value, DENSE_MAX_SITES)


def require_dense(chain: ChainSpec, cap: Optional[int] = None):
    limit = dense_cap() if cap is None else min(cap, dense_cap())
    if chain.n_sites > limit:
        raise ResourceLimitError(
            f"N={chain.n_sites} exceeds the dense limit N<={limit}")


def _check_state(r: int, chain: ChainSpec):
    if not 0 <= r < chain.dim:
        raise ValueError(f"state index {r} outside [0, {chain.dim})")


def _check_site(i: int, chain: ChainSpec):
    if not 1 <= i <= chain.n_sites:
        raise ValueError(f"site index {i} outside [1, {chain.n_sites}]")


def site_mask(i: int, chain: ChainSpec) -> int:
    """Bit mask of site ``i``; ``i`` is wrapped periodically."""
    return 1 << (chain.n_sites - chain.wrap(i))


def bond_mask(i: int, chain: ChainSpec) -> int:
    """Bit mask covering sites ``i`` and ``i+1``."""
    return site_mask(i, chain) | site_mask(i + 1, chain)


def bit(r: int, i: int, chain: ChainSpec) -> int:
    """Occupation ``r_i`` of site ``i``: parity of floor(r / 2**(N-i))."""
    _check_site(i, chain)
    _check_state(r, chain)
    return (r >> (chain.n_sites - i)) & 1


def bits(r: int, chain: ChainSpec) -> tuple:
    _check_state(r, chain)
    n = chain.n_sites
    return tuple((r >> (n - i)) & 1 for i in range(1, n + 1))


def from_bits(vector, chain: ChainSpec) -> int:
    if len(vector) != chain.n_sites:
        raise ValueError("bit vector length must equal N")
    r = 0
    for b in vector:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        r = (r << 1) | b
    return r


def popcount(x: int) -> int:
    return bin(x).count("1")


def weight(r: int, chain: ChainSpec) -> int:
    """Number of excited single-spin factors in state ``r``."""
    _check_state(r, chain)
    return popcount(r)


def rotate(x: int, chain: ChainSpec) -> int:
    """Cyclic shift by one site; pairs every bit with its right neighbour."""
    n = chain.n_sites
    return ((x >> 1) | ((x & 1) << (n - 1))) & chain.full_mask


def domain_walls(r: int, chain: ChainSpec) -> int:
    """Count of cyclic bonds (i, i+1) with r_i != r_{i+1}."""
    _check_state(r, chain)
    return popcount(r ^ rotate(r, chain))


@dataclass(frozen=True)
class PairProfile:
    alpha: int
    beta: int
    hamming: int
    k: Optional[int] = None


def pair_profile(r: int, s: int, chain: ChainSpec) -> PairProfile:
    """Agreement counts between the bit vectors of ``r`` and ``s``.

    ``alpha`` counts sites where they agree, ``beta`` counts cyclic bonds on
    which both sites agree, and ``k`` is the differing site when exactly one
    site differs.
    """
    _check_state(r, chain)
    _check_state(s, chain)
    n = chain.n_sites
    diff = r ^ s
    agree = ~diff & chain.full_mask
    hamming = popcount(diff)
    alpha = n - hamming
    beta = popcount(agree & rotate(agree, chain))
    k = None
    if hamming == 1:
        k = n - (diff.bit_length() - 1)
    return PairProfile(alpha=alpha, beta=beta, hamming=hamming, k=k)


def degeneracy(m: int, chain: ChainSpec) -> int:
    """Number of basis states of weight ``m``."""
    if not 0 <= m <= chain.n_sites:
        raise ValueError(f"weight {m} outside [0, {chain.n_sites}]")
    return comb(chain.n_sites, m)


# bit-level forms of the trigonometric identities for j, k in {0, 1}

def delta(j: int, k: int) -> int:
    return 1 - j - k + 2 * j * k


def sign(j: int) -> int:
    """(-1)**j for j in {0, 1}."""
    return 1 - 2 * j


def neighbour_cos(j: int, k: int) -> int:
    """cos((j + k) * pi / 2) for j, k in {0, 1}."""
    return 1 - j - k


# vectorised tables over the whole basis

def state_array(chain: ChainSpec) -> np.ndarray:
    return np.arange(chain.dim, dtype=np.int64)


def bit_table(chain: ChainSpec) -> np.ndarray:
    """(2**N, N) array of r_i, column ``i-1`` holding site ``i``."""
    r = state_array(chain)
    shifts = chain.n_sites - np.arange(1, chain.n_sites + 1)
    return ((r[:, None] >> shifts[None, :]) & 1).astype(np.int8)


def weight_array(chain: ChainSpec) -> np.ndarray:
    return bit_table(chain).sum(axis=1, dtype=np.int64)


def domain_wall_array(chain: ChainSpec) -> np.ndarray:
    b = bit_table(chain)
    return (b != np.roll(b, -1, axis=1)).sum(axis=1, dtype=np.int64)
