"""Closed-form matrix of the periodic Ising chain in the field eigenbasis.

The full Hamiltonian is ``H = H_F + H_I`` with
``H_F = -sum_i (hx Sx_i + hy Sy_i + hz Sz_i)`` and
``H_I = -J sum_i Sz_i Sz_{i+1}`` on a ring.  In the product eigenbasis of
``H_F`` (labelled by integers, see :mod:`spinchain.basis`) the matrix is real
symmetric and very sparse: besides the diagonal, only pairs differing on one
site or on one bond are coupled.
"""
from __future__ import annotations

import io
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import basis as B
from .basis import ChainSpec
from .errors import ResourceLimitError
from .single_spin import FieldParams

STRUCTURAL_MAX_SITES = 12
STRUCTURAL_KINDS = ("alpha_i", "beta_i", "c_i", "d_i",
                    "alpha_sum", "beta_sum", "c_sum", "d_sum", "all_ones")


@dataclass
class HamiltonianMatrix:
    basis: str
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_sites(self) -> int:
        return self.dim.bit_length() - 1

    def hermiticity_error(self) -> float:
        return float(np.abs(self.entries - self.entries.conj().T).max())


def warn_if_double_bond(chain: ChainSpec):
    if chain.n_sites == 2:
        warnings.warn("N=2: bonds (1,2) and (2,1) coincide, the exchange term is "
                      "counted twice", RuntimeWarning, stacklevel=3)


def hf_energy(r: int, chain: ChainSpec, params: FieldParams) -> float:
    """Unperturbed energy ``h m_r - N h / 2``."""
    return params.h * B.weight(r, chain) - chain.n_sites * params.h / 2


def hi_element(r: int, s: int, chain: ChainSpec, params: FieldParams) -> float:
    """Matrix element ``<E_r|H_I|E_s>`` of the exchange term."""
    n = chain.n_sites
    J, f, g = params.J, params.f, params.g
    if r == s:
        return -n * J * f * f / 4 + J * f * f / 2 * B.domain_walls(r, chain)
    prof = B.pair_profile(r, s, chain)
    if prof.hamming == 1:
        k = prof.k
        left = B.bit(r, chain.wrap(k - 1), chain)
        right = B.bit(r, chain.wrap(k + 1), chain)
        return -J * f * g / 2 * B.neighbour_cos(left, right)
    if prof.hamming == 2:
        # bonds whose two sites are exactly the flipped pair; one for N >= 3
        diff = r ^ s
        n_bonds = B.popcount(diff & B.rotate(diff, chain))
        return -J * g * g / 4 * n_bonds
    return 0.0


def h_element(r: int, s: int, chain: ChainSpec, params: FieldParams) -> float:
    diag = hf_energy(r, chain, params) if r == s else 0.0
    return diag + hi_element(r, s, chain, params)


def build_eps(chain: ChainSpec, params: FieldParams, include_field: bool = True) -> np.ndarray:
    """Dense real symmetric matrix of ``H`` (or ``H_I`` alone) in the eps basis."""
    B.require_dense(chain)
    n, dim = chain.n_sites, chain.dim
    J, f, g, h = params.J, params.f, params.g, params.h
    r = B.state_array(chain)
    bt = B.bit_table(chain)

    H = np.zeros((dim, dim))
    diag = -n * J * f * f / 4 + J * f * f / 2 * B.domain_wall_array(chain)
    if include_field:
        diag = diag + h * bt.sum(axis=1) - n * h / 2
    H[r, r] = diag
    if J == 0 or g == 0:
        return H

    for k in range(1, n + 1):
        left = bt[:, chain.wrap(k - 1) - 1]
        right = bt[:, chain.wrap(k + 1) - 1]
        H[r, r ^ B.site_mask(k, chain)] += -J * f * g / 2 * (1 - left - right)
    for i in range(1, n + 1):
        H[r, r ^ B.bond_mask(i, chain)] += -J * g * g / 4
    return H


def build_matrix(chain: ChainSpec, params: FieldParams, basis: str = "eps") -> HamiltonianMatrix:
    if basis == "eps":
        warn_if_double_bond(chain)
        return HamiltonianMatrix("eps", build_eps(chain, params))
    if basis == "lambda":
        from .oracle import build_lambda
        return build_lambda(chain, params)
    raise ValueError(f"basis must be 'eps' or 'lambda', got {basis!r}")


# export format: header line, then "r s re im" for nonzero entries with r <= s

def _num(x: float) -> str:
    return format(float(x) + 0.0, ".17g")


def format_matrix(m: HamiltonianMatrix) -> str:
    out = io.StringIO()
    out.write(f"dim {m.dim} basis {m.basis}\n")
    a = m.entries
    rows, cols = np.nonzero(np.triu(a))
    for r, s in zip(rows.tolist(), cols.tolist()):
        v = complex(a[r, s])
        out.write(f"{r} {s} {_num(v.real)} {_num(v.imag)}\n")
    return out.getvalue()


def parse_matrix(text: str) -> HamiltonianMatrix:
    """Inverse of :func:`format_matrix`; the lower triangle is filled by symmetry."""
    lines = text.strip().splitlines()
    head = lines[0].split()
    if len(head) != 4 or head[0] != "dim" or head[2] != "basis":
        raise ValueError(f"bad header line {lines[0]!r}")
    dim, tag = int(head[1]), head[3]
    dtype = float if tag == "eps" else complex
    a = np.zeros((dim, dim), dtype=dtype)
    for line in lines[1:]:
        r, s, re, im = line.split()
        r, s = int(r), int(s)
        v = complex(float(re), float(im)) if dtype is complex else float(re)
        a[r, s] = v
        a[s, r] = np.conj(v)
    return HamiltonianMatrix(tag, a)


def structural_matrix(kind: str, site: Optional[int], chain: ChainSpec) -> np.ndarray:
    """Dense 0/1 agreement matrices (and their site sums) over basis pairs.

    ``alpha_i``: r and s agree on site i.  ``beta_i``: agree on sites i and i+1.
    ``c_i``: agree everywhere except possibly site i.  ``d_i``: agree everywhere
    except possibly sites i and i+1.
    """
    if kind not in STRUCTURAL_KINDS:
        raise ValueError(f"unknown structural kind {kind!r}")
    if chain.n_sites > STRUCTURAL_MAX_SITES:
        raise ResourceLimitError(
            f"structural matrices need N<={STRUCTURAL_MAX_SITES}, got {chain.n_sites}")
    r = B.state_array(chain)
    diff = r[:, None] ^ r[None, :]
    if kind == "all_ones":
        return np.ones_like(diff)
    if kind.endswith("_sum"):
        base = kind[:-4] + "_i"
        total = np.zeros_like(diff)
        for i in range(1, chain.n_sites + 1):
            total += structural_matrix(base, i, chain)
        return total
    if site is None:
        raise ValueError(f"{kind} needs a site index")
    B._check_site(site, chain)
    full = chain.full_mask
    one = B.site_mask(site, chain)
    pair = B.bond_mask(site, chain)
    if kind == "alpha_i":
        sel = diff & one
    elif kind == "beta_i":
        sel = diff & pair
    elif kind == "c_i":
        sel = diff & (full ^ one)
    else:
        sel = diff & (full ^ pair)
    return (sel == 0).astype(np.int64)
