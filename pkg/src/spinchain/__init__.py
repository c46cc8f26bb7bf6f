"""Ising ring in orthogonal magnetic fields: closed-form matrix in the
non-interacting eigenbasis, brute-force oracles and fourth-order perturbation
theory for the ground state."""
from .basis import ChainSpec, PairProfile, bit, degeneracy, pair_profile, weight
from .errors import NotHermitianError, ResourceLimitError, UnsupportedSizeError
from .hamiltonian import HamiltonianMatrix, build_matrix, h_element, hf_energy, hi_element
from .observables import ObservableSet, correlation, magnetization, observables
from .oracle import NumericCorrections, Spectrum, build_lambda, eigensolve, rs_corrections
from .perturbation import (CorrectionSet, correction, corrections, pfeuty_reference,
                           series_e0_ratio)
from .single_spin import FieldParams, SingleSpinEigen, solve_single, spin_element_eps, \
    spin_element_lambda

__version__ = "0.1.0"
