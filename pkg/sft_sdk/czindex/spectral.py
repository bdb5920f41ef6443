# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from typing import Sequence

import numpy as np
from scipy.linalg import eigh

from sft_sdk.czindex.index import AdmissibilityError, require_admissible
from sft_sdk.czindex.loops import SymmetricLoop, symplectic_form

logger = logging.getLogger(__name__)

DEFAULT_MODES = 128
ZERO_EIGENVALUE = 1e-9


class TruncationError(ValueError):
    """The truncated operator lacks a positive or a negative eigenvalue."""


def operator_matrix(loop: SymmetricLoop, modes: int = DEFAULT_MODES) -> np.ndarray:
    """
    A = J₀ d/dt + S on the Fourier modes e^{2πikt}, |k| ≤ modes: block (k, l)
    is 2πik J₀ δ_kl + Ŝ_{k−l}. The matrix is Hermitian.
    """
    if modes < 1:
        raise ValueError(f"At least one Fourier mode is required, got {modes}")
    dim = loop.dim
    J = symplectic_form(dim)
    ks = range(-modes, modes + 1)
    size = len(ks) * dim
    A = np.zeros((size, size), dtype=complex)
    coefficients = {m: loop.fourier(m) for m in range(-2 * modes, 2 * modes + 1) if abs(m) <= loop.modes}
    for row, k in enumerate(ks):
        for col, l in enumerate(ks):
            block = coefficients.get(k - l)
            if k == l:
                block = 2j * np.pi * k * J + (block if block is not None else 0)
            if block is not None:
                A[row * dim:(row + 1) * dim, col * dim:(col + 1) * dim] = block
    return A


def operator_spectrum(loop: SymmetricLoop, modes: int = DEFAULT_MODES) -> np.ndarray:
    return eigh(operator_matrix(loop, modes), eigvals_only=True)


def spectral_gap(loop: SymmetricLoop, modes: int = DEFAULT_MODES, steps: int = 256) -> float:
    """λ_S = min{−λ₋₁, λ₁}, the distance from 0 to the spectrum of J₀ d/dt + S."""
    require_admissible(loop, steps)
    eigenvalues = operator_spectrum(loop, modes)
    if np.any(np.abs(eigenvalues) < ZERO_EIGENVALUE):
        raise AdmissibilityError(f"0 is an eigenvalue of the operator of {loop!r}, contradicting admissibility")
    positive = eigenvalues[eigenvalues > 0]
    negative = eigenvalues[eigenvalues < 0]
    if not positive.size or not negative.size:
        side = "positive" if not positive.size else "negative"
        raise TruncationError(f"No {side} eigenvalue of {loop!r} within {modes} modes")
    gap = float(min(positive.min(), -negative.max()))
    logger.debug(f"Spectral gap of {loop!r} with {modes} modes: {gap}")
    return gap


def max_weight(loops: Sequence[SymmetricLoop], modes: int = DEFAULT_MODES, steps: int = 256) -> float:
    """min_i λ_{S_i}; an admissible Sobolev weight lies strictly below it."""
    if not loops:
        raise ValueError("max_weight needs at least one loop")
    return min(spectral_gap(loop, modes, steps) for loop in loops)
