# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from dataclasses import dataclass

import numpy as np

from sft_sdk.czindex.loops import SymmetricLoop, symplectic_form

logger = logging.getLogger(__name__)

MIN_STEPS = 16


def _rk4_step(loop: SymmetricLoop, J: np.ndarray, t: float, B: np.ndarray, h: float) -> np.ndarray:
    def rhs(s, X):
        return J @ loop(s) @ X

    k1 = rhs(t, B)
    k2 = rhs(t + h / 2, B + h / 2 * k1)
    k3 = rhs(t + h / 2, B + h / 2 * k2)
    k4 = rhs(t + h, B + h * k3)
    return B + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


@dataclass(frozen=True)
class SymplecticPath:
    """Samples B(t_j), t_j = j/N, of the solution of Ḃ = J₀ S(t) B with B(0) = Id."""
    loop: SymmetricLoop
    times: np.ndarray
    matrices: np.ndarray

    @property
    def steps(self) -> int:
        return len(self.times) - 1

    @property
    def step(self) -> float:
        return 1.0 / self.steps

    @property
    def endpoint(self) -> np.ndarray:
        return self.matrices[-1]

    def at(self, t: float) -> np.ndarray:
        """B(t), integrated from the closest sample at or before t."""
        if not 0 <= t <= 1:
            raise ValueError(f"Path parameter must lie in [0, 1], got {t}")
        j = min(int(np.floor(t * self.steps)), self.steps)
        rest = t - self.times[j]
        if rest <= 0:
            return self.matrices[j]
        return _rk4_step(self.loop, symplectic_form(self.loop.dim), self.times[j], self.matrices[j], rest)

    def symplecticity_defect(self) -> float:
        """max_j ‖B(t_j)ᵀ J₀ B(t_j) − J₀‖∞ (largest entry)."""
        J = symplectic_form(self.loop.dim)
        return float(max(np.max(np.abs(B.T @ J @ B - J)) for B in self.matrices))


def solve_symplectic_path(loop: SymmetricLoop, steps: int = 256) -> SymplecticPath:
    """Classical fixed-step fourth-order Runge–Kutta integration over [0, 1]."""
    if steps < MIN_STEPS:
        raise ValueError(f"At least {MIN_STEPS} integration steps are required, got {steps}")
    J = symplectic_form(loop.dim)
    h = 1.0 / steps
    times = np.linspace(0.0, 1.0, steps + 1)
    matrices = np.empty((steps + 1, loop.dim, loop.dim))
    matrices[0] = np.eye(loop.dim)
    for j in range(steps):
        matrices[j + 1] = _rk4_step(loop, J, times[j], matrices[j], h)
    path = SymplecticPath(loop, times, matrices)
    logger.debug(f"Integrated {loop!r} with {steps} steps")
    return path
