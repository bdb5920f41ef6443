# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from sft_sdk.czindex.loops import SymmetricLoop, symplectic_form
from sft_sdk.czindex.path import SymplecticPath, solve_symplectic_path

logger = logging.getLogger(__name__)

DEGENERACY_THRESHOLD = 1e-9
KERNEL_CUTOFF = 1e-7
CROSSING_TOLERANCE = 1e-10
COARSE_STEP_ANGLE = math.pi


class AdmissibilityError(ValueError):
    """The loop has a nonzero 1-periodic solution of ẋ = J₀ S x."""


class CrossingError(ValueError):
    """A crossing whose crossing form is degenerate."""


def _shifted(path: SymplecticPath, t: float) -> np.ndarray:
    return path.at(t) - np.eye(path.loop.dim)


def endpoint_determinant(path: SymplecticPath) -> float:
    return float(np.linalg.det(path.endpoint - np.eye(path.loop.dim)))


def is_admissible(loop: SymmetricLoop, steps: int = 256) -> bool:
    """|det(B(1) − Id)| above 1e-9 · max(1, ‖B(1)‖)."""
    path = solve_symplectic_path(loop, steps)
    scale = max(1.0, float(np.linalg.norm(path.endpoint)))
    return abs(endpoint_determinant(path)) > DEGENERACY_THRESHOLD * scale


def require_admissible(loop: SymmetricLoop, steps: int = 256) -> SymplecticPath:
    path = solve_symplectic_path(loop, steps)
    scale = max(1.0, float(np.linalg.norm(path.endpoint)))
    determinant = endpoint_determinant(path)
    if abs(determinant) <= DEGENERACY_THRESHOLD * scale:
        raise AdmissibilityError(f"{loop!r} is not admissible: det(B(1) - Id) = {determinant:.3e}")
    return path


def _signature(form: np.ndarray, where: str) -> int:
    eigenvalues = np.linalg.eigvalsh(form)
    scale = max(1.0, float(np.max(np.abs(eigenvalues))))
    if np.any(np.abs(eigenvalues) < KERNEL_CUTOFF * scale):
        raise CrossingError(f"Degenerate crossing form at {where}: eigenvalues {eigenvalues}")
    return int(np.sum(eigenvalues > 0) - np.sum(eigenvalues < 0))


def _smallest_singular_value(path: SymplecticPath, t: float) -> float:
    return float(np.linalg.svd(_shifted(path, t), compute_uv=False)[-1])


def find_crossings(path: SymplecticPath) -> List[float]:
    """
    Interior crossings t ∈ (0, 1) with det(B(t) − Id) = 0: sign changes of the
    determinant between samples, plus local minima of the smallest singular
    value that reach the kernel cutoff (the determinant may touch zero
    without changing sign).

    Both scans start at the first sample, so a crossing inside (0, 1/N) is not
    seen. Such a crossing needs a full turn within one step; a warning is
    logged when some ‖S(t_j)‖/N reaches ``COARSE_STEP_ANGLE``.
    """
    steps = path.steps
    times = path.times
    identity = np.eye(path.loop.dim)
    turn = max(float(np.linalg.norm(path.loop(t), 2)) for t in times) * path.step
    if turn >= COARSE_STEP_ANGLE:
        logger.warning(f"{path.loop!r} turns up to {turn:.3f} rad per step; use more than {steps} steps")
    determinants = [float(np.linalg.det(B - identity)) for B in path.matrices]
    singular = [float(np.linalg.svd(B - identity, compute_uv=False)[-1]) for B in path.matrices]
    crossings: List[float] = []

    def add(t: float):
        if all(abs(t - s) > path.step / 2 for s in crossings):
            crossings.append(t)

    for j in range(1, steps):
        if determinants[j] * determinants[j + 1] < 0:
            add(brentq(lambda t: float(np.linalg.det(_shifted(path, t))), times[j], times[j + 1], xtol=CROSSING_TOLERANCE))
    for j in range(1, steps + 1):
        right = singular[j + 1] if j < steps else np.inf
        if singular[j] <= singular[j - 1] and singular[j] <= right:
            upper = times[j + 1] if j < steps else 1.0
            result = minimize_scalar(
                lambda t: _smallest_singular_value(path, t),
                bounds=(times[j - 1], upper),
                method="bounded",
                options={"xatol": CROSSING_TOLERANCE},
            )
            scale = max(1.0, float(np.linalg.norm(path.at(result.x))))
            if result.fun < KERNEL_CUTOFF * scale and 0 < result.x < 1:
                add(float(result.x))
    crossings.sort()
    logger.debug(f"Found {len(crossings)} interior crossings: {crossings}")
    return crossings


def cayley_form(path: SymplecticPath, t: float) -> np.ndarray:
    """
    Symmetric M(t) with B(t) = (Id − J₀M)⁻¹(Id + J₀M), i.e. M = −J₀ (B − Id)(B + Id)⁻¹.

    M(t) is singular exactly when B(t) has eigenvalue 1, and on that kernel
    Ṁ restricts to half the crossing form S(t).
    """
    B = path.at(t)
    identity = np.eye(path.loop.dim)
    plus = B + identity
    scale = max(1.0, float(np.linalg.norm(B)))
    if np.linalg.svd(plus, compute_uv=False)[-1] < KERNEL_CUTOFF * scale:
        raise CrossingError(f"B(t) has eigenvalue -1 at t = {t:.12f}")
    X = np.linalg.solve(plus.T, (B - identity).T).T
    M = -symplectic_form(path.loop.dim) @ X
    return (M + M.T) / 2


def crossing_contribution(path: SymplecticPath, t: float, window: Optional[Tuple[float, float]] = None) -> int:
    """
    Total signature of the crossing forms inside ``window`` around the crossing t.

    Read off as half the jump of sign M between the window's ends, so crossings
    that coalesce or carry a multi-dimensional kernel are counted in full. The
    window defaults to one integration step on either side of t.
    """
    scale = max(1.0, float(np.linalg.norm(path.at(t))))
    if _smallest_singular_value(path, t) >= KERNEL_CUTOFF * scale:
        raise CrossingError(f"No kernel found at the crossing t = {t:.12f}")
    before, after = window if window is not None else _window(path, t, t)
    if not before < t < after:
        raise ValueError(f"Window ({before}, {after}) must contain t = {t}")
    jump = _signature(cayley_form(path, after), f"t = {after:.12f}") - _signature(
        cayley_form(path, before), f"t = {before:.12f}"
    )
    return jump // 2


def _window(path: SymplecticPath, first: float, last: float) -> Tuple[float, float]:
    return max(first - path.step, first / 2), min(last + path.step, 1.0)


def _clusters(path: SymplecticPath, crossings: List[float]) -> List[List[float]]:
    """Crossings less than two integration steps apart share one window."""
    clusters: List[List[float]] = []
    for t in crossings:
        if clusters and t - clusters[-1][-1] < 2 * path.step:
            clusters[-1].append(t)
        else:
            clusters.append([t])
    return clusters


def conley_zehnder(loop: SymmetricLoop, steps: int = 256) -> int:
    """
    Maslov index of B by crossing enumeration. The start t = 0 contributes
    half the signature of S(0); every cluster of interior crossings
    contributes the signature of its crossing forms.
    """
    path = require_admissible(loop, steps)
    total = _signature(loop(0.0), "t = 0") / 2
    for cluster in _clusters(path, find_crossings(path)):
        total += crossing_contribution(path, cluster[0], _window(path, cluster[0], cluster[-1]))
    result = int(round(total))
    logger.debug(f"mu_CZ of {loop!r} = {result}")
    return result


def loop_grading(loop: SymmetricLoop, n: Optional[int] = None, steps: int = 256) -> int:
    """|S| = μ_CZ(S) + n − 1 mod 2; n defaults to the loop's ambient half-dimension."""
    n = loop.half_dimension if n is None else n
    return (conley_zehnder(loop, steps) + n - 1) % 2
