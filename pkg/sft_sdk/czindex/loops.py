# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Sequence, Union

import numpy as np
import yaml

logger = logging.getLogger(__name__)


def symplectic_form(dim: int) -> np.ndarray:
    """J₀ = [[0, −I], [I, 0]] on R^dim."""
    if dim < 2 or dim % 2:
        raise ValueError(f"Loop dimension must be even and >= 2, got {dim}")
    half = dim // 2
    J = np.zeros((dim, dim))
    J[:half, half:] = -np.eye(half)
    J[half:, :half] = np.eye(half)
    return J


def _symmetrize(matrix: np.ndarray) -> np.ndarray:
    return (matrix + matrix.T) / 2


class SymmetricLoop:
    """
    Loop t ↦ S(t) of symmetric matrices on R^dim with period 1, stored as
    S(t) = Σ_k C_k cos 2πkt + D_k sin 2πkt.
    """

    def __init__(
            self,
            dim: int,
            cos: Optional[Mapping[int, np.ndarray]] = None,
            sin: Optional[Mapping[int, np.ndarray]] = None,
            n: Optional[int] = None
            ):
        symplectic_form(dim)
        self.dim = dim
        self.n = n
        self.cos: Dict[int, np.ndarray] = {}
        self.sin: Dict[int, np.ndarray] = {}
        for table, source, name in ((self.cos, cos or {}, "cos"), (self.sin, sin or {}, "sin")):
            for k, matrix in source.items():
                matrix = np.asarray(matrix, dtype=float)
                if matrix.shape != (dim, dim):
                    raise ValueError(f"{name} coefficient k={k} has shape {matrix.shape}, expected ({dim}, {dim})")
                if k < 0:
                    raise ValueError(f"{name} coefficient index must be >= 0, got {k}")
                table[k] = table.get(k, np.zeros((dim, dim))) + _symmetrize(matrix)
        self.sin.pop(0, None)

    @classmethod
    def constant(cls, matrix, n: Optional[int] = None) -> "SymmetricLoop":
        matrix = np.asarray(matrix, dtype=float)
        return cls(matrix.shape[0], cos={0: matrix}, n=n)

    @classmethod
    def scalar(cls, a: float, dim: int = 2, n: Optional[int] = None) -> "SymmetricLoop":
        return cls.constant(a * np.eye(dim), n=n)

    @classmethod
    def from_samples(cls, samples: Sequence, n: Optional[int] = None) -> "SymmetricLoop":
        """Loop through uniform samples S(j/N), j = 0…N−1, via the real FFT."""
        data = np.asarray(samples, dtype=float)
        if data.ndim != 3 or data.shape[1] != data.shape[2]:
            raise ValueError(f"Samples must be a list of square matrices, got shape {data.shape}")
        count = data.shape[0]
        if count < 1:
            raise ValueError("At least one sample is required")
        spectrum = np.fft.rfft(data, axis=0) / count
        cos, sin = {0: spectrum[0].real}, {}
        for k in range(1, spectrum.shape[0]):
            nyquist = count % 2 == 0 and k == count // 2
            cos[k] = spectrum[k].real * (1 if nyquist else 2)
            if not nyquist:
                sin[k] = -spectrum[k].imag * 2
        return cls(data.shape[1], cos=cos, sin=sin, n=n)

    @classmethod
    def from_mapping(cls, data: Any, source: str = "<memory>") -> "SymmetricLoop":
        if not isinstance(data, dict):
            raise ValueError(f"{source}: loop document must be a mapping")
        n = data.get("n")
        if n is not None and (isinstance(n, bool) or not isinstance(n, int) or n < 1):
            raise ValueError(f"{source}: 'n' must be a positive integer, got {n!r}")
        if "samples" in data:
            try:
                return cls.from_samples(data["samples"], n=n)
            except ValueError as e:
                raise ValueError(f"{source}: samples: {e}")
        if "fourier" not in data:
            raise ValueError(f"{source}: a loop needs 'fourier' or 'samples'")
        dim = data.get("dim")
        if isinstance(dim, bool) or not isinstance(dim, int):
            raise ValueError(f"{source}: 'dim' must be an integer, got {dim!r}")
        cos: Dict[int, np.ndarray] = {}
        sin: Dict[int, np.ndarray] = {}
        for i, entry in enumerate(data["fourier"]):
            where = f"{source}: fourier[{i}]"
            if not isinstance(entry, dict) or "k" not in entry or "matrix" not in entry:
                raise ValueError(f"{where}: entries need 'k' and 'matrix'")
            kind = entry.get("kind", "cos")
            if kind not in ("cos", "sin"):
                raise ValueError(f"{where}: 'kind' must be 'cos' or 'sin', got {kind!r}")
            table = cos if kind == "cos" else sin
            k = entry["k"]
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise ValueError(f"{where}: 'k' must be a non-negative integer, got {k!r}")
            matrix = np.asarray(entry["matrix"], dtype=float)
            table[k] = table.get(k, 0) + matrix
        try:
            return cls(dim, cos=cos, sin=sin, n=n)
        except ValueError as e:
            raise ValueError(f"{source}: {e}")

    @property
    def modes(self) -> int:
        return max(list(self.cos) + list(self.sin) + [0])

    @property
    def half_dimension(self) -> int:
        """Ambient n, defaulting to dim/2 + 1 for loops in R^{2n−2}."""
        return self.n if self.n is not None else self.dim // 2 + 1

    def __call__(self, t: float) -> np.ndarray:
        result = np.zeros((self.dim, self.dim))
        for k, C in self.cos.items():
            result += C * np.cos(2 * np.pi * k * t)
        for k, D in self.sin.items():
            result += D * np.sin(2 * np.pi * k * t)
        return _symmetrize(result)

    def fourier(self, k: int) -> np.ndarray:
        """Complex coefficient Ŝ_k of S(t) = Σ Ŝ_k e^{2πikt}."""
        m = abs(k)
        zero = np.zeros((self.dim, self.dim))
        if m == 0:
            return self.cos.get(0, zero).astype(complex)
        coefficient = (self.cos.get(m, zero) - 1j * self.sin.get(m, zero)) / 2
        return coefficient if k > 0 else coefficient.conj()

    def __repr__(self):
        return f"SymmetricLoop(dim={self.dim}, modes={self.modes})"


def load_loop(path: Union[str, Path]) -> SymmetricLoop:
    path = Path(path)
    if not path.is_file():
        raise ValueError(f"{path}: file not found")
    with open(path, "r") as file:
        try:
            data = yaml.safe_load(file)
        except yaml.YAMLError as e:
            raise ValueError(f"{path}: cannot parse: {e}")
    loop = SymmetricLoop.from_mapping(data, source=str(path))
    logger.debug(f"Loaded {loop!r} from {path}")
    return loop
