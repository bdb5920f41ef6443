# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from sft_sdk.czindex.loops import SymmetricLoop, load_loop, symplectic_form
from sft_sdk.czindex.path import SymplecticPath, solve_symplectic_path
from sft_sdk.czindex.index import (
    AdmissibilityError,
    CrossingError,
    cayley_form,
    conley_zehnder,
    find_crossings,
    is_admissible,
    loop_grading,
)
from sft_sdk.czindex.spectral import TruncationError, max_weight, operator_spectrum, spectral_gap

__all__ = [
    "SymmetricLoop",
    "load_loop",
    "symplectic_form",
    "SymplecticPath",
    "solve_symplectic_path",
    "AdmissibilityError",
    "CrossingError",
    "TruncationError",
    "is_admissible",
    "cayley_form",
    "conley_zehnder",
    "find_crossings",
    "loop_grading",
    "spectral_gap",
    "operator_spectrum",
    "max_weight",
]
