# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from sft_sdk.detline.linalg import coker_basis, kernel_basis, rational_matrix, vector
from sft_sdk.detline.element import (
    DetLineElement,
    DisjointUnion,
    Orientation,
    canonical_element,
    det_iso_finite,
    disjoint_union_detline,
    frame_value,
    operator_index,
    relation,
    swap_disjoint_check,
    swap_relation,
    validate,
)
from sft_sdk.detline.stabilize import (
    StabilizedElement,
    stabilize_iso,
    stabilize_twice,
    stabilized_value,
    swap_stabilized,
)
from sft_sdk.detline.selftest import SelfTestReport, run_selftest

__all__ = [
    "rational_matrix",
    "vector",
    "kernel_basis",
    "coker_basis",
    "DetLineElement",
    "DisjointUnion",
    "Orientation",
    "canonical_element",
    "validate",
    "relation",
    "frame_value",
    "operator_index",
    "det_iso_finite",
    "disjoint_union_detline",
    "swap_relation",
    "swap_disjoint_check",
    "StabilizedElement",
    "stabilize_iso",
    "stabilize_twice",
    "stabilized_value",
    "swap_stabilized",
    "SelfTestReport",
    "run_selftest",
]
