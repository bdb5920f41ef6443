# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from .convention import Convention
from .calculus import (
    reorder_sign,
    swap_ends_sign,
    disjoint_sign,
    disjoint_swap_sign,
    gluing_sign,
    partial_glue_signs,
    boundary_sign,
)

__all__ = ["Convention",
           "reorder_sign",
           "swap_ends_sign",
           "disjoint_sign",
           "disjoint_swap_sign",
           "gluing_sign",
           "partial_glue_signs",
           "boundary_sign",
           ]
