# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from .element import Kind, Generator, MonomialKey, WeylMonomial, WeylElement, q, p, normal_order, mul, grade
from .algebra import super_commutator, differential_D, capping_change, restrict_sector
from .potential import (
    build_hamiltonian,
    h_square,
    contact_d,
    contact_d_element,
    contact_d_squared,
)

__all__ = ["Kind",
           "Generator",
           "MonomialKey",
           "WeylMonomial",
           "WeylElement",
           "q",
           "p",
           "normal_order",
           "mul",
           "grade",
           "super_commutator",
           "differential_D",
           "capping_change",
           "restrict_sector",
           "build_hamiltonian",
           "h_square",
           "contact_d",
           "contact_d_element",
           "contact_d_squared",
           ]
