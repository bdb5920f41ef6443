# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from .orbits import OrbitLabel, check_grading, grading_of
from .shapes import CRTupleShape, CurveShape, Side, trivial_tuple, disjoint_union, glue_shapes
from .index import ind_pm, ind_total, fredholm_index, virtual_dimension, validate_rigid

__all__ = ["OrbitLabel",
           "check_grading",
           "grading_of",
           "CRTupleShape",
           "CurveShape",
           "Side",
           "trivial_tuple",
           "disjoint_union",
           "glue_shapes",
           "ind_pm",
           "ind_total",
           "fredholm_index",
           "virtual_dimension",
           "validate_rigid",
           ]
