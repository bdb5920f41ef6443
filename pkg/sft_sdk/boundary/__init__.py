# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from .gluing import GluingError, GluingMap, GluedProfile, enumerate_gluings, glued_profile
from .verifier import (
    Contribution,
    ClaimEntry,
    ClaimReport,
    boundary_contributions,
    geometric_coefficient,
    claim_check,
)

__all__ = ["GluingError",
           "GluingMap",
           "GluedProfile",
           "enumerate_gluings",
           "glued_profile",
           "Contribution",
           "ClaimEntry",
           "ClaimReport",
           "boundary_contributions",
           "geometric_coefficient",
           "claim_check",
           ]
