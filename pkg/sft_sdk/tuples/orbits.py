# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class OrbitLabel:
    """
    A Reeb orbit as seen by the combinatorics: identifier, Z2 grading,
    multiplicity over the underlying simple orbit and a position in the
    global orbit order.
    """
    id: str
    grading: int
    multiplicity: int = 1
    sort_key: int = 0
    mu_cz: Optional[int] = None

    def __post_init__(self):
        if self.grading not in (0, 1):
            raise ValueError(f"Orbit {self.id}: grading must be 0 or 1, got {self.grading!r}")
        if self.multiplicity < 1:
            raise ValueError(f"Orbit {self.id}: multiplicity must be >= 1, got {self.multiplicity}")

    @property
    def odd(self) -> bool:
        return self.grading == 1

    def __str__(self):
        return self.id


def check_grading(orbit: OrbitLabel, n: int) -> bool:
    """True when the orbit carries no mu_cz or when |orbit| = mu_cz + n - 1 mod 2."""
    if orbit.mu_cz is None:
        return True
    return (orbit.mu_cz + n - 1) % 2 == orbit.grading


def grading_of(end: Union[OrbitLabel, int]) -> int:
    """Z2 grading of a puncture given either as an orbit or as a bare loop grading."""
    if isinstance(end, OrbitLabel):
        return end.grading
    return int(end) % 2
