# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple, Union

from sft_sdk.tuples.orbits import OrbitLabel, grading_of

End = Union[OrbitLabel, int]


class Side(Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, value: Union["Side", str]) -> "Side":
        if isinstance(value, Side):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"Side must be '+' or '-', got {value!r}")


@dataclass(frozen=True)
class CRTupleShape:
    """
    Combinatorial shadow of a Cauchy-Riemann tuple.

    ``pos`` and ``neg`` list the punctures in order, either as orbits or as bare
    Z2 loop gradings. ``c1`` is the relative first Chern number, ``n`` the
    ambient half-dimension. ``genus`` is the total genus over all
    ``components`` of the surface.
    """
    pos: Tuple[End, ...] = ()
    neg: Tuple[End, ...] = ()
    genus: int = 0
    c1: int = 0
    n: int = 2
    components: int = 1

    def __post_init__(self):
        object.__setattr__(self, "pos", tuple(self.pos))
        object.__setattr__(self, "neg", tuple(self.neg))
        if self.genus < 0:
            raise ValueError(f"Genus must be >= 0, got {self.genus}")
        if self.components < 1:
            raise ValueError(f"A tuple has at least one component, got {self.components}")
        for end in self.pos + self.neg:
            if isinstance(end, OrbitLabel) and end.multiplicity < 1:
                raise ValueError(f"Orbit {end.id} has multiplicity {end.multiplicity}")

    def ends(self, side: Union[Side, str]) -> Tuple[End, ...]:
        return self.pos if Side.parse(side) is Side.PLUS else self.neg

    def gradings(self, side: Union[Side, str]) -> Tuple[int, ...]:
        return tuple(grading_of(end) for end in self.ends(side))

    @property
    def pos_gradings(self) -> Tuple[int, ...]:
        return self.gradings(Side.PLUS)

    @property
    def neg_gradings(self) -> Tuple[int, ...]:
        return self.gradings(Side.MINUS)

    @property
    def k_plus(self) -> int:
        return len(self.pos)

    @property
    def k_minus(self) -> int:
        return len(self.neg)

    @property
    def euler_characteristic(self) -> int:
        """Euler characteristic of the closed surface, 2·components − 2·genus."""
        return 2 * self.components - 2 * self.genus


@dataclass(frozen=True)
class CurveShape(CRTupleShape):
    """A rigid curve: tuple shape plus homology class and orientation sign."""
    homology: Tuple[int, ...] = field(default_factory=tuple)
    sign: int = 1

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "homology", tuple(int(a) for a in self.homology))
        if self.sign not in (1, -1):
            raise ValueError(f"Curve sign must be +1 or -1, got {self.sign!r}")


def trivial_tuple(end: End, n: int = 2) -> CRTupleShape:
    """The trivial tuple: a cylinder with the same asymptotic loop at both ends."""
    return CRTupleShape(pos=(end,), neg=(end,), genus=0, c1=0, n=n)


def disjoint_union(first: CRTupleShape, second: CRTupleShape) -> CRTupleShape:
    """Shape of first ⊔ second with ends listed first's then second's on each side."""
    if first.n != second.n:
        raise ValueError(f"Cannot take disjoint union of tuples with n={first.n} and n={second.n}")
    return CRTupleShape(
        pos=first.pos + second.pos,
        neg=first.neg + second.neg,
        genus=first.genus + second.genus,
        c1=first.c1 + second.c1,
        n=first.n,
        components=first.components + second.components,
    )


def glue_shapes(upper: CRTupleShape, lower: CRTupleShape, tau: int) -> CRTupleShape:
    """
    Glue the first ``tau`` negative ends of ``upper`` to the last ``tau``
    positive ends of ``lower``.

    The result lists the unglued positive ends of ``lower`` before the positive
    ends of ``upper``, and the negative ends of ``lower`` before the unglued
    negative ends of ``upper``. Both inputs must be connected.
    """
    if upper.components != 1 or lower.components != 1:
        raise ValueError("Only connected tuples can be glued")
    if upper.n != lower.n:
        raise ValueError(f"Cannot glue tuples with n={upper.n} and n={lower.n}")
    if tau < 0 or tau > upper.k_minus or tau > lower.k_plus:
        raise ValueError(f"Cannot glue along {tau} ends: upper has {upper.k_minus} negative, lower has {lower.k_plus} positive")
    matched = lower.k_plus - tau
    if upper.neg_gradings[:tau] != lower.pos_gradings[matched:]:
        raise ValueError(
            f"Gluing profile mismatch: {upper.neg_gradings[:tau]} against {lower.pos_gradings[matched:]}"
        )
    return CRTupleShape(
        pos=lower.pos[:matched] + upper.pos,
        neg=lower.neg + upper.neg[tau:],
        genus=upper.genus + lower.genus + tau - 1,
        c1=upper.c1 + lower.c1,
        n=upper.n,
    )
