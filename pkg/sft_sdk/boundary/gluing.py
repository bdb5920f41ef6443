# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Tuple

from sft_sdk.tuples import CurveShape, OrbitLabel
from sft_sdk.weyl.element import MonomialKey, add_homology


class GluingError(ValueError):
    """Raised for gluing maps that do not match the curves they are applied to."""


@dataclass(frozen=True)
class GluingMap:
    """
    Partial bijection ϑ from negative puncture positions of the upper curve
    to positive puncture positions of the lower curve, as (neg, pos) pairs
    sorted by the negative position.
    """
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted((int(a), int(b)) for a, b in self.pairs)))

    @property
    def tau(self) -> int:
        return len(self.pairs)

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def image(self) -> Tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def __str__(self):
        return "{" + ", ".join(f"{a}->{b}" for a, b in self.pairs) + "}"


def _sorted_orbits(orbits) -> Tuple[OrbitLabel, ...]:
    return tuple(sorted(orbits, key=lambda o: o.sort_key))


@dataclass(frozen=True)
class GluedProfile:
    """Genus, sorted puncture tuples and homology class of a glued curve."""
    genus: int
    pos: Tuple[OrbitLabel, ...]
    neg: Tuple[OrbitLabel, ...]
    homology: Tuple[int, ...] = ()

    @property
    def hbar(self) -> int:
        return self.genus - 1

    @property
    def degenerate(self) -> bool:
        """True when a side repeats an odd orbit, so the monomial vanishes identically."""
        for side in (self.pos, self.neg):
            if any(a == b and a.odd for a, b in zip(side, side[1:])):
                return True
        return False

    def monomial_key(self) -> MonomialKey:
        return MonomialKey(self.neg, self.pos, self.hbar, self.homology)

    @classmethod
    def from_key(cls, key: MonomialKey) -> "GluedProfile":
        return cls(genus=key.hbar + 1, pos=key.p, neg=key.q, homology=key.homology)

    def to_record(self, rank: int = 0) -> dict:
        homology = list(self.homology) + [0] * max(0, rank - len(self.homology))
        return {
            "genus": self.genus,
            "pos": [o.id for o in self.pos],
            "neg": [o.id for o in self.neg],
            "A": homology,
            "hbar": self.hbar,
        }


def enumerate_gluings(upper: CurveShape, lower: CurveShape) -> List[GluingMap]:
    """
    All nonempty orbit-compatible partial bijections from the negative ends of
    ``upper`` to the positive ends of ``lower``, ordered by size, then domain,
    then image.
    """
    neg, pos = upper.neg, lower.pos
    result = []
    for tau in range(1, min(len(neg), len(pos)) + 1):
        for domain in combinations(range(len(neg)), tau):
            for image in permutations(range(len(pos)), tau):
                if all(neg[i].id == pos[j].id for i, j in zip(domain, image)):
                    result.append(GluingMap(tuple(zip(domain, image))))
    return result


def validate_gluing(upper: CurveShape, lower: CurveShape, gluing: GluingMap) -> None:
    if gluing.tau == 0:
        raise GluingError("A gluing map glues along at least one puncture")
    if len(set(gluing.domain)) != gluing.tau or len(set(gluing.image)) != gluing.tau:
        raise GluingError(f"Gluing map {gluing} is not injective")
    for i, j in gluing.pairs:
        if not 0 <= i < upper.k_minus:
            raise GluingError(f"Gluing map {gluing}: negative position {i} out of range")
        if not 0 <= j < lower.k_plus:
            raise GluingError(f"Gluing map {gluing}: positive position {j} out of range")
        if upper.neg[i].id != lower.pos[j].id:
            raise GluingError(
                f"Gluing map {gluing}: orbit {upper.neg[i].id} cannot be glued to {lower.pos[j].id}"
            )


def glued_words(upper: CurveShape, lower: CurveShape, gluing: GluingMap) -> Tuple[Tuple[OrbitLabel, ...], Tuple[OrbitLabel, ...]]:
    """Unsorted glued tuples: (unglued pos of lower + pos of upper, neg of lower + unglued neg of upper)."""
    image = set(gluing.image)
    domain = set(gluing.domain)
    pos = tuple(o for j, o in enumerate(lower.pos) if j not in image) + upper.pos
    neg = lower.neg + tuple(o for i, o in enumerate(upper.neg) if i not in domain)
    return pos, neg


def glued_profile(upper: CurveShape, lower: CurveShape, gluing: GluingMap) -> GluedProfile:
    validate_gluing(upper, lower, gluing)
    pos, neg = glued_words(upper, lower, gluing)
    return GluedProfile(
        genus=upper.genus + lower.genus + gluing.tau - 1,
        pos=_sorted_orbits(pos),
        neg=_sorted_orbits(neg),
        homology=add_homology(upper.homology, lower.homology),
    )
