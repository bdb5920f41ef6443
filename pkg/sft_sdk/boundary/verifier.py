# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, List, Tuple, Union

from sft_sdk.boundary.gluing import GluedProfile, GluingMap, enumerate_gluings, glued_profile, glued_words
from sft_sdk.signs import Convention, boundary_sign, reorder_sign
from sft_sdk.tuples import CRTupleShape
from sft_sdk.weyl import h_square
from sft_sdk.weyl.element import MonomialKey

if TYPE_CHECKING:
    from sft_sdk.cli.dataset import Dataset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contribution:
    """One broken configuration (u, u′, ϑ) and its signed weight õ^b(w)·counts."""
    upper: int
    lower: int
    gluing: GluingMap
    profile: GluedProfile
    factors: Dict[str, int]
    value: Fraction

    @property
    def sign(self) -> int:
        sign = 1
        for factor in self.factors.values():
            sign *= factor
        return sign

    def to_record(self) -> dict:
        return {
            "upper": self.upper,
            "lower": self.lower,
            "gluing": [list(pair) for pair in self.gluing.pairs],
            "factors": dict(sorted(self.factors.items())),
            "value": f"{self.value.numerator}/{self.value.denominator}",
        }


def _sort_perm(orbits) -> List[int]:
    return sorted(range(len(orbits)), key=lambda i: orbits[i].sort_key)


def _gradings(orbits) -> List[int]:
    return [o.grading for o in orbits]


def _contribution(upper_record, lower_record, gluing: GluingMap, convention: Convention, weighted: bool) -> Contribution:
    u = upper_record.shape
    v = lower_record.shape
    glued = list(gluing.domain)
    free = [i for i in range(u.k_minus) if i not in gluing.domain]
    image = list(gluing.image)
    unglued = [j for j in range(v.k_plus) if j not in gluing.image]

    # bring the glued negative ends of u to the front, the glued positive ends of v to the back
    neg_order = glued + free
    pos_order = unglued + image
    tu = CRTupleShape(pos=u.pos, neg=tuple(u.neg[i] for i in neg_order), genus=u.genus, c1=u.c1, n=u.n)
    tv = CRTupleShape(pos=tuple(v.pos[j] for j in pos_order), neg=v.neg, genus=v.genus, c1=v.c1, n=v.n)

    pos, neg = glued_words(u, v, gluing)
    factors = {
        "reorder_upper": reorder_sign(_gradings(u.neg), neg_order),
        "reorder_lower": reorder_sign(_gradings(v.pos), pos_order),
        "boundary": boundary_sign(tu, tv, gluing.tau, convention),
        "sort": reorder_sign(_gradings(pos), _sort_perm(pos)) * reorder_sign(_gradings(neg), _sort_perm(neg)),
    }
    value = Fraction(upper_record.count) * Fraction(lower_record.count)
    for i in glued:
        multiplicity = u.neg[i].multiplicity
        if multiplicity != 1:
            if not weighted:
                raise ValueError(
                    f"curves[{upper_record.index}]: orbit {u.neg[i].id} has multiplicity {multiplicity}; "
                    "enable multiplicity weighting to glue along it"
                )
            value /= multiplicity
    for factor in factors.values():
        value *= factor
    return Contribution(
        upper=upper_record.index,
        lower=lower_record.index,
        gluing=gluing,
        profile=glued_profile(u, v, gluing),
        factors=factors,
        value=value,
    )


def boundary_contributions(
        ds: "Dataset",
        convention: Union[Convention, str] = Convention.HT,
        weighted: bool = False
        ) -> List[Contribution]:
    """Every ordered pair of rigid records (the same record twice included) and every gluing between them."""
    convention = Convention.parse(convention)
    records = [record for record in ds.curves if record.rigid]
    result = []
    for upper in records:
        for lower in records:
            for gluing in enumerate_gluings(upper.shape, lower.shape):
                result.append(_contribution(upper, lower, gluing, convention, weighted))
    logger.debug(f"boundary_contributions: {len(result)} configurations from {len(records)} records")
    return result


def geometric_coefficient(
        ds: "Dataset",
        profile: GluedProfile,
        convention: Union[Convention, str] = Convention.HT,
        weighted: bool = False
        ) -> Fraction:
    """Σ õ^b(w) over the configurations gluing to ``profile``."""
    target = profile.monomial_key()
    total = Fraction(0)
    for contribution in boundary_contributions(ds, convention, weighted):
        if contribution.profile.monomial_key() == target:
            total += contribution.value
    return total


@dataclass(frozen=True)
class ClaimEntry:
    profile: GluedProfile
    algebraic: Fraction
    geometric: Fraction
    contributions: Tuple[Contribution, ...] = ()

    @property
    def ok(self) -> bool:
        return self.algebraic == -self.geometric

    def to_record(self, rank: int = 0, with_triples: bool = False) -> dict:
        record = {
            "profile": self.profile.to_record(rank),
            "algebraic": f"{self.algebraic.numerator}/{self.algebraic.denominator}",
            "geometric": f"{self.geometric.numerator}/{self.geometric.denominator}",
            "ok": self.ok,
        }
        if with_triples:
            record["triples"] = [c.to_record() for c in self.contributions]
        return record


@dataclass(frozen=True)
class ClaimReport:
    convention: Convention
    entries: Tuple[ClaimEntry, ...] = field(default_factory=tuple)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return all(entry.ok for entry in self.entries)

    def failures(self) -> List[ClaimEntry]:
        return [entry for entry in self.entries if not entry.ok]

    def to_records(self, rank: int = 0) -> List[dict]:
        """Failing entries carry their full triple decomposition."""
        return [entry.to_record(rank, with_triples=not entry.ok) for entry in self.entries]


def claim_check(
        ds: "Dataset",
        convention: Union[Convention, str] = Convention.HT,
        weighted: bool = False
        ) -> ClaimReport:
    """
    Compare every coefficient of H·H with minus the signed count of broken
    configurations gluing to the same profile.
    """
    convention = Convention.parse(convention)
    square = h_square(ds)
    grouped: Dict[MonomialKey, List[Contribution]] = {}
    skipped = 0
    for contribution in boundary_contributions(ds, convention, weighted):
        if contribution.profile.degenerate:
            skipped += 1
            continue
        grouped.setdefault(contribution.profile.monomial_key(), []).append(contribution)
    if skipped:
        logger.debug(f"claim_check: skipped {skipped} configurations with a repeated odd orbit")

    keys = set(square.terms) | set(grouped)
    entries = []
    for key in sorted(keys, key=MonomialKey.order):
        contributions = tuple(grouped.get(key, ()))
        entries.append(ClaimEntry(
            profile=contributions[0].profile if contributions else GluedProfile.from_key(key),
            algebraic=square.coefficient(key),
            geometric=sum((c.value for c in contributions), Fraction(0)),
            contributions=contributions,
        ))
    report = ClaimReport(convention=convention, entries=tuple(entries), skipped=skipped)
    logger.debug(f"claim_check: {len(entries)} profiles, {len(report.failures())} failures")
    return report
