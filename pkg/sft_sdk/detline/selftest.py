# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List

from sympy import ImmutableMatrix

from sft_sdk.detline.element import canonical_element, det_iso_finite, frame_value, swap_disjoint_check
from sft_sdk.detline.linalg import Vector, coker_basis, columns, hstack, image_basis, random_matrix
from sft_sdk.detline.stabilize import stabilize_iso, stabilize_twice, stabilized_value, swap_stabilized

logger = logging.getLogger(__name__)

CHECKS = ("swap", "det_iso_finite", "stabilize", "stabilize_twice")


def random_operator(rng: random.Random, max_dim: int) -> ImmutableMatrix:
    rows = rng.randint(0, max_dim)
    cols = rng.randint(0, max_dim)
    return random_matrix(rng, rows, cols, rank_bound=rng.randint(0, min(rows, cols)))


def random_supplement(rng: random.Random, M, extra: int = 2) -> List[Vector]:
    """Random vectors F with im M + span F equal to the whole target."""
    image = image_basis(M)
    result = []
    for v in coker_basis(M):
        for u in image:
            v = ImmutableMatrix(v + rng.randint(-2, 2) * u)
        result.append(v)
    for _ in range(rng.randint(0, extra)):
        result.append(random_matrix(rng, M.rows, 1, bound=2))
    rng.shuffle(result)
    return result


@dataclass
class SelfTestReport:
    seed: int
    count: int
    passed_counts: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in CHECKS})
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "passed": dict(sorted(self.passed_counts.items())),
            "failures": list(self.failures),
            "ok": self.passed,
        }


def _check(report: SelfTestReport, name: str, index: int, outcome: bool) -> None:
    if outcome:
        report.passed_counts[name] += 1
    else:
        report.failures.append(f"{name}[{index}]")
        logger.debug(f"Self-test check {name} failed on instance {index}")


def run_selftest(seed: int = 0, count: int = 200, max_dim: int = 4) -> SelfTestReport:
    """
    Seeded sweep over random operators checking the disjoint-union swap law,
    independence of det_iso_finite from F, and basis independence of
    stabilize_iso in one and in two steps.
    """
    rng = random.Random(seed)
    report = SelfTestReport(seed=seed, count=count)
    for index in range(count):
        L, L2 = random_operator(rng, max_dim), random_operator(rng, max_dim)
        _check(report, "swap", index, swap_disjoint_check(L, L2))

        M = random_operator(rng, max_dim)
        element = canonical_element(M)
        reference = frame_value(M, element)
        first = det_iso_finite(M, random_supplement(rng, M), element)
        second = det_iso_finite(M, random_supplement(rng, M), element)
        _check(report, "det_iso_finite", index, frame_value(M, first) == frame_value(M, second) == reference)

        P = columns(random_supplement(rng, M), M.rows)
        plain = stabilized_value(M, P, stabilize_iso(M, P, element))
        shuffled = stabilized_value(M, P, stabilize_iso(M, P, element, random.Random(rng.random())))
        _check(report, "stabilize", index, plain == shuffled)

        P1 = columns(random_supplement(rng, M, extra=1), M.rows)
        P2 = columns(random_supplement(rng, M, extra=1), M.rows)
        both = hstack(P1, P2)
        forward = stabilize_twice(M, P1, P2, element)
        backward = swap_stabilized(stabilize_twice(M, P2, P1, element, random.Random(rng.random())), M.cols, P2.cols, P1.cols)
        _check(report, "stabilize_twice", index, stabilized_value(M, both, forward) == stabilized_value(M, both, backward))
    logger.debug(f"Self-test seed {seed}: {count} instances, {len(report.failures)} failures")
    return report
