# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from sft_sdk.detline import run_selftest
from sft_sdk.detline.linalg import columns, image_basis, rank
from sft_sdk.detline.selftest import CHECKS, random_operator, random_supplement


class TestSelfTest(unittest.TestCase):
    def test_default_sweep(self):
        """Two hundred random instances with dimensions up to four."""
        report = run_selftest(seed=0, count=200, max_dim=4)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.passed_counts, {name: 200 for name in CHECKS})

    def test_other_seeds(self):
        for seed in (1, 42):
            report = run_selftest(seed=seed, count=40, max_dim=3)
            self.assertTrue(report.passed, report.failures)

    def test_deterministic_record(self):
        first = run_selftest(seed=5, count=10).to_record()
        second = run_selftest(seed=5, count=10).to_record()
        self.assertEqual(first, second)
        self.assertEqual(first["count"], 10)
        self.assertTrue(first["ok"])
        self.assertEqual(sorted(first["passed"]), sorted(CHECKS))

    @settings(max_examples=30, derandomize=True, deadline=None)
    @given(rng=st.randoms(use_true_random=False))
    def test_random_supplement_spans(self, rng):
        M = random_operator(rng, 4)
        F = random_supplement(rng, M)
        self.assertEqual(rank(columns(image_basis(M) + F, M.rows)), M.rows)


if __name__ == "__main__":
    unittest.main()
