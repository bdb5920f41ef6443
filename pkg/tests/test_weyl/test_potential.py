# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import json
import unittest
from fractions import Fraction
from pathlib import Path

from sft_sdk.cli.dataset import dataset_from_mapping, load_dataset
from sft_sdk.weyl import (
    MonomialKey,
    WeylElement,
    build_hamiltonian,
    contact_d,
    contact_d_element,
    contact_d_squared,
    h_square,
    p,
    q,
)

DATA = Path(__file__).resolve().parents[2] / "data"

ADMISSIBLE = [(1, 1, 1, 1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1)]


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _orbits(ids, odd=(), multiplicity=None):
    multiplicity = multiplicity or {}
    return [
        {"id": orbit_id, "grading": 1 if orbit_id in odd else 0, "multiplicity": multiplicity.get(orbit_id, 1), "sort_key": i}
        for i, orbit_id in enumerate(ids)
    ]


class TestFourOrbitExample(unittest.TestCase):
    def setUp(self):
        self.path = DATA / "four-orbit-example.json"

    def test_hamiltonian(self):
        ds = load_dataset(self.path)
        g1, g2, g3, g4 = (ds.orbit(f"g{i}") for i in range(1, 5))
        H = build_hamiltonian(ds)
        self.assertEqual(H.terms, {
            MonomialKey((g1, g2), (g4,), -1, ()): Fraction(2),
            MonomialKey((), (g1, g2, g3), -1, ()): Fraction(3),
        })
        self.assertEqual(H.format_text(), "+3 p[g3] p[g2] p[g1] hbar^-1 +2 q[g1] q[g2] p[g4] hbar^-1")
        self.assertEqual(H.grade(), 1)

    def test_h_square_at_every_admissible_grading(self):
        for d in ADMISSIBLE:
            d1, d2, d3, d4 = d
            ds = load_dataset(self.path, gradings=d)
            g1, g2, g3, g4 = (ds.orbit(f"g{i}") for i in range(1, 5))
            expected = {
                MonomialKey((g2,), (g2, g3, g4), -1, ()): Fraction(6 * _sign(d2 + d2 * d3 + d2 * d4 + d3 * d4)),
                MonomialKey((g1,), (g1, g3, g4), -1, ()): Fraction(6 * _sign(d1 + d1 * d2 + d1 * d4 + d3 * d4)),
                MonomialKey((), (g3, g4), 0, ()): Fraction(6 * _sign(d3 * d4)),
            }
            with self.subTest(d=d):
                self.assertEqual(h_square(ds).terms, expected)

    def test_printed_values(self):
        ds = load_dataset(self.path)
        self.assertEqual(
            h_square(ds).format_text(),
            "-6 p[g4] p[g3] +6 q[g1] p[g4] p[g3] p[g1] hbar^-1 +6 q[g2] p[g4] p[g3] p[g2] hbar^-1",
        )

    def test_relisted_tuple_with_transformed_count(self):
        with open(self.path) as handle:
            data = json.load(handle)
        original = build_hamiltonian(dataset_from_mapping(data))
        data["curves"][1]["pos"] = ["g2", "g1", "g3"]
        data["curves"][1]["count"] = -3
        self.assertEqual(build_hamiltonian(dataset_from_mapping(data)), original)

    def test_unknown_prefactor(self):
        ds = load_dataset(self.path)
        with self.assertRaises(ValueError):
            build_hamiltonian(ds, prefactor="sym")


class TestHamiltonianOptions(unittest.TestCase):
    def test_inverse_multiplicity_prefactor(self):
        ds = dataset_from_mapping({
            "n": 2,
            "orbits": _orbits(["x", "y"], odd=("x",), multiplicity={"y": 2}),
            "curves": [{"pos": ["x"], "neg": ["y"], "count": 4}],
        })
        x, y = ds.orbit("x"), ds.orbit("y")
        key = MonomialKey((y,), (x,), -1, ())
        self.assertEqual(build_hamiltonian(ds).terms, {key: Fraction(4)})
        self.assertEqual(build_hamiltonian(ds, "inv-mneg").terms, {key: Fraction(2)})

    def test_non_rigid_records_are_skipped(self):
        ds = dataset_from_mapping({
            "n": 2,
            "orbits": _orbits(["x", "y"], odd=("x",)),
            "curves": [
                {"pos": ["x"], "neg": ["y"], "count": 1},
                {"pos": ["y"], "neg": ["y"], "count": 5, "rigid": False},
            ],
        })
        self.assertEqual(len(build_hamiltonian(ds)), 1)

    def test_genus_sets_hbar_power(self):
        ds = dataset_from_mapping({
            "n": 2,
            "h2_rank": 1,
            "orbits": _orbits(["x"], odd=("x",)),
            "curves": [{"genus": 2, "pos": ["x"], "homology": [3], "count": "1/2"}],
        })
        monomial = next(iter(build_hamiltonian(ds)))
        self.assertEqual(monomial.hbar, 1)
        self.assertEqual(monomial.homology, (3,))
        self.assertEqual(monomial.coeff, Fraction(1, 2))


class TestContactDifferential(unittest.TestCase):
    def setUp(self):
        self.ds = load_dataset(DATA / "chom-consistent.json")
        self.a, self.b, self.c, self.d = (self.ds.orbit(i) for i in "abcd")

    def test_h_square_vanishes(self):
        self.assertFalse(h_square(self.ds))

    def test_values(self):
        self.assertEqual(
            contact_d(self.ds, self.d),
            WeylElement.generator(q(self.b)) + WeylElement.generator(q(self.c)),
        )
        self.assertEqual(contact_d(self.ds, self.b), WeylElement.generator(q(self.a)))
        self.assertEqual(contact_d(self.ds, self.c), -WeylElement.generator(q(self.a)))
        self.assertFalse(contact_d(self.ds, self.a))

    def test_d_squared_vanishes(self):
        for orbit in self.ds.orbits:
            self.assertFalse(contact_d_squared(self.ds, orbit))
            self.assertFalse(contact_d_squared(self.ds, orbit, reverse=True))

    def test_multiplicity_weight(self):
        ds = dataset_from_mapping({
            "n": 2,
            "orbits": _orbits(["x", "y1", "y2"], odd=("x",), multiplicity={"y1": 2}),
            "curves": [{"pos": ["x"], "neg": ["y1", "y2"], "count": 4}],
        })
        y1, y2 = ds.orbit("y1"), ds.orbit("y2")
        self.assertEqual(contact_d(ds, ds.orbit("x")).terms, {MonomialKey((y1, y2), (), 0, ()): Fraction(2)})

    def test_reverse_word_order(self):
        ds = dataset_from_mapping({
            "n": 2,
            "orbits": _orbits(["x", "a1", "a2"], odd=("x", "a1", "a2")),
            "curves": [{"pos": ["x"], "neg": ["a1", "a2"], "count": 1}],
        })
        forward = contact_d(ds, ds.orbit("x"))
        self.assertEqual(contact_d(ds, ds.orbit("x"), reverse=True), -forward)

    def test_odd_derivation(self):
        # ∂(q_d q_b) = ∂(q_d) q_b - q_d ∂(q_b) for odd d
        f = WeylElement.generator(q(self.d)) * WeylElement.generator(q(self.b))
        expected = (
            contact_d(self.ds, self.d) * WeylElement.generator(q(self.b))
            - WeylElement.generator(q(self.d)) * contact_d(self.ds, self.b)
        )
        self.assertEqual(contact_d_element(self.ds, f), expected)

    def test_rejects_p_variables(self):
        with self.assertRaises(ValueError):
            contact_d_element(self.ds, WeylElement.generator(p(self.a)))


if __name__ == "__main__":
    unittest.main()
