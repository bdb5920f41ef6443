# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import unittest

from sft_sdk.boundary import GluedProfile, GluingError, GluingMap, enumerate_gluings, glued_profile
from sft_sdk.tuples import CurveShape, OrbitLabel


class TestEnumerateGluings(unittest.TestCase):
    def setUp(self):
        self.g = [OrbitLabel(f"g{i}", 1, sort_key=i) for i in range(5)]

    def test_distinct_orbits(self):
        upper = CurveShape(pos=(self.g[4],), neg=(self.g[1], self.g[2]))
        lower = CurveShape(pos=(self.g[1], self.g[2], self.g[3]))
        gluings = enumerate_gluings(upper, lower)
        self.assertEqual([g.pairs for g in gluings], [((0, 0),), ((1, 1),), ((0, 0), (1, 1))])
        self.assertEqual([g.tau for g in gluings], [1, 1, 2])

    def test_no_common_orbits(self):
        upper = CurveShape(pos=(self.g[4],), neg=(self.g[1],))
        lower = CurveShape(pos=(self.g[2],))
        self.assertEqual(enumerate_gluings(upper, lower), [])

    def test_repeated_orbit(self):
        """Partial bijections between two copies of the same orbit on each side."""
        even = OrbitLabel("e", 0)
        upper = CurveShape(pos=(self.g[1],), neg=(even, even))
        lower = CurveShape(pos=(even, even), neg=(self.g[2],))
        gluings = enumerate_gluings(upper, lower)
        self.assertEqual(len(gluings), 6)
        self.assertEqual(sum(1 for g in gluings if g.tau == 1), 4)
        self.assertEqual(
            sorted(g.pairs for g in gluings if g.tau == 2),
            [((0, 0), (1, 1)), ((0, 1), (1, 0))],
        )

    def test_gluing_map(self):
        gluing = GluingMap(((1, 0), (0, 2)))
        self.assertEqual(gluing.pairs, ((0, 2), (1, 0)))
        self.assertEqual(gluing.domain, (0, 1))
        self.assertEqual(gluing.image, (2, 0))
        self.assertEqual(gluing.as_dict(), {0: 2, 1: 0})
        self.assertEqual(str(gluing), "{0->2, 1->0}")


class TestGluedProfile(unittest.TestCase):
    def setUp(self):
        self.g1, self.g2, self.g3, self.g4 = (OrbitLabel(f"g{i}", 1, sort_key=i) for i in range(1, 5))
        self.upper = CurveShape(pos=(self.g4,), neg=(self.g1, self.g2), homology=(1, 0))
        self.lower = CurveShape(pos=(self.g2, self.g3, self.g1), homology=(0, 2))

    def test_single_gluing(self):
        profile = glued_profile(self.upper, self.lower, GluingMap(((0, 2),)))
        self.assertEqual(profile.genus, 0)
        self.assertEqual(profile.hbar, -1)
        self.assertEqual(profile.pos, (self.g2, self.g3, self.g4))
        self.assertEqual(profile.neg, (self.g2,))
        self.assertEqual(profile.homology, (1, 2))
        self.assertFalse(profile.degenerate)

    def test_double_gluing(self):
        profile = glued_profile(self.upper, self.lower, GluingMap(((0, 2), (1, 0))))
        self.assertEqual(profile.genus, 1)
        self.assertEqual(profile.pos, (self.g3, self.g4))
        self.assertEqual(profile.neg, ())

    def test_key_round_trip(self):
        profile = glued_profile(self.upper, self.lower, GluingMap(((0, 2),)))
        self.assertEqual(GluedProfile.from_key(profile.monomial_key()), profile)
        self.assertEqual(profile.to_record(rank=3), {
            "genus": 0, "pos": ["g2", "g3", "g4"], "neg": ["g2"], "A": [1, 2, 0], "hbar": -1,
        })

    def test_degenerate(self):
        profile = GluedProfile(genus=0, pos=(self.g1, self.g1), neg=())
        self.assertTrue(profile.degenerate)

    def test_invalid_gluings(self):
        with self.assertRaises(GluingError):
            glued_profile(self.upper, self.lower, GluingMap(((0, 0),)))
        with self.assertRaises(GluingError):
            glued_profile(self.upper, self.lower, GluingMap(((2, 0),)))
        with self.assertRaises(GluingError):
            glued_profile(self.upper, self.lower, GluingMap(((0, 5),)))
        with self.assertRaises(GluingError):
            glued_profile(self.upper, self.lower, GluingMap(()))
        with self.assertRaises(GluingError):
            glued_profile(self.upper, self.lower, GluingMap(((0, 2), (1, 2))))


if __name__ == "__main__":
    unittest.main()
