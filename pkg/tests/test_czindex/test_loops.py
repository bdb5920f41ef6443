# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import math
import unittest
from pathlib import Path

import numpy as np

from sft_sdk.czindex import (
    SymmetricLoop,
    conley_zehnder,
    load_loop,
    solve_symplectic_path,
    spectral_gap,
    symplectic_form,
)

DATA = Path(__file__).resolve().parents[2] / "data"
PI = math.pi


class TestSymmetricLoop(unittest.TestCase):
    def setUp(self):
        self.A = np.array([[1.0, 0.5], [0.5, -2.0]])
        self.D = np.array([[0.0, 1.0], [1.0, 0.0]])
        self.loop = SymmetricLoop(2, cos={0: 3 * np.eye(2), 1: self.A}, sin={2: self.D})

    def test_evaluation(self):
        t = 0.3
        expected = 3 * np.eye(2) + self.A * np.cos(2 * PI * t) + self.D * np.sin(4 * PI * t)
        self.assertTrue(np.allclose(self.loop(t), expected))
        self.assertEqual(self.loop.modes, 2)

    def test_symmetrized(self):
        loop = SymmetricLoop.constant([[1.0, 2.0], [0.0, 1.0]])
        self.assertTrue(np.allclose(loop(0.0), [[1.0, 1.0], [1.0, 1.0]]))

    def test_fourier_coefficients(self):
        self.assertTrue(np.allclose(self.loop.fourier(1), self.A / 2))
        self.assertTrue(np.allclose(self.loop.fourier(-2), np.conj(-1j * self.D / 2)))
        self.assertTrue(np.allclose(self.loop.fourier(5), np.zeros((2, 2))))

    def test_from_samples(self):
        count = 16
        samples = [self.loop(j / count) for j in range(count)]
        rebuilt = SymmetricLoop.from_samples(samples)
        for t in (0.0, 0.17, 0.5, 0.91):
            self.assertTrue(np.allclose(rebuilt(t), self.loop(t)))

    def test_half_dimension(self):
        self.assertEqual(SymmetricLoop.scalar(1.0).half_dimension, 2)
        self.assertEqual(SymmetricLoop.scalar(1.0, dim=4).half_dimension, 3)
        self.assertEqual(SymmetricLoop.scalar(1.0, n=5).half_dimension, 5)

    def test_invalid_dimension(self):
        with self.assertRaises(ValueError):
            symplectic_form(3)
        with self.assertRaises(ValueError):
            SymmetricLoop(0)
        with self.assertRaises(ValueError):
            SymmetricLoop(2, cos={0: np.eye(3)})

    def test_from_mapping_errors(self):
        with self.assertRaises(ValueError):
            SymmetricLoop.from_mapping({"dim": 2})
        with self.assertRaises(ValueError):
            SymmetricLoop.from_mapping({"dim": 2, "fourier": [{"k": 0, "matrix": [[1, 0], [0, 1]], "kind": "tan"}]})
        with self.assertRaises(ValueError):
            SymmetricLoop.from_mapping({"dim": 2, "fourier": [{"k": -1, "matrix": [[1, 0], [0, 1]]}]})
        with self.assertRaises(ValueError) as ctx:
            SymmetricLoop.from_mapping({"dim": 3, "fourier": []}, source="loop.json")
        self.assertTrue(str(ctx.exception).startswith("loop.json: "))

    def test_from_mapping_samples(self):
        loop = SymmetricLoop.from_mapping({"samples": [[[2.0, 0.0], [0.0, 2.0]]] * 4, "n": 3})
        self.assertTrue(np.allclose(loop(0.4), 2 * np.eye(2)))
        self.assertEqual(loop.half_dimension, 3)


class TestSymplecticPath(unittest.TestCase):
    def test_defect_is_small(self):
        for a in (PI / 2, PI, 5.0):
            with self.subTest(a=a):
                path = solve_symplectic_path(SymmetricLoop.scalar(a))
                self.assertLess(path.symplecticity_defect(), 1e-8)

    def test_rotation_endpoint(self):
        path = solve_symplectic_path(SymmetricLoop.scalar(PI))
        self.assertTrue(np.allclose(path.endpoint, -np.eye(2), atol=1e-8))
        self.assertTrue(np.allclose(path.at(0.5), [[0.0, -1.0], [1.0, 0.0]], atol=1e-8))
        self.assertEqual(path.steps, 256)

    def test_invalid_arguments(self):
        loop = SymmetricLoop.scalar(1.0)
        with self.assertRaises(ValueError):
            solve_symplectic_path(loop, steps=4)
        with self.assertRaises(ValueError):
            solve_symplectic_path(loop).at(1.5)


class TestShippedLoops(unittest.TestCase):
    def test_rotation_pi(self):
        loop = load_loop(DATA / "rotation-pi.json")
        self.assertEqual(conley_zehnder(loop), 1)
        self.assertAlmostEqual(spectral_gap(loop), PI, places=9)

    def test_rotation_half_pi(self):
        loop = load_loop(DATA / "rotation-half-pi.json")
        self.assertEqual(conley_zehnder(loop), 1)
        self.assertAlmostEqual(spectral_gap(loop), PI / 2, places=9)

    def test_missing_file(self):
        with self.assertRaises(ValueError):
            load_loop(DATA / "missing.json")


if __name__ == "__main__":
    unittest.main()
