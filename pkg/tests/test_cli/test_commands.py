# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import json
import math
import tempfile
import unittest
from pathlib import Path

from sft_sdk.cli import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, run
from sft_sdk.cli.commands import parse_eps, parse_gradings

DATA = Path(__file__).resolve().parents[2] / "data"
FOUR_ORBIT = str(DATA / "four-orbit-example.json")
CHOM = str(DATA / "chom-consistent.json")


def run_json(command, **flags):
    code, text = run(command, flags)
    return code, json.loads(text)


class TestParsers(unittest.TestCase):
    def test_parse_gradings(self):
        self.assertIsNone(parse_gradings(None))
        self.assertEqual(parse_gradings("1,0,0,1"), [1, 0, 0, 1])
        self.assertEqual(parse_gradings([0, 1]), [0, 1])
        for value in ("1,2", "a,b", "1,,0"):
            with self.subTest(value=value):
                with self.assertRaises(ValueError):
                    parse_gradings(value)

    def test_parse_eps(self):
        self.assertEqual(parse_eps(None), {})
        self.assertEqual(parse_eps("g1=-1, g3=+1"), {"g1": -1, "g3": 1})
        self.assertEqual(parse_eps({"a": -1}), {"a": -1})
        for value in ("g1", "g1=2", "g1=x"):
            with self.subTest(value=value):
                with self.assertRaises(ValueError):
                    parse_eps(value)


class TestHamiltonianCommands(unittest.TestCase):
    def test_hamiltonian_json(self):
        code, report = run_json("hamiltonian", dataset=FOUR_ORBIT)
        self.assertEqual(code, EXIT_OK)
        self.assertFalse(report["zero"])
        self.assertEqual(report["terms"], [
            {"q": [], "p": ["g3", "g2", "g1"], "hbar": -1, "A": [], "coeff": "3/1"},
            {"q": ["g1", "g2"], "p": ["g4"], "hbar": -1, "A": [], "coeff": "2/1"},
        ])

    def test_hamiltonian_text(self):
        code, text = run("hamiltonian", {"dataset": FOUR_ORBIT, "out": "text"})
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, "+3 p[g3] p[g2] p[g1] hbar^-1 +2 q[g1] q[g2] p[g4] hbar^-1")

    def test_h_square_text(self):
        code, text = run("h-square", {"dataset": FOUR_ORBIT, "out": "text"})
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            text,
            "-6 p[g4] p[g3] +6 q[g1] p[g4] p[g3] p[g1] hbar^-1 +6 q[g2] p[g4] p[g3] p[g2] hbar^-1",
        )

    def test_h_square_geometry_consistent(self):
        code, report = run_json("h-square", dataset=CHOM)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["zero"])
        self.assertTrue(report["geometry_consistent"])

    def test_output_is_deterministic(self):
        first = run("h-square", {"dataset": FOUR_ORBIT, "gradings": "0,0,1,1"})
        second = run("h-square", {"dataset": FOUR_ORBIT, "gradings": "0,0,1,1"})
        self.assertEqual(first, second)

    def test_invalid_gradings(self):
        for gradings in ("1,0", "0,0,0,0", "1,2,0,0"):
            with self.subTest(gradings=gradings):
                code, report = run_json("hamiltonian", dataset=FOUR_ORBIT, gradings=gradings)
                self.assertEqual(code, EXIT_INPUT_ERROR)
                self.assertIn("error", report)


class TestClaimCheckCommand(unittest.TestCase):
    def test_every_admissible_grading(self):
        for gradings in ("1,1,1,1", "1,0,0,0", "0,1,0,0", "0,0,1,1"):
            with self.subTest(gradings=gradings):
                code, report = run_json("claim-check", dataset=FOUR_ORBIT, gradings=gradings)
                self.assertEqual(code, EXIT_OK)
                self.assertEqual(report["profiles"], 3)
                self.assertEqual(report["failures"], 0)
                self.assertTrue(all(entry["ok"] for entry in report["entries"]))

    def test_convention_is_reported(self):
        code, report = run_json("claim-check", dataset=FOUR_ORBIT, convention="BM")
        self.assertEqual(report["convention"], "bm")
        self.assertEqual(report["profiles"], 3)

    def test_random_sweep(self):
        code, report = run_json("claim-check", random=10, seed=5)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["datasets"], 10)
        self.assertEqual(report["failures"], [])

    def test_random_and_file(self):
        code, report = run_json("claim-check", dataset=FOUR_ORBIT, random=3)
        self.assertEqual(code, EXIT_INPUT_ERROR)

    def test_unknown_convention(self):
        code, report = run_json("claim-check", dataset=FOUR_ORBIT, convention="xy")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("convention", report["error"])


class TestContactCommands(unittest.TestCase):
    def test_chom_d(self):
        code, report = run_json("chom-d", dataset=CHOM)
        self.assertEqual(code, EXIT_OK)
        values = report["values"]
        self.assertEqual(sorted(values), ["a", "b", "c", "d"])
        self.assertEqual(values["a"], [])
        self.assertEqual(sorted(term["q"][0] for term in values["d"]), ["b", "c"])
        self.assertEqual([term["coeff"] for term in values["c"]], ["-1/1"])

    def test_chom_d_single_orbit(self):
        code, text = run("chom-d", {"dataset": CHOM, "orbit": "a", "out": "text"})
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, "a: 0")

    def test_chom_d_unknown_orbit(self):
        code, report = run_json("chom-d", dataset=CHOM, orbit="zz")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("zz", report["error"])

    def test_chom_d2(self):
        for convention in ("ht", "bm"):
            with self.subTest(convention=convention):
                code, report = run_json("chom-d2", dataset=CHOM, convention=convention)
                self.assertEqual(code, EXIT_OK)
                self.assertTrue(report["zero"])
                self.assertEqual(report["h_square_sector"], [])


class TestIndexCommand(unittest.TestCase):
    def test_without_mu_cz(self):
        code, report = run_json("index", dataset=FOUR_ORBIT)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(report["curves"]), 2)
        self.assertEqual([entry["ind_parity"] for entry in report["curves"]], [1, 1])
        self.assertIsNone(report["curves"][0]["fredholm_index"])


class TestConleyZehnderCommand(unittest.TestCase):
    def test_rotation(self):
        code, report = run_json("cz", loop=str(DATA / "rotation-half-pi.json"))
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["admissible"])
        self.assertEqual(report["mu_cz"], 1)
        self.assertAlmostEqual(report["lambda"], math.pi / 2, places=9)
        self.assertEqual(report["grading"], 0)
        self.assertEqual(run_json("cz", loop=str(DATA / "rotation-half-pi.json"), n=3)[1]["grading"], 1)

    def test_not_admissible(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "full-turn.json"
            path.write_text(json.dumps({"dim": 2, "fourier": [{"k": 0, "matrix": [[2 * math.pi, 0], [0, 2 * math.pi]]}]}))
            code, report = run_json("cz", loop=str(path))
        self.assertEqual(code, EXIT_FAILURE)
        self.assertFalse(report["admissible"])
        self.assertIsNone(report["mu_cz"])

    def test_missing_loop(self):
        self.assertEqual(run("cz", {})[0], EXIT_INPUT_ERROR)
        self.assertEqual(run("cz", {"loop": str(DATA / "missing.json")})[0], EXIT_INPUT_ERROR)


class TestDetlineSelftestCommand(unittest.TestCase):
    def test_passes(self):
        code, report = run_json("detline-selftest", seed=3, count=20, max_dim=3)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["ok"])
        self.assertEqual(report["failures"], [])
        self.assertTrue(all(value == 20 for value in report["passed"].values()))

    def test_seeded_output(self):
        self.assertEqual(
            run("detline-selftest", {"seed": 9, "count": 10}),
            run("detline-selftest", {"seed": 9, "count": 10}),
        )


class TestCappingChangeCommand(unittest.TestCase):
    def test_intertwines(self):
        code, report = run_json("capping-change", dataset=FOUR_ORBIT, eps="g1=-1,g4=-1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["checks"], 8)
        self.assertEqual(report["failures"], [])
        self.assertEqual(report["eps"], {"g1": -1, "g4": -1})

    def test_unknown_orbit(self):
        code, report = run_json("capping-change", dataset=FOUR_ORBIT, eps="g9=-1")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("g9", report["error"])


class TestRun(unittest.TestCase):
    def test_unknown_command(self):
        code, report = run_json("frobnicate")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("hamiltonian", report["error"])

    def test_undeclared_flag(self):
        code, report = run_json("hamiltonian", dataset=FOUR_ORBIT, orbit="g1")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("orbit", report["error"])

    def test_text_error(self):
        code, text = run("hamiltonian", {"out": "text"})
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertTrue(text.startswith("error: "))

    def test_unknown_output(self):
        self.assertEqual(run("hamiltonian", {"dataset": FOUR_ORBIT, "out": "xml"})[0], EXIT_INPUT_ERROR)

    def test_missing_dataset_file(self):
        code, report = run_json("hamiltonian", dataset=str(DATA / "missing.json"))
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("file not found", report["error"])


if __name__ == "__main__":
    unittest.main()
