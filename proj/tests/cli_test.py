#!/usr/bin/env python3
"""End-to-end checks of the zetacap command line: output shape, exit codes, determinism.

usage: cli_test.py <zetacap binary> <result.schema.json>
"""
import json
import os
import subprocess
import sys
import tempfile
import unittest
from fractions import Fraction

import jsonschema

BIN = None
SCHEMA = None
ENV = dict(os.environ)


def run(*args, check=True):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=ENV, timeout=600)
    if check and p.returncode != 0:
        raise AssertionError(f"{args}: exit {p.returncode}\n{p.stderr}")
    return p


def run_json(*args):
    doc = json.loads(run(*args, "--format", "json").stdout)
    jsonschema.validate(doc, SCHEMA)
    return doc


class Compute(unittest.TestCase):
    def test_conformal_hemisphere(self):
        doc = run_json("compute", "--D", "3", "--sigma", "0.5", "--theta0", "1.5707963")
        r = doc["result"]
        self.assertEqual(doc["kind"], "compute")
        self.assertEqual((r["D"], r["d"]), (3, 2))
        self.assertAlmostEqual(float(r["zeta0"]), -1 / 48, places=15)
        self.assertAlmostEqual(float(r["zeta_prime0"]), 0.0073635058969, places=9)
        self.assertAlmostEqual(float(r["logdet"]), -float(r["zeta_prime0"]), places=15)

    def test_explain_and_mass(self):
        doc = run_json("compute", "--d", "2", "--mass", "0", "--theta0", "pi/2", "--explain")
        r = doc["result"]
        self.assertEqual(float(r["sigma"]), 1.0)
        self.assertEqual(float(r["mass"]), 0.0)
        total = sum(float(t["value"]) for t in r["term_ledger"] if t["term"].startswith("zeta_prime0:"))
        self.assertAlmostEqual(total, float(r["zeta_prime0"]), places=14)
        self.assertTrue(any(d["quantity"] == "zeta0" for d in doc["discrepancies"]))

    def test_deterministic_apart_from_timestamp(self):
        args = ("compute", "--D", "3", "--sigma", "13/10", "--theta0", "2*pi/5")
        a, b = run_json(*args), run_json(*args)
        a.pop("timestamp")
        b.pop("timestamp")
        self.assertEqual(a, b)
        self.assertTrue(a["result"]["zeta_prime0"].startswith("-2.23774340403634831763081186"))

    def test_four_dimensional_conformal(self):
        doc = run_json("compute", "--D", "4", "--sigma", "0.5", "--theta0", "0.3")
        self.assertAlmostEqual(float(doc["result"]["zeta0"]), -1 / 180, places=15)

    def test_csv(self):
        out = run("compute", "--D", "3", "--sigma", "1.3", "--theta0", "1.2", "--format", "csv").stdout
        self.assertEqual(out.splitlines()[0], "D,sigma,theta0,mu_scale,zeta0,zeta_prime0,gamma,logdet")

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as t:
            path = os.path.join(t, "r.json")
            run("compute", "--D", "3", "--sigma", "0.5", "--theta0", "1", "-o", path)
            with open(path) as f:
                jsonschema.validate(json.load(f), SCHEMA)


class Sweep(unittest.TestCase):
    def test_csv_header_and_rows(self):
        lines = run("sweep", "--D", "3", "--sigma", "0.5", "--theta0", "0.5:1.0:2").stdout.splitlines()
        self.assertEqual(lines[0], "theta0,sigma,zeta0,zeta_prime0,logdet,error")
        self.assertEqual(len(lines), 3)
        self.assertTrue(all(l.endswith(",") for l in lines[1:]))

    def test_conformal_column_and_duplicates(self):
        lines = run("sweep", "--D", "3", "--sigma", "0.5", "--theta0", "0.7,0.7,2.0").stdout.splitlines()[1:]
        rows = [l.split(",") for l in lines]
        for r in rows:
            self.assertAlmostEqual(float(r[2]), -1 / 48, places=15)
        self.assertEqual(lines[0], lines[1])

    def test_json_marks_failed_rows(self):
        # sigma = 0 rows fail validation; the sweep still succeeds
        doc = run_json("sweep", "--D", "3", "--sigma", "0,0.5", "--theta0", "1")
        rows = doc["rows"]
        self.assertEqual(len(rows), 2)
        self.assertIn("error", rows[0])
        self.assertIn("zeta0", rows[1])


class Coeffs(unittest.TestCase):
    def test_first_order_at_conformal_sigma(self):
        out = run("coeffs", "--order", "1", "--sigma", "1/2").stdout
        self.assertIn("a1 = -1/12", out)

    def test_json(self):
        doc = run_json("coeffs", "--order", "4")
        self.assertEqual([c["n"] for c in doc["cumulants"]], [1, 2, 3, 4])
        self.assertEqual([Fraction(c["C"]) for c in doc["cumulants"]],
                         [Fraction(-1, 12), 0, Fraction(1, 360), 0])
        out = run("coeffs", "--order", "4").stdout
        # -(1/4)(13 - 56 sigma^2 + 16 sigma^4) S^3 + (1/8)(13 - 56 sigma^2 + 16 sigma^4) S^4
        self.assertIn("(-13/4 + 14*sigma^2 - 4*sigma^4)*S^3", out)
        self.assertIn("(13/8 - 7*sigma^2 + 2*sigma^4)*S^4", out)


class Verify(unittest.TestCase):
    def test_subset_json(self):
        doc = run_json("verify", "--only", "1,2")
        self.assertEqual(doc["total"], 2)
        self.assertEqual(doc["passed"], 2)
        self.assertEqual([c["id"] for c in doc["criteria"]], [1, 2])

    def test_text(self):
        out = run("verify", "--only", "1").stdout
        self.assertRegex(out, r"criterion +1: PASS")


class ExitCodes(unittest.TestCase):
    def test_unsupported_dimension(self):
        p = run("verify", "--D", "10", check=False)
        self.assertEqual(p.returncode, 2)
        self.assertIn("UnsupportedDimension", p.stderr)

    def test_bad_arguments(self):
        self.assertEqual(run("compute", "--bogus", check=False).returncode, 1)
        self.assertEqual(run(check=False).returncode, 1)
        self.assertEqual(run("compute", "--D", "3", "--sigma", "-1", "--theta0", "1", check=False).returncode, 1)
        self.assertEqual(run("compute", "--D", "3", "--sigma", "x", "--theta0", "1", check=False).returncode, 1)

    def test_help_and_version(self):
        self.assertEqual(run("--help").returncode, 0)
        self.assertTrue(run("--version").stdout.strip())


if __name__ == "__main__":
    BIN = os.path.abspath(sys.argv.pop(1))
    with open(sys.argv.pop(1)) as f:
        SCHEMA = json.load(f)
    jsonschema.Draft202012Validator.check_schema(SCHEMA)
    ENV["ZETACAP_CACHE_DIR"] = tempfile.mkdtemp(prefix="zetacap_cli_")
    unittest.main(verbosity=2)
