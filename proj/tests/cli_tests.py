"""End-to-end checks of the tk command line."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

TK = sys.argv[1] if len(sys.argv) > 1 else "build/tk"
ROOT = sys.argv[2] if len(sys.argv) > 2 else "."


def tk(*args, env=None):
    e = dict(os.environ)
    e.pop("TK_DEEP", None)
    if env:
        e.update(env)
    return subprocess.run([TK, *args], capture_output=True, text=True, env=e)


class Examples(unittest.TestCase):
    def test_origins(self):
        r = tk("origins", "--tournament", "t 4 110101", "--path", "+(1,2)")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "{1,2}\n")

    def test_absent_cycle(self):
        r = tk("embed", "--tournament", "t 3 101", "--cycle", "(2,1)")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "ABSENT\n")

    def test_enum_count(self):
        r = tk("enum", "--order", "5", "--count-only")
        self.assertEqual(r.stdout, "12\n")

    def test_embed_path(self):
        r = tk("embed", "--tournament", "4A", "--path", "+(1,2)", "--origin", "1")
        self.assertEqual(r.stdout, "1 2 4 3\n")

    def test_proof_guided(self):
        r = tk("embed", "--tournament", "t 4 111111", "--cycle", "(3,1)", "--proof-guided")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "1 2 3 4\n")

    def test_count(self):
        self.assertEqual(tk("count", "--tournament", "3A", "--path", "+(2)").stdout, "3\n")

    def test_canon(self):
        a = tk("canon", "--tournament", "t 3 101").stdout
        b = tk("canon", "--tournament", "t 3 010").stdout
        self.assertEqual(a, b)

    def test_tournament_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write("\nt 3 101\n")
        try:
            r = tk("embed", "--tournament", f.name, "--cycle", "(2,1)")
            self.assertEqual(r.stdout, "ABSENT\n")
        finally:
            os.unlink(f.name)

    def test_enum_out(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "t4.txt")
            self.assertEqual(tk("enum", "--order", "4", "--out", out).returncode, 0)
            with open(out) as f:
                lines = f.read().splitlines()
            self.assertEqual(len(lines), 4)
            self.assertTrue(all(l.startswith("t 4 ") for l in lines))


class Errors(unittest.TestCase):
    def test_usage(self):
        self.assertEqual(tk().returncode, 2)
        self.assertEqual(tk("bogus").returncode, 2)
        self.assertEqual(tk("embed", "--tournament", "t 3 101").returncode, 2)
        self.assertEqual(tk("embed", "--tournament", "t 3 10", "--cycle", "(2,1)").returncode, 2)
        self.assertEqual(tk("origins", "--tournament", "3A", "--path", "+(1)").returncode, 2)
        self.assertEqual(tk("enum", "--order", "9").returncode, 2)
        self.assertEqual(tk("verify", "--check", "nope").returncode, 2)
        self.assertEqual(tk("embed", "--tournament", "no-such-file", "--cycle", "(2,1)").returncode, 2)

    def test_help(self):
        self.assertEqual(tk("--help").returncode, 0)


class Reports(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(os.path.join(ROOT, "schemas", "report.schema.json")) as f:
            cls.schema = json.load(f)

    def run_report(self, *args):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            r = tk("verify", *args, "--report", path)
            with open(path) as f:
                text = f.read()
        return r, text

    def test_schema_and_exit_codes(self):
        for check, code in [("reversal", 0), ("thm2.1", 1), ("corollary", 1), ("building:2.10", 0), ("catalog", 1)]:
            r, text = self.run_report("--check", check, "--max-order", "6", "--samples", "5", "--jobs", "2")
            rep = json.loads(text)
            jsonschema.validate(rep, self.schema)
            self.assertEqual(r.returncode, 0 if rep["status"] == "pass" else 1, check)
            self.assertEqual(r.returncode, code, check)
            self.assertEqual(r.stdout, "")

    def test_deterministic_across_jobs(self):
        _, a = self.run_report("--check", "small-lemmas", "--max-order", "5", "--jobs", "1")
        _, b = self.run_report("--check", "small-lemmas", "--max-order", "5", "--jobs", "4")
        self.assertEqual(a, b)

    def test_timing_is_opt_in(self):
        _, plain = self.run_report("--check", "reversal", "--max-order", "4", "--samples", "1")
        _, timed = self.run_report("--check", "reversal", "--max-order", "4", "--samples", "1", "--timing")
        self.assertNotIn("wall_time_ms", json.loads(plain))
        jsonschema.validate(json.loads(timed), self.schema)
        self.assertIn("wall_time_ms", json.loads(timed))

    def test_deep_env(self):
        r = tk("verify", "--check", "reversal", "--samples", "0", env={"TK_DEEP": "1"})
        self.assertEqual(json.loads(r.stdout)["params"]["max_order"], 8)
        r = tk("verify", "--check", "reversal", "--samples", "0", "--max-order", "3")
        self.assertEqual(json.loads(r.stdout)["params"]["max_order"], 3)

    def test_seed(self):
        a = tk("verify", "--check", "reversal", "--max-order", "3", "--samples", "3", "--seed", "7").stdout
        b = tk("verify", "--check", "reversal", "--max-order", "3", "--samples", "3", "--seed", "7").stdout
        self.assertEqual(a, b)


class Catalog(unittest.TestCase):
    def test_golden(self):
        with open(os.path.join(ROOT, "catalog.json")) as f:
            golden = f.read()
        self.assertEqual(tk("catalog").stdout, golden)

    def test_records(self):
        recs = json.loads(tk("catalog").stdout)
        kinds = {}
        for r in recs:
            kinds[r["kind"]] = kinds.get(r["kind"], 0) + 1
        self.assertEqual(kinds["path_exception"], 52)
        self.assertEqual(kinds["cycle_exception"], 18)
        exc2 = next(r for r in recs if r.get("id") == "Exc 2")
        self.assertEqual(exc2["path"], "+(1,2)")
        self.assertEqual(exc2["S"], [3, 4])
        self.assertEqual(exc2["tournament"], "t 4 110101")

    def test_show(self):
        self.assertEqual(tk("catalog", "--show", "3A").stdout.split()[:2], ["t", "3"])


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
