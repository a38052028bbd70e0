import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

QCHOW = sys.argv.pop(1)
SOURCE = pathlib.Path(__file__).resolve().parent.parent
SCHEMA = json.loads((SOURCE / "docs" / "report.schema.json").read_text())
sys.path.insert(0, str(SOURCE / "tools"))
import check_cert  # noqa: E402


def run(*args):
    return subprocess.run([QCHOW, *args], capture_output=True, text=True)


class Cli(unittest.TestCase):
    def test_unknown_scenario(self):
        r = run("verify", "bogus")
        self.assertEqual(r.returncode, 2)
        self.assertIn("unknown scenario", r.stderr)
        self.assertEqual(r.stdout, "")

    def test_unknown_table(self):
        self.assertNotEqual(run("dump", "hilb4").returncode, 0)

    def test_dump_counts(self):
        expected = {"pw2": 6, "pw4": 15, "hilb2": 9, "hilb3": 22, "hilb3-blowup": 31,
                    "hilb2w2": 45, "binodal-D": 81, "trinodal-Z": 186, "strata": 11}
        for table, n in expected.items():
            r = run("dump", table)
            self.assertEqual(r.returncode, 0, table)
            self.assertEqual(len(r.stdout.splitlines()), n, table)
        self.assertEqual(run("fixed-points", "hilb3").stdout, run("dump", "hilb3").stdout)

    def test_strata_codims(self):
        codims = [int(l.rsplit(" ", 1)[1]) for l in run("dump", "strata").stdout.splitlines()]
        self.assertEqual(codims, [1, 3, 4, 5, 6, 7, 8, 9, 10, 10, 12])

    def test_independence_report(self):
        with tempfile.TemporaryDirectory() as d:
            report = pathlib.Path(d) / "r.json"
            r = run("verify", "independence", "--report", str(report), "--jobs", "2")
            self.assertEqual(r.returncode, 0, r.stderr)
            doc = json.loads(report.read_text())
            jsonschema.validate(doc, SCHEMA)
            rows = doc["scenarios"][0]["rows"]
            negatives = [x for x in rows if x["expected_negative"] and not x["member"]]
            self.assertGreaterEqual(len(negatives), 3)
            self.assertEqual({x["label"] for x in negatives} >= {"a2", "a3", "d13"}, True)

    def test_certificates_roundtrip(self):
        with tempfile.TemporaryDirectory() as d:
            certs = pathlib.Path(d) / "certs"
            report = pathlib.Path(d) / "r.json"
            r = run("verify", "line-cubic", "presentation", "independence", "strata",
                    "--cert", str(certs), "--report", str(report))
            self.assertEqual(r.returncode, 0, r.stderr)
            doc = json.loads(report.read_text())
            jsonschema.validate(doc, SCHEMA)
            paths = [x["certificate"] for s in doc["scenarios"] for x in s["rows"] if x["certificate"]]
            self.assertGreater(len(paths), 10)
            for s in doc["scenarios"]:
                for x in s["rows"]:
                    if x["member"] and s["id"] != "strata" and x["label"] != "1":
                        self.assertIsNotNone(x["certificate"], x["label"])
            r = run("check-cert", *paths)
            self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
            self.assertEqual(check_cert.main(paths), 0)

            tampered = pathlib.Path(d) / "bad.cert"
            line = pathlib.Path(paths[0]).read_text().strip()
            tampered.write_text(line + " + 1\n")
            self.assertEqual(run("check-cert", str(tampered)).returncode, 1)
            self.assertEqual(check_cert.main([str(tampered)]), 1)

    def test_markdown(self):
        r = run("verify", "presentation", "--format", "md")
        self.assertEqual(r.returncode, 0)
        self.assertIn("## presentation: pass", r.stdout)


if __name__ == "__main__":
    unittest.main()
