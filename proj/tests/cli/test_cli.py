"""End-to-end checks of the rosh command line: test_cli.py ROSH_BINARY DATA_DIR."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BINARY = ""
DATA = ""


def run(*args, env=None, text=True):
    return subprocess.run([BINARY, *args], capture_output=True, text=text, env=env)


def data(name):
    return os.path.join(DATA, name)


class Cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_lowerbound(self):
        r = run("lowerbound", data("oe1.json"))
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.strip(), "22")
        verbose = json.loads(run("lowerbound", data("sample.json"), "--verbose").stdout)
        self.assertEqual(verbose["lower_bound"], 57)

    def test_oracle(self):
        out = json.loads(run("oracle", data("gs1.json")).stdout)
        self.assertEqual(out["optimum"], 6)

    def test_reduce_and_classify(self):
        out = json.loads(run("reduce", data("sample.json")).stdout)
        self.assertEqual(out["outcome"], "OverloadedNodeTwoJobs")
        self.assertEqual([j["p"] for j in out["instance"]["jobs"]], [[21, 19], [14, 10], [17, 24]])
        cls = json.loads(run("classify", data("sample.json")).stdout)
        self.assertFalse(cls["theorem5"]["any"])

    def test_solve_then_validate(self):
        r = run("solve", data("sample.json"))
        self.assertEqual(r.returncode, 0)
        report = json.loads(r.stdout)
        self.assertEqual(report["lower_bound"], 57)
        self.assertEqual(report["status"], "Normal")
        sched = self.write("s.json", r.stdout)
        self.assertEqual(run("validate", data("sample.json"), sched).returncode, 0)

        report["operations"][0]["start"] += 1
        tampered = self.write("t.json", json.dumps(report))
        v = run("validate", data("sample.json"), tampered)
        self.assertEqual(v.returncode, 1)
        self.assertFalse(json.loads(v.stdout)["feasible"])

    def test_errors(self):
        r = run("lowerbound", os.path.join(self.tmp.name, "missing.json"))
        self.assertEqual(r.returncode, 2)
        self.assertEqual(json.loads(r.stderr)["error"]["kind"], "input")

        cyclic = self.write("c.json", json.dumps({
            "depot": "a", "nodes": ["a", "b", "c"],
            "edges": [{"u": "a", "v": "b", "tau": 1}, {"u": "b", "v": "a", "tau": 1}],
            "jobs": []}))
        r = run("solve", cyclic)
        self.assertEqual(r.returncode, 2)
        self.assertIn("not a tree", json.loads(r.stderr)["error"]["message"])

        r = run("oracle", data("sample.json"))
        self.assertEqual(r.returncode, 2)
        self.assertEqual(json.loads(r.stderr)["error"]["kind"], "oracle_cap")

        r = run("gen", "--nodes", "x")
        self.assertEqual(r.returncode, 2)
        self.assertEqual(json.loads(r.stderr)["error"]["kind"], "input")

        r = run("gen", "--colour", "red")
        self.assertEqual(r.returncode, 2)
        self.assertEqual(json.loads(r.stderr)["error"]["kind"], "usage")

    def test_gen_is_deterministic(self):
        a = run("gen", "--seed", "9", "--nodes", "3:5", "--max-jobs", "8")
        b = run("gen", "--seed", "9", "--nodes", "3:5", "--max-jobs", "8")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)
        self.assertLessEqual(len(json.loads(a.stdout)["jobs"]), 8)

    def test_experiment(self):
        summary = os.path.join(self.tmp.name, "summary.json")
        a = run("experiment", "--count", "40", "--seed", "5", "--summary", summary, text=False)
        b = run("experiment", "--count", "40", "--seed", "5", "--jobs", "2", "--summary", os.devnull, text=False)
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)
        lines = a.stdout.decode().split("\r\n")
        self.assertEqual(lines[0], "seed,n,nodes,outcome,theorem5,status,gap,scheduler")
        self.assertEqual(len([l for l in lines if l]), 41)
        with open(summary) as f:
            self.assertEqual(json.load(f)["count"], 40)

    def test_oracle_cap_env(self):
        env = dict(os.environ, ROSH_ORACLE_CAP="2")
        r = run("oracle", data("gs1.json"), env=env)
        self.assertEqual(r.returncode, 2)


if __name__ == "__main__":
    BINARY, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0]], verbosity=2)
