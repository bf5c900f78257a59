# Copyright 2026 The Magic Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every subcommand, validates the reports against the published schema,
checks exit codes and compares three canned runs against golden files.

Usage: cli_reports.py MAGIC_EXE SOURCE_DIR [--update]
"""

import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

GOLDEN = {
    "monotone_t_sre": ["monotone", "--measure", "sre", "--alpha", "2", "--state", "t.json"],
    "membership_mixed": ["membership", "--state", "mixed.json", "--eps", "0.05"],
    "reduce_uf3": ["reduce", "--cnf", "uf3.cnf", "--vertices", "3"],
}


def run(exe, args, cwd):
    p = subprocess.run([exe] + args, cwd=cwd, capture_output=True, text=True, timeout=600)
    return p.returncode, json.loads(p.stdout) if p.stdout.strip() else None


def close(a, b, path="$"):
    """Structural equality with a relative tolerance on floats."""
    if isinstance(a, float) or isinstance(b, float):
        if not isinstance(a, (int, float)) or not isinstance(b, (int, float)):
            return [f"{path}: {a!r} != {b!r}"]
        return [] if math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12) else [f"{path}: {a!r} != {b!r}"]
    if isinstance(a, dict) and isinstance(b, dict):
        if list(a) != list(b):
            return [f"{path}: keys {list(a)} != {list(b)}"]
        return [m for k in a for m in close(a[k], b[k], f"{path}.{k}")]
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            return [f"{path}: length {len(a)} != {len(b)}"]
        return [m for i, (x, y) in enumerate(zip(a, b)) for m in close(x, y, f"{path}[{i}]")]
    return [] if a == b else [f"{path}: {a!r} != {b!r}"]


def strip(report):
    report = dict(report)
    report.pop("timings", None)
    return report


def main():
    exe, src = os.path.abspath(sys.argv[1]), os.path.abspath(sys.argv[2])
    update = "--update" in sys.argv[3:]
    data = os.path.join(src, "tests", "data")
    golden_dir = os.path.join(src, "tests", "golden")
    with open(os.path.join(src, "schemas", "report.schema.json")) as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    failures = []

    def check(name, ok, detail=""):
        print(("PASS " if ok else "FAIL ") + name + (f": {detail}" if detail and not ok else ""))
        if not ok:
            failures.append(name)

    with tempfile.TemporaryDirectory() as tmp:
        witness = os.path.join(tmp, "w.json")
        artifact = os.path.join(tmp, "uf3.json")
        cases = [
            ("enumerate", ["enumerate", "--family", "ALL_STABILIZER", "--size", "2", "--count", "3"], 0),
            ("enumerate graph", ["enumerate", "--family", "GRAPH", "--size", "3", "--amplitudes"], 0),
            ("monotone sre", GOLDEN["monotone_t_sre"], 0),
            ("monotone fidelity", ["monotone", "--measure", "fidelity", "--state", "t.json"], 0),
            ("monotone robustness", ["monotone", "--measure", "robustness", "--state", "t.json"], 0),
            ("monotone t-robustness",
             ["monotone", "--measure", "t-robustness", "--t", "1", "--net-eps", "0.5", "--state", "t.json"], 0),
            ("membership yes", GOLDEN["membership_mixed"], 0),
            ("membership no", ["membership", "--state", "t.json", "--eps", "0.05"], 2),
            ("membership promise", ["membership", "--state", "t.json", "--eps", "0.9"], 3),
            ("witness", ["witness", "--state", "t.json", "--out", witness], 0),
            ("wwd", ["wwd", "--witness", witness, "--gamma", "0.0", "--delta", "0.01"], 0),
            ("wwd sampled", ["--seed", "5", "wwd", "--witness", witness, "--gamma", "-10", "--delta", "0.01",
                             "--scan", "sample:10"], 0),
            ("reduce", ["reduce", "--cnf", "uf3.cnf", "--vertices", "3", "--out", artifact], 0),
            ("verify H_2COPY", ["verify-reduction", "--artifact", artifact, "--stage", "H_2COPY",
                                "--mode", "exhaustive"], 0),
            ("verify H4 sampled", ["verify-reduction", "--artifact", artifact, "--stage", "H4_STAB",
                                   "--mode", "sample:2000", "--coherent-samples", "500"], 0),
            ("doped", ["doped", "--state", "t.json", "--t", "1", "--net-eps", "0.5", "--eps", "0.05"], 0),
            ("channel cspc", ["channel", "classify", "--channel", "tgate_channel.json", "--eps", "0.05"], 2),
            ("channel cspc clifford", ["channel", "classify", "--channel", "s_channel.json", "--eps", "0.05"], 0),
            ("channel ctdspc", ["channel", "classify", "--channel", "tgate_channel.json", "--t", "1",
                                "--net-eps", "0.5", "--eps", "0.05"], 0),
            ("error unknown flag", ["membership", "--bogus"], 1),
            ("error wrong width", ["reduce", "--cnf", "bad_width.cnf", "--vertices", "3"], 1),
            ("error missing file", ["monotone", "--measure", "sre", "--state", "missing.json"], 1),
            ("error size cap", ["reduce", "--cnf", "uf3.cnf", "--vertices", "5"], 1),
        ]
        for name, args, want in cases:
            code, report = run(exe, args, data)
            check(f"{name}: exit {want}", code == want, f"got {code}")
            if report is None:
                check(f"{name}: report", False, "no JSON on stdout")
                continue
            errors = sorted(validator.iter_errors(report), key=str)
            check(f"{name}: schema", not errors, "; ".join(e.message for e in errors[:3]))
            if want == 1:
                check(f"{name}: error code", report.get("status") == "error" and "error" in report)

        for name, args in GOLDEN.items():
            _, a = run(exe, args, data)
            _, b = run(exe, args, data)
            check(f"golden {name}: deterministic", strip(a) == strip(b))
            path = os.path.join(golden_dir, name + ".json")
            if update:
                with open(path, "w") as f:
                    json.dump(strip(a), f, indent=2)
                    f.write("\n")
            if not os.path.exists(path):
                check(f"golden {name}: file present", False, path)
                continue
            with open(path) as f:
                expected = json.load(f)
            diffs = close(strip(a), expected)
            check(f"golden {name}: matches", not diffs, "; ".join(diffs[:3]))

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
