#!/usr/bin/env python3
"""Runs the CLI on the shipped data files and compares against tests/golden.

usage: cli_golden.py <norikit-binary> <source-dir> [--update]
"""

import os
import subprocess
import sys
import tempfile

# (golden name, arguments, expected exit code)
CASES = [
    ("snf", ["snf", "data/snf_example.txt"], 0),
    ("snf_json", ["snf", "data/snf_example.txt", "--json"], 0),
    ("comodule_c", ["comodule", "data/mixed3.json", "--module", "data/module_c.json"], 0),
    ("colimit_chain3", ["colimit", "data/chain3.json"], 0),
    ("colimit_chain3_json", ["colimit", "data/chain3.json", "--json"], 0),
]
for rep in ("jordan", "identity_edge", "mixed3"):
    path = f"data/{rep}.json"
    CASES += [
        (f"{rep}_end", ["end-algebra", path], 0),
        (f"{rep}_end_json", ["end-algebra", path, "--json"], 0),
        (f"{rep}_coalgebra", ["coalgebra", path], 0),
        (f"{rep}_check_all", ["check", path, "--suite", "all"], 0),
        (f"{rep}_check_all_json", ["check", path, "--suite", "all", "--json"], 0),
    ]

# Error paths: only the exit code is pinned.
ERRORS = [
    (["end-algebra", "data/does_not_exist.json"], 3),
    (["check", "data/jordan.json", "--suite", "nonsense"], 2),
    (["end-algebra", "data/jordan.json", "--no-such-flag"], 2),
]


def run(cli, args):
    p = subprocess.run([cli] + args, capture_output=True, env=env())
    return p.returncode, p.stdout


def env():
    e = dict(os.environ)
    e.pop("NORIKIT_SIZE_BOUND", None)
    return e


def main():
    if len(sys.argv) < 3:
        print(__doc__)
        return 2
    cli, src = os.path.abspath(sys.argv[1]), sys.argv[2]
    update = "--update" in sys.argv[3:]
    os.chdir(src)
    golden = os.path.join("tests", "golden")
    failures = 0

    for name, args, want in CASES:
        code, out = run(cli, args)
        path = os.path.join(golden, name + ".out")
        if update:
            with open(path, "wb") as f:
                f.write(out)
        with open(path, "rb") as f:
            expected = f.read()
        ok = code == want and out == expected
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name} (exit {code})")

    for args, want in ERRORS:
        code, _ = run(cli, args)
        ok = code == want
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} exit {want}: {' '.join(args)} (got {code})")

    bad_entry = b'{"ring":"Q","vertices":[{"id":"p","rank":1}],' \
                b'"edges":[{"id":"m","src":"p","dst":"p","matrix":[["1/0"]]}]}'
    with tempfile.NamedTemporaryFile(suffix=".json") as f:
        f.write(bad_entry)
        f.flush()
        code, _ = run(cli, ["end-algebra", f.name])
    ok = code == 2
    failures += not ok
    print(f"{'PASS' if ok else 'FAIL'} exit 2: division by zero entry (got {code})")

    print(f"{len(CASES) + len(ERRORS) + 1} cases, {failures} failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
