#!/usr/bin/env python3
"""Validates `--format json` output of every subcommand against schemas/.

usage: check_schemas.py <cli> <schema dir> <test data dir>
"""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main():
    cli, schema_dir, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)

    ok = [
        ("poincare", ["--type", "A2t", "--trunc", "8"]),
        ("poincare", ["--type", "E6", "--trunc", "4"]),
        ("alt", ["--type", "G2t"]),
        ("alt", ["--type", "G2"]),
        ("alt", ["--type", "B3t", "--trunc", "6"]),
        ("factorize", ["--type", "C2t", "--trunc", "12"]),
        ("corollary1", ["--type", "G2t", "--trunc", "8"]),
        ("corollary1", ["--type", "A2t", "--trunc", "6", "--q", "3"]),
        ("corollary1", ["--type", "A2t", "--trunc", "6", "--rep", str(data / "a2t_sign_rational.json")]),
        ("corollary1", ["--type", "A2t", "--trunc", "6", "--rep", str(data / "a2t_rho1_qpoly.json")]),
        ("macdonald-table", []),
        ("ihara", ["--graph", str(data / "petersen.txt"), "--q", "2", "--trunc", "10"]),
        ("ihara", ["--graph", str(data / "tree.txt")]),
        ("torus", ["--type", "C2t", "--scale", "2", "--trunc", "6"]),
    ]
    bad = [
        ("alt", ["--type", "Q2"], 2),
        ("corollary1", ["--type", "A2t", "--rep", str(data / "a2t_zero.json")], 2),
        ("ihara", ["--graph", str(data / "loop.txt")], 2),
    ]

    failures = 0
    for cmd, args in ok:
        argv = [cli, cmd, *args, "--format", "json"]
        first = subprocess.run(argv, capture_output=True, text=True)
        second = subprocess.run(argv, capture_output=True, text=True)
        label = " ".join([cmd, *args])
        try:
            if first.returncode != 0:
                raise ValueError(f"exit {first.returncode}: {first.stderr.strip()}")
            if first.stdout != second.stdout:
                raise ValueError("output differs between runs")
            jsonschema.validate(json.loads(first.stdout), schemas[cmd])
        except (ValueError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {label}: {e}")
            continue
        print(f"ok   {label}")

    for cmd, args, status in bad:
        r = subprocess.run([cli, cmd, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join([cmd, *args])
        try:
            if r.returncode != status:
                raise ValueError(f"exit {r.returncode}, wanted {status}")
            jsonschema.validate(json.loads(r.stderr), schemas["error"])
        except (ValueError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {label}: {e}")
            continue
        print(f"ok   {label} (error report)")

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
