#!/usr/bin/env python3
"""Validate ybx JSON output against docs/schema/ybx-1.schema.json.

Usage: check_schema.py SCHEMA YBX_BINARY
Runs a fixed set of ybx commands with YBX_OUTPUT=json and validates each
document. Exits 0 when every document validates, 1 otherwise.
"""
import json
import os
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["element", "r", "--upper", "2,2,1", "--lower", "3,1,2"],
    ["element", "l", "--upper", "0,1,1", "--lower", "1,0,2"],
    ["element", "s", "--eps", "101", "--a", "0,4,0", "--b", "1,0,1", "--i", "0,3,1", "--j", "1,1,0"],
    ["verify", "te-rrrr", "--input", "1,0,1,0,1,0"],
    ["verify", "limit-theorem", "--eps", "0101", "--l", "3", "--m", "4"],
    ["verify", "ybe-comb", "--eps", "10", "--levels", "2,1,1"],
    ["verify", "intertwiner", "--eps", "10", "--l", "1", "--m", "1"],
    ["verify", "r-props", "--bound", "2"],
    ["table", "s-block", "--eps", "10", "--l", "1", "--m", "1"],
    ["table", "crystal", "--eps", "101", "--l", "2"],
    ["table", "comb-r-map", "--eps", "101", "--l", "2", "--m", "1"],
]


def main() -> int:
    schema_path, binary = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    env = dict(os.environ, YBX_OUTPUT="json")
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, env=env)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
        else:
            print(f"ok   {' '.join(args)}")
    # negative control: a document with the wrong tag must be rejected
    if validator.is_valid({"schema": "ybx/0", "check": "inverse", "identity": "", "equal": True,
                           "cases": 0, "mismatches": []}):
        print("FAIL negative control accepted")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
