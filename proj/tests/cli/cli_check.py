#!/usr/bin/env python3
"""Run zngraph once (or twice) and check exit status, output shape and schema."""

import argparse
import json
import pathlib
import subprocess
import sys

SKIP = 77


def run(exe, args):
    return subprocess.run([exe, *args], capture_output=True, text=True, timeout=600)


def load_registry(schema_dir):
    from referencing import Registry, Resource

    resources = []
    for path in sorted(pathlib.Path(schema_dir).glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exe", required=True)
    ap.add_argument("--expect-exit", type=int, default=0)
    ap.add_argument("--schema", help="schema file name under --schema-dir")
    ap.add_argument("--schema-dir")
    ap.add_argument("--csv-rows", type=int, help="data rows after the header")
    ap.add_argument("--header", help="exact first line of CSV output")
    ap.add_argument("--contains", action="append", default=[])
    ap.add_argument("--stderr-contains")
    ap.add_argument("--deterministic", action="store_true", help="run twice and compare stdout bytes")
    ap.add_argument("args", nargs=argparse.REMAINDER)
    opt = ap.parse_args()
    args = opt.args[1:] if opt.args[:1] == ["--"] else opt.args

    res = run(opt.exe, args)
    failures = []
    if res.returncode != opt.expect_exit:
        failures.append(f"exit {res.returncode}, expected {opt.expect_exit}; stderr: {res.stderr.strip()}")
    if opt.stderr_contains and opt.stderr_contains not in res.stderr:
        failures.append(f"stderr lacks {opt.stderr_contains!r}: {res.stderr.strip()}")
    for s in opt.contains:
        if s not in res.stdout:
            failures.append(f"stdout lacks {s!r}")

    if opt.header or opt.csv_rows is not None:
        lines = [l for l in res.stdout.splitlines() if l and not l.startswith("#")]
        if opt.header and (not lines or lines[0] != opt.header):
            failures.append(f"header {lines[:1]!r}, expected {opt.header!r}")
        if opt.csv_rows is not None and len(lines) - 1 != opt.csv_rows:
            failures.append(f"{len(lines) - 1} data rows, expected {opt.csv_rows}")

    if opt.schema:
        try:
            import jsonschema
            registry = load_registry(opt.schema_dir)
        except ImportError:
            print("jsonschema/referencing not installed")
            return SKIP
        schema = json.loads((pathlib.Path(opt.schema_dir) / opt.schema).read_text())
        try:
            doc = json.loads(res.stdout)
            validator = jsonschema.Draft202012Validator(schema, registry=registry)
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            for e in errors[:5]:
                failures.append(f"schema: {list(e.path)}: {e.message}")
        except json.JSONDecodeError as e:
            failures.append(f"stdout is not JSON: {e}")

    if opt.deterministic:
        again = run(opt.exe, args)
        if again.stdout != res.stdout:
            failures.append("second run produced different output")

    for f in failures:
        print("FAIL:", f)
    if not failures:
        print("ok:", " ".join(args))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
