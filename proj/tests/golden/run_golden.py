#!/usr/bin/env python3
"""Golden CLI runs: byte-identical output across two runs and against the
recorded file, and --json output validated against schemas/.

    run_golden.py --twb build/tools/twb --root . [--update] [names...]
"""

import argparse
import difflib
import json
import shlex
import subprocess
import sys
from pathlib import Path

import jsonschema


def load_cases(path):
    cases = []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, rest = line.partition(" ")
        args = shlex.split(rest)
        stdin = None
        if len(args) >= 2 and args[-2] == "<":
            stdin = args[-1]
            args = args[:-2]
        cases.append((name, args, stdin))
    return cases


def run(twb, root, args, stdin):
    data = (root / stdin).read_bytes() if stdin else b""
    p = subprocess.run([str(twb), *args], cwd=root, input=data, capture_output=True, timeout=120)
    record = p.stdout.decode() + "--- stderr\n" + p.stderr.decode() + f"--- exit {p.returncode}\n"
    return p, record


def schema_for(root, args):
    words = [a for a in args if not a.startswith("-")]
    sub = words[0] if words else ""
    path = root / "schemas" / f"{sub}.schema.json"
    return json.loads(path.read_text()) if path.exists() else None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--twb", required=True)
    ap.add_argument("--root", required=True)
    ap.add_argument("--update", action="store_true")
    ap.add_argument("names", nargs="*")
    opts = ap.parse_args()

    root = Path(opts.root).resolve()
    twb = Path(opts.twb).resolve()
    here = root / "tests" / "golden"
    expected_dir = here / "expected"
    failures = 0
    seen = 0

    for name, args, stdin in load_cases(here / "cases.txt"):
        if opts.names and name not in opts.names:
            continue
        seen += 1
        p, record = run(twb, root, args, stdin)
        _, again = run(twb, root, args, stdin)
        problems = []
        if again != record:
            problems.append("output differs between two runs")

        if "--json" in args and p.returncode in (0, 1):
            schema = schema_for(root, args)
            if schema is None:
                problems.append("no schema for this subcommand")
            else:
                try:
                    jsonschema.validate(json.loads(p.stdout), schema)
                except (json.JSONDecodeError, jsonschema.ValidationError) as e:
                    problems.append(f"schema: {str(e).splitlines()[0]}")

        target = expected_dir / f"{name}.out"
        if opts.update:
            target.write_text(record)
        elif not target.exists():
            problems.append("no recorded output")
        elif target.read_text() != record:
            diff = difflib.unified_diff(target.read_text().splitlines(), record.splitlines(), "recorded", "actual", lineterm="")
            problems.append("output differs from the recorded file\n" + "\n".join(list(diff)[:40]))

        if problems:
            failures += 1
            print(f"FAIL {name}")
            for pr in problems:
                print("  " + pr)
        else:
            print(f"ok   {name}")

    if seen == 0:
        print("no cases selected")
        return 1
    print(f"{seen - failures}/{seen} golden cases passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
