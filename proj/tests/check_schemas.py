"""Runs the CLI and validates each JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name] = doc
        resources.append((path.name, Resource.from_contents(doc)))
    return schemas, Registry().with_resources(resources)


CASES = [
    ("approx.schema.json", ["approx", "--order", "1", "--out", "json"]),
    ("approx.schema.json", ["approx", "--order", "3", "--out", "json"]),
    ("approx.schema.json", ["approx", "--order", "2prime", "--out", "json"]),
    ("sweep.schema.json", ["sweep", "--order", "3", "--from", "1", "--to", "2", "--step", "0.25", "--out", "json"]),
    ("simulate.schema.json", ["simulate", "--lambda", "2", "--L", "60", "--T", "10", "--replicas", "20"]),
    ("simulate.schema.json",
     ["simulate", "--lambda", "2", "--L", "60", "--T", "10", "--replicas", "20", "--mode", "density"]),
    ("simulate.schema.json",
     ["simulate", "--lambda", "2", "--pattern", "oo", "--L", "60", "--T", "10", "--replicas", "20",
      "--mode", "duality"]),
    ("compare.schema.json", ["compare", "--order", "3", "--lambda", "2", "--L", "60", "--T", "10", "--replicas", "20"]),
]


def main():
    tool = sys.argv[1]
    schemas, registry = load_registry(pathlib.Path(sys.argv[2]))
    failures = 0
    for schema_name, args in CASES:
        proc = subprocess.run([tool, *args], capture_output=True, text=True)
        expected = 3 if "2prime" in args else 0
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
