"""Runs the calab CLI and validates every report against the checked-in schemas.

usage: validate_schemas.py <calab-binary> <schema-dir> <rules-dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    calab, schema_dir, rules_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )

    def validator(name):
        schema = schemas[name]
        cls = jsonschema.validators.validator_for(schema)
        cls.check_schema(schema)
        return cls(schema, registry=registry)

    failures = 0

    def check(label, name, doc):
        nonlocal failures
        errors = sorted(validator(name).iter_errors(doc), key=lambda e: list(e.path))
        status = "ok" if not errors else "INVALID"
        print(f"{status:8} {label} against {name}")
        for e in errors[:5]:
            print(f"         {list(e.path)}: {e.message}")
        failures += bool(errors)

    for rule in sorted(rules_dir.glob("*.json")):
        check(rule.name, "rule.schema.json", json.loads(rule.read_text()))

    commands = [
        (["analyze", "--rule", "rule150w"], "property_report.schema.json"),
        (["analyze", "--rule", "shift"], "property_report.schema.json"),
        (["analyze", "--rule", "eca:30"], "property_report.schema.json"),
        (["analyze", "--rule", str(rules_dir / "and.json")], "property_report.schema.json"),
        (["analyze", "--rule", str(rules_dir / "rule150w_cyclic5.json")], "finite_report.schema.json"),
        (["quotient-scan", "--rule", "rule150w", "--max-n", "8"], "report.schema.json"),
        (["quotient-scan", "--rule", "rule150w", "--max-n", "8", "--lemma", "openness"], "report.schema.json"),
        (["quotient-scan", "--rule", "shift", "--moduli", "2,5", "--lemma", "preinjective-limit"], "report.schema.json"),
        (["reproduce-example7", "--max-n", "8"], "report.schema.json"),
        (["verify", "--suite", "blocks"], "report.schema.json"),
        (["verify", "--suite", "convergence"], "report.schema.json"),
        (["transport", "quotient", "--rule", "rule150w", "--modulus", "4"], "rule.schema.json"),
        (["transport", "block", "--rule", "rule150w", "--block", "2"], "rule.schema.json"),
        (["transport", "inverse", "--rule", "shift"], "rule.schema.json"),
    ]
    for args, name in commands:
        proc = subprocess.run([calab, *args], capture_output=True, text=True)
        label = "calab " + " ".join(args)
        if proc.returncode != 0:
            print(f"FAILED   {label}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        check(label, name, json.loads(proc.stdout))

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
