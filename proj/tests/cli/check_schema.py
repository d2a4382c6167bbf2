"""Runs the modcat binary and validates its JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, data = sys.argv[1], pathlib.Path(sys.argv[2])
    output_schema = json.loads((data / "schema" / "modcat.schema.json").read_text())
    golden_schema = json.loads((data / "schema" / "golden.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(output_schema)
    jsonschema.Draft202012Validator.check_schema(output_schema)
    jsonschema.Draft202012Validator.check_schema(golden_schema)

    failures = 0
    runs = [
        (["wzw", "--algebra", "sl3", "--level", "9", "--json"], 0),
        (["wzw", "--algebra", "sl2", "--level", "4", "--json"], 0),
        (["condense", "--algebra", "sl3", "--level", "9", "--json"], 0),
        (["condense", "--algebra", "sl3", "--level", "9", "--check", "--json"], 0),
        (["verify-paper", "--json"], 0),
    ]
    for args, want in runs:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        errors = [] if proc.returncode != want else list(validator.iter_errors(json.loads(proc.stdout)))
        status = "ok" if proc.returncode == want and not errors else "FAILED"
        failures += status != "ok"
        print(f"{status}: {' '.join(args)} (exit {proc.returncode})")
        for e in errors[:5]:
            print(f"  {e.json_path}: {e.message}")

    for path in sorted((data / "golden").glob("*.json")):
        errors = list(jsonschema.Draft202012Validator(golden_schema).iter_errors(json.loads(path.read_text())))
        failures += bool(errors)
        print(f"{'ok' if not errors else 'FAILED'}: {path.name}")
        for e in errors[:5]:
            print(f"  {e.json_path}: {e.message}")

    for args, want in [
        (["wzw", "--algebra", "sl3", "--level", "0", "--dims"], 2),
        (["wzw", "--algebra", "sl3", "--level", "9", "--bogus"], 2),
        (["condense", "--algebra", "sl3", "--level", "4"], 1),
        (["--help"], 0),
    ]:
        code = subprocess.run([binary, *args], capture_output=True, check=False).returncode
        failures += code != want
        print(f"{'ok' if code == want else 'FAILED'}: exit {code} for {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
