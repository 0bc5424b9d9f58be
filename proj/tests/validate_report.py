"""Runs `bicyclic verify --format json` and validates the output against the report schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    for args in (["--suite", "all"], ["--suite", "order", "--bound", "3"]):
        proc = subprocess.run([exe, "verify", "--format", "json", *args],
                              capture_output=True, text=True, check=False)
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, schema)
        if doc["pass"] != (proc.returncode == 0):
            print("pass field disagrees with exit code", file=sys.stderr)
            return 1
    print("report schema ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
