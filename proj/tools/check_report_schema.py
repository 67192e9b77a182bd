#!/usr/bin/env python3
# Copyright 2026 The majex Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates majex run reports against schemas/run_report.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)


def main() -> int:
    binary, root = sys.argv[1], Path(sys.argv[2])
    schema = json.loads((root / "schemas" / "run_report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    device = str(root / "data" / "device_synthetic.json")
    runs = [
        (["run", "--experiment", "exchange", "--shots", "2000", "--seed", "7"], 0),
        (["run", "--experiment", "tomography", "--shots", "1000", "--seed", "3"], 0),
        (["run", "--shots", "2000", "--seed", "1", "--noise", device, "--device", device, "--compiled"], 0),
        (["run", "--shots", "1", "--seed", "0"], None),
    ]
    failed = 0
    for args, want in runs:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        if want is not None and proc.returncode != want:
            print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
            failed += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.message} at {list(e.path)}")
        failed += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)} (exit {proc.returncode})")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
