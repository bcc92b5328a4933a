"""
Structure files, machine reports, and the command line
======================================================

"""

import json
import tempfile
from pathlib import Path

from spanv.cli import cmd_demo, main

# generate a shipped example: the pair Hopf structure on a two element
# set, together with its report
out = Path(tempfile.mkdtemp())
structure_path, report_path = cmd_demo("x2", out_dir=str(out))
print("wrote", Path(structure_path).name, "and", Path(report_path).name)

# the structure file is plain JSON with a schema version; apexes are
# recorded by size, legs and apex maps by position
data = json.loads(Path(structure_path).read_text())
print("kind:", data["kind"], "schema:", data["schema_version"])
print("multiplication block:", json.dumps(data["mlt"]))

# the checker prints one line per axiom and exits 0 on success
status = main(["check", structure_path])
print("exit code:", status)

# a corrupted file fails with exit code 1 and a located counterexample
data["cells"]["theta0"][0] = (data["cells"]["theta0"][0] + 1) % 4
bad_path = out / "corrupted.json"
bad_path.write_text(json.dumps(data))
status = main(["check", str(bad_path), "--report", str(out / "bad-report.json")])
print("exit code:", status)
report = json.loads((out / "bad-report.json").read_text())
failed = [r for r in report["results"] if r["status"] == "fail"]
print("first failure:", failed[0]["id"], failed[0]["counterexample"])

# reports are deterministic: checking the same file twice gives the
# same bytes apart from the timestamp, and the digest names the input
print("input digest:", report["input_digest"][:18] + "...")
