"""Run the CLI twice per command, compare bytes, validate JSON against docs/schema.json."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

runs = [
    (["tower", "--p", "3"], 0),
    (["chartab", "--n", "2", "--p", "3", "--side", "base"], 0),
    (["chartab", "--n", "2", "--p", "2", "--group", "SL"], 0),
    (["double-cosets", "--n", "2", "--p", "3"], 0),
    (["double-cosets", "--n", "2", "--p", "2", "--route", "s-set"], 0),
    (["pair-scan", "--pair", "GL:GL", "--n", "2", "--p", "3"], 0),
    (["pair-scan", "--pair", "GL:U", "--n", "2", "--p", "3"], 0),
    (["pair-scan", "--pair", "SL:SL", "--n", "2", "--p", "3"], 2),
    (["packet", "--n", "2", "--p", "3", "--rep", "5"], 0),
    (["packet", "--n", "2", "--p", "3"], 0),
    (["theorem43", "--n", "2", "--p", "3"], 0),
    (["unitary", "--n", "2", "--p", "3"], 0),
    (["padic-example", "--q", "11"], 0),
    (["padic-example", "--q", "3"], 1),
    (["thm11", "--count", "100"], 0),
]

failures = 0
with tempfile.TemporaryDirectory() as cache:
    for args, want in runs:
        outs = []
        for attempt in range(2):
            # first run fills the cache, second reads it
            p = subprocess.run([binary, *args, "--cache-dir", cache], capture_output=True)
            outs.append(p)
        name = " ".join(args)
        for p in outs:
            if p.returncode != want:
                print(f"FAIL {name}: exit {p.returncode}, want {want}\n{p.stderr.decode()}")
                failures += 1
        if outs[0].stdout != outs[1].stdout:
            print(f"FAIL {name}: output differs between runs")
            failures += 1
        try:
            doc = json.loads(outs[0].stdout)
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            for e in errors[:3]:
                print(f"FAIL {name}: schema: {list(e.path)}: {e.message}")
            failures += bool(errors)
            if doc["ok"] != (want == 0):
                print(f"FAIL {name}: ok={doc['ok']} with exit {want}")
                failures += 1
        except json.JSONDecodeError as e:
            print(f"FAIL {name}: not json: {e}")
            failures += 1
        if failures == 0:
            print(f"ok   {name}")

sys.exit(1 if failures else 0)
