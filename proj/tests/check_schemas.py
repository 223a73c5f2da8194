"""Validates every fixture the CLI emits against schemas/<kind>.schema.json."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

opcat, schemas = sys.argv[1], pathlib.Path(sys.argv[2])
envelope = json.loads((schemas / "envelope.schema.json").read_text())
names = subprocess.run([opcat, "examples", "--list"], capture_output=True, text=True, check=True).stdout.split()
with tempfile.TemporaryDirectory() as tmp:
    docs = []
    for n in names:
        out = pathlib.Path(tmp) / f"{n}.json"
        subprocess.run([opcat, "examples", n, "--out", str(out)], capture_output=True, check=True)
        docs.append(out)
    fib = pathlib.Path(tmp) / "fib.json"
    subprocess.run([opcat, "groth", str(docs[names.index("odot")]), str(docs[names.index("operadPoset")]),
                    "--out", str(fib)], capture_output=True, check=True)
    docs.append(fib)
    for p in docs:
        d = json.loads(p.read_text())
        jsonschema.validate(d, envelope)
        jsonschema.validate(d, json.loads((schemas / f"{d['kind']}.schema.json").read_text()))
print(f"{len(docs)} documents valid")
