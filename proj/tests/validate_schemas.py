"""Run the CLI over representative inputs and validate every JSON output
against the shipped schemas; also checks CSV framing and exit codes."""

import csv
import io
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

TOOL = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

failures = []


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(args, expect=0):
    proc = subprocess.run([TOOL, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{args}: exit {proc.returncode}, wanted {expect}: {proc.stderr.strip()}")
    return proc.stdout


def check(doc, name, label):
    try:
        jsonschema.validate(doc, schema(name))
    except jsonschema.ValidationError as e:
        failures.append(f"{label}: {e.message}")


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    tensors = {
        "ones": {"shape": [2, 2], "entries": [1, 1, 1, 1]},
        "mixed": {"shape": [2, 3], "entries": [0.5, -1, 0.25, 2, 0, -0.75]},
        "cube": {"shape": [2, 2, 2], "entries": [1, -2, 3, 0.5, -1, 0, 0.25, 1]},
        "vector": {"shape": [3], "entries": [1, 1, 1]},
    }
    for name, t in tensors.items():
        check(t, "tensor", f"tensor {name}")
        (tmp / f"{name}.json").write_text(json.dumps(t))

    cases = [
        ("constants", ["constants", "--p", "1.5"]),
        ("constants", ["constants", "--p", "1.9", "--r", "1.9", "--m", "3"]),
        ("constants", ["constants", "--p", "inf", "--M", "3"]),
        ("constants", ["constants", "--p", "3", "--M", "3", "--r", "1.5", "--m", "2"]),
        ("moment", ["moment", "--tensor", str(tmp / "ones.json"), "--r", "0.5"]),
        ("moment", ["moment", "--tensor", str(tmp / "cube.json"), "--r", "3"]),
        ("witness", ["witness", "--m", "2", "--r", "1", "--N", "2,3,4"]),
        ("witness", ["witness", "--m", "1", "--r", "1.9", "--N", "16,64,256"]),
        ("verify", ["verify", "--form", str(tmp / "mixed.json"), "--p", "inf"]),
        ("verify", ["verify", "--form", str(tmp / "cube.json"), "--p", "2.5", "--which", "D"]),
        ("verify", ["verify", "--form", str(tmp / "vector.json"), "--p", "1.5", "--which", "equivalence"]),
        ("verify", ["--seed", "7", "verify", "--random", "--M", "3", "--N", "3", "--p", "3"]),
    ]
    for i, (name, args) in enumerate(cases):
        check(json.loads(run(args)), name, f"stdout {args}")
        out = tmp / f"run{i}"
        run(["--out", str(out), *args])
        check(json.loads((out / f"{name}.json").read_text()), name, f"--out {args}")
        manifest = json.loads((out / "manifest.json").read_text())
        check(manifest, "manifest", f"manifest {args}")
        for path in manifest["outputs"]:
            if not pathlib.Path(path).exists():
                failures.append(f"manifest {args}: missing output {path}")

    text = subprocess.run([TOOL, "--format", "csv", "witness", "--m", "1", "--r", "1.5", "--N", "4,8"],
                          capture_output=True, check=True).stdout.decode()
    if not text.endswith("\r\n") or "\n" in text.replace("\r\n", ""):
        failures.append("csv: records must end in CRLF")
    rows = list(csv.reader(io.StringIO(text, newline="")))
    if rows[0] != ["N", "l2", "moment", "ratio", "bound"] or len(rows) != 3:
        failures.append(f"csv: unexpected rows {rows}")

    (tmp / "bad.json").write_text('{"shape": [2], "entries": [1]}')
    run(["moment", "--tensor", str(tmp / "bad.json"), "--r", "1"], expect=4)
    run(["moment", "--tensor", str(tmp / "ones.json"), "--r", "-1"], expect=2)
    run(["--bit-budget", "3", "moment", "--tensor", str(tmp / "ones.json"), "--r", "1"], expect=3)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} schema/format failures")
sys.exit(1 if failures else 0)
