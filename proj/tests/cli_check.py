"""End-to-end checks of the sts command-line tool."""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

STS, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    return subprocess.run([STS, *args], capture_output=True, text=True)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


with open(SCHEMA) as f:
    schema = json.load(f)

r = run("census", "--n", "5", "--format", "json", "--workers", "1")
expect(r.returncode == 0, "census n=5 exits 0")
doc = json.loads(r.stdout)
jsonschema.validate(doc, schema)
expect([o["size"] for o in doc["orbits"]] == [18, 9], "census n=5 orbit sizes 18, 9")

for n in (3, 4, 9, 25):
    out = run("census", "--n", str(n), "--format", "json")
    jsonschema.validate(json.loads(out.stdout), schema)
    expect(out.returncode == 0, f"census n={n} validates and exits 0")

r = run("census", "--n", "3", "--format", "csv")
rows = list(csv.DictReader(io.StringIO(r.stdout)))
expect(r.returncode == 0 and len(rows) == 1, "census n=3 csv has one row")
expect(rows[0]["num_cusps"] == "2" and rows[0]["e2"] == "1" and rows[0]["genus"] == "0",
       "census n=3 csv: 2 cusps, e2=1, genus 0")
expect(rows[0]["cusp_widths"] == "1 2", "cusp widths are a space-separated list")

outputs = {run("census", "--n", "13", "--format", "csv", "--workers", str(w)).stdout for w in (1, 2, 8)}
expect(len(outputs) == 1, "census output identical across 1, 2, 8 workers")

expect(run("census", "--n", "2").returncode == 1, "census n=2 exits 1")
expect(run("census").returncode == 1, "census without --n exits 1")
expect(run("census", "--n", "5", "--format", "xml").returncode == 1, "unknown format exits 1")

r = run("orbit", "--n", "5", "--seed", "onecyl:1,1,3:0")
expect(r.returncode == 0 and "size 18" in r.stdout, "orbit n=5 seed (1,1,3) has size 18")
expect(run("orbit", "--n", "5", "--seed", "onecyl:1,1,2:0").returncode == 1, "area mismatch exits 1")
expect(run("orbit", "--n", "5", "--seed", "garbage").returncode == 1, "bad seed exits 1")

with tempfile.TemporaryDirectory() as tmp:
    dot = os.path.join(tmp, "g.dot")
    r = run("orbit", "--n", "3", "--seed", "onecyl:1,1,1:0", "--dot", dot)
    with open(dot) as f:
        text = f.read()
    nodes = [l for l in text.splitlines() if "[label=" in l and "->" not in l]
    expect(r.returncode == 0 and len(nodes) == 3, "orbit n=3 DOT has 3 nodes")

    out = os.path.join(tmp, "c.json")
    r = run("census", "--n", "7", "--out", out)
    with open(out) as f:
        jsonschema.validate(json.load(f), schema)
    expect(r.returncode == 0 and r.stdout == "", "census --out writes the file, not stdout")

r = run("verify", "--primes", "4..6")
expect(r.returncode == 0 and r.stdout.splitlines()[1:] == ["5 2 pass pass"], "verify 4..6 runs only n=5")
r = run("verify", "--primes", "5..7", "--brute-max", "8", "--involution-max", "12")
expect(r.returncode == 0, "verify 5..7 with oracles exits 0")
expect(run("verify", "--primes", "7..5").returncode == 1, "reversed range exits 1")
expect(run("verify", "--primes", "5-7").returncode == 1, "malformed range exits 1")

sys.exit(1 if failures else 0)
