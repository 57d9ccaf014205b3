"""End-to-end checks of the mrpot command-line tool.

usage: cli_test.py <mrpot binary> <source dir>
"""
import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
ROOT = Path(sys.argv[2])
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True)
    return p.returncode, p.stdout.decode(), p.stderr.decode()


def check(name, cond, info=""):
    print(("ok   " if cond else "FAIL ") + name + (f" ({info})" if info and not cond else ""))
    if not cond:
        failures.append(name)


def rows(text):
    body = "\n".join(l for l in text.splitlines() if not l.startswith("#"))
    return list(csv.DictReader(io.StringIO(body)))


def validate(name, text):
    try:
        doc = json.loads(text)
        jsonschema.validate(doc, SCHEMA)
        check(name, True)
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(name, False, str(e)[:200])
        return None


# table 1
code, out, _ = run("table", "--which", "1")
check("table 1 exit 0", code == 0)
cells = rows(out)
check("table 1 has 168 cells", len(cells) == 168, len(cells))
first = {c["column"]: c for c in cells if c["state"] == "2p" and c["inv_b"] == "0.025" and c["alpha"] == "0.75"}
check("table 1 2p present", first["present"]["binding_energy"] == "0.1205298")
check("table 1 2p previous", first["previous"]["binding_energy"] == "0.1205793")
check("table 1 2p numerov", abs(float(first["numerov"]["binding_energy"]) - 0.1205271) <= 2e-6)
blank = [c for c in cells if c["column"] == "numerov" and c["inv_b"] == "0.100"]
check("table 1 blank reference cells are repo-generated",
      blank and all(c["provenance"] == "repo-generated" and c["published"] == "" for c in blank))
check("CSV uses LF line endings", "\r" not in out)
code2, out2, _ = run("table", "--which", "1")
check("table 1 byte stable", out == out2)

# tables 2, 3 JSON
for which in ("2", "3"):
    code, out, _ = run("table", "--which", which, "--format", "json")
    check(f"table {which} json exit 0", code == 0)
    doc = validate(f"table {which} json matches schema", out)
    if doc:
        check(f"table {which} has 174 cells", len(doc["rows"]) == 174, len(doc["rows"]))
        check(f"table {which} cells carry provenance", all(r["provenance"] == "published" for r in doc["rows"]))
code, out, _ = run("table", "--which", "3")
co = [c for c in rows(out) if c["molecule"] == "LiH" and c["state"] == "2p" and c["inv_b"] == "0.025" and c["alpha"] == "1.50"]
check("table 3 LiH 2p alpha 1.5", len(co) == 1 and abs(float(co[0]["binding_energy"]) / 4.27334918 - 1) <= 5e-4)

# spectrum
code, out, _ = run("spectrum", "--alpha", "0.75", "--inv-b", "0.025", "--A", "2b", "--l-max", "4")
labels = {r["state"] for r in rows(out)}
needed = {"2p", "3p", "3d", "4p", "4d", "4f", "5p", "5d", "5f", "5g", "6p", "6d", "6f", "6g"}
check("spectrum contains table 1 states", code == 0 and needed <= labels, needed - labels)
energies = [float(r["energy_analytic"]) for r in rows(out)]
check("spectrum sorted", energies == sorted(energies))
code, out, _ = run("spectrum", "--A", "0.5")
check("sub-critical spectrum exits 1", code == 1 and len(rows(out)) == 0)
code, out, _ = run("spectrum", "--alpha", "0.75", "--inv-b", "0.025", "--scheme", "legacy", "--l-max", "1")
p2 = [r for r in rows(out) if r["state"] == "2p"]
check("legacy scheme matches previous column", p2 and p2[0]["energy_analytic"] == "-0.1205793")
code, out, _ = run("spectrum", "--units", "ev", "--molecule", "HCl", "--alpha", "0.75", "--l-max", "1")
p2 = [r for r in rows(out) if r["state"] == "2p"]
check("eV spectrum", code == 0 and p2 and abs(-float(p2[0]["energy_analytic"]) / 5.14067096 - 1) < 5e-4)
code, out, _ = run("spectrum", "--units", "ev", "--molecule", "NO", "--molecules-file", str(ROOT / "data" / "molecules.txt"))
check("molecule file extends registry", code == 0 and rows(out))
code, out, _ = run("spectrum", "--units", "ev", "--molecule", "HCl", "--constants-file", str(ROOT / "data" / "constants.txt"))
check("constants file accepted", code == 0)
code, out, _ = run("spectrum", "--format", "json")
validate("spectrum json matches schema", out)

# usage errors
for args in (["spectrum", "--scheme", "case9"], ["spectrum", "--A", "lots"], ["spectrum", "--inv-b", "-1"],
             ["table", "--which", "4"], ["table"], ["frobnicate"], [], ["spectrum", "--units", "ev"],
             ["spectrum", "--units", "ev", "--molecule", "XeF"],
             ["spectrum", "--constants-file", "/nonexistent", "--units", "ev", "--molecule", "HCl"]):
    code, _, _ = run(*args)
    check("usage error exit 2: " + " ".join(args), code == 2, code)
code, _, _ = run("--help")
check("help exits 0", code == 0)

# compare
code, out, _ = run("compare", "--alpha", "0.75", "--inv-b", "0.05", "--numeric", "approximated", "--l-max", "3")
r = rows(out)
check("approximated compare exit 0", code == 0 and len(r) > 5)
check("approximated deltas below 1e-8", all(abs(float(x["delta"])) < 1e-8 for x in r))
check("compare summary line", "# max |delta|" in out)
code, out, _ = run("compare", "--alpha", "0.75", "--inv-b", "0.025", "--numeric", "exact", "--states", "2p")
r = rows(out)
check("exact compare 2p delta", code == 0 and abs(float(r[0]["delta"]) + 2.6e-6) < 3e-7, r[0]["delta"] if r else "")
code, _, _ = run("compare", "--states", ",")
check("empty selection exits 2", code == 2)
code, out, _ = run("compare", "--states", "2p,9z")
check("bad label exits 2", code == 2)
code, out, _ = run("compare", "--inv-b", "0.1", "--states", "2p,30p", "--format", "json")
doc = validate("compare json with failed row matches schema", out)
check("failed row recorded, exit 1", code == 1 and doc and "error" in doc["rows"][1] and "error" not in doc["rows"][0])

# wavefunction
code, out, _ = run("wavefunction", "--state", "2p", "--alpha", "0.75", "--inv-b", "0.025")
check("wavefunction 2p nodes=0", code == 0 and "nodes=0" in out.splitlines()[1])
check("wavefunction default grid", len(rows(out)) == 4000)
code, out, _ = run("wavefunction", "--state", "4d", "--alpha", "0.75")
check("wavefunction 4d nodes=1", code == 0 and "nodes=1" in out)
code, out, _ = run("wavefunction", "--state", "2p", "--grid", "5:5:1")
check("single point grid", code == 0 and len(rows(out)) == 1)
for g in ("1:0:5", "0:1:5", "1:2", "a:b:c", "1:2:0"):
    code, _, _ = run("wavefunction", "--state", "2p", "--grid", g)
    check(f"bad grid {g} exits 2", code == 2)
code, _, _ = run("wavefunction", "--state", "9s", "--inv-b", "0.2")
check("unbound state exits 1", code == 1)
code, a, _ = run("wavefunction", "--state", "3d", "--alpha", "1", "--grid", "1:200:50")
code0, b, _ = run("wavefunction", "--state", "3d", "--alpha", "0", "--grid", "1:200:50")
check("alpha 0 and 1 wavefunctions identical", code == 0 and code0 == 0 and a == b)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
