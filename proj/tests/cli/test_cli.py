import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, ROOT = sys.argv[1], sys.argv[2]
SCHEMAS = os.path.join(ROOT, "schemas")
DATA = os.path.join(ROOT, "tests", "cli", "data")
failures = []


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def run(*args):
    p = subprocess.run([BIN, *args], cwd=DATA, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else "  " + detail))
    if not cond:
        failures.append(name)


def validate(name, doc, sch):
    try:
        jsonschema.validate(doc, schema(sch))
        check(name, True)
    except jsonschema.ValidationError as e:
        check(name, False, e.message)


inputs = {
    "tuple.json": "tuple", "tuple_l1.json": "tuple", "malformed.json": "tuple",
    "operator.json": "operator", "vec_a.json": "vector", "vec_b.json": "vector",
    "tensor.json": "tensor", "cayley_z3.json": "cayley", "cayley_bad.json": "cayley", "mean_z3.json": "mean",
}
for f, s in inputs.items():
    with open(os.path.join(DATA, f)) as fh:
        validate("input schema " + f, json.load(fh), s)

commands = [
    ("norm", ["norm", "--spec", "lattice", "-i", "tuple.json"]),
    ("norm", ["norm", "--spec", "std:2", "-i", "tuple.json"]),
    ("norm", ["norm", "--spec", "pq:1,2", "-i", "tuple.json", "--seed", "7"]),
    ("norm", ["norm", "--spec", "ext:2,2,3", "-i", "tuple.json"]),
    ("mb", ["mb", "-i", "operator.json", "--alpha", "1,2"]),
    ("mb", ["mb", "-i", "operator.json", "--spec", "lattice", "--k-max", "2"]),
    ("mb", ["mb", "--set", "vec_a.json", "--set", "vec_b.json", "--spec", "pq:1,1"]),
    ("summing", ["summing", "-i", "tuple.json", "--p", "3/2"]),
    ("summing", ["summing", "--operator", "operator.json", "--q", "2", "--p", "1", "--tuple-cap", "2"]),
    ("tensor", ["tensor", "-i", "tensor.json"]),
    ("tensor", ["tensor", "-i", "tensor.json", "--spec", "lattice"]),
    ("group", ["group", "--gen", "cyclic:6", "--mean", "point:e", "--pq", "1,1"]),
    ("group", ["group", "--cayley", "cayley_z3.json", "--mean", "mean_z3.json", "--pq", "2,2"]),
    ("group", ["group", "--gen", "left_zero:2"]),
    ("verify", ["verify", "--trials", "2"]),
    ("demo-kp", ["demo-kp", "--n-min", "1", "--n-max", "3"]),
]
outputs = {}
for sub, args in commands:
    code, out, err = run(*args, "--json")
    label = " ".join(args)
    check("exit 0: " + label, code == 0, err)
    if code == 0:
        doc = json.loads(out)
        outputs[label] = doc
        validate("output schema: " + label, doc, sub + ".output")

# spec examples
g = outputs["group --gen cyclic:6 --mean point:e --pq 1,1"]
check("point mass on cyclic:6 has bound 6", abs(g["bounds"][0]["bound"] - 6) < 1e-9)
code, out, _ = run("group", "--gen", "cyclic:6", "--mean", "uniform", "--pq", "1,1")
check("uniform mean has bound 1", code == 0 and "bound: 1 " in out, out)
code, out, _ = run("group", "--gen", "left_zero:2")
check("left_zero:2 report", "not left-cancellative, uniform constant 2" in out, out)
check("lattice certified", outputs["norm --spec lattice -i tuple.json"]["certified"])
check("std:2 has a partition witness", "partition" in outputs["norm --spec std:2 -i tuple.json"]["witness"])

kp = outputs["demo-kp --n-min 1 --n-max 3"]["rows"]
check("kp n=1 columns equal 1", abs(kp[0]["alpha_qq"] - 1) < 1e-9 and abs(kp[0]["alpha_pq"] - 1) < 1e-9)
code, out, _ = run("demo-kp", "--n-min", "2", "--n-max", "3", "--csv")
rows = list(csv.reader(io.StringIO(out)))
check("kp csv has two numeric columns", code == 0 and all(len(r) == 3 for r in rows)
      and all(float(r[1]) > 0 and float(r[2]) > 0 for r in rows[1:]), out)

# determinism
a = run("norm", "--spec", "pq:1,2", "-i", "tuple.json", "--seed", "7")
b = run("norm", "--spec", "pq:1,2", "-i", "tuple.json", "--seed", "7")
check("same seed, identical stdout", a == b)

# verify
code, out, _ = run("verify", "--trials", "0", "--json")
check("verify --trials 0 is an empty passing report", code == 0 and json.loads(out)["total"] == 0)
with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "out.json")
    code, _, _ = run("verify", "--trials", "1", "--report", path)
    with open(path) as fh:
        rep = json.load(fh)
    check("verify --report writes parseable JSON", code == 0 and rep["failed"] == 0 and rep["total"] > 0)
    validate("verify report schema", rep, "verify.output")
    cpath = os.path.join(d, "out.csv")
    code, _, _ = run("verify", "--trials", "1", "--report", cpath)
    with open(cpath) as fh:
        header = fh.readline().strip()
    check("verify --report writes CSV", header == "name,pass,lhs,rhs,slack,tolerance,equality,seed,config")
    opath = os.path.join(d, "norm.json")
    code, out, _ = run("norm", "--spec", "min", "-i", "tuple.json", "--json", "-o", opath)
    with open(opath) as fh:
        check("--output writes the file", code == 0 and out == "" and json.load(fh)["spec"] == "min")

# exit codes
for expect, args in [
    (2, ["norm", "--spec", "lattice", "-i", "malformed.json"]),
    (2, ["norm", "--spec", "lattice", "-i", "missing.json"]),
    (2, ["norm", "--spec", "bogus", "-i", "tuple.json"]),
    (2, ["norm", "--spec", "lattice"]),
    (2, ["group", "--gen", "cyclic:6", "--mean", "point:zz", "--pq", "1,1"]),
    (3, ["norm", "--spec", "pq:2,1", "-i", "tuple.json"]),
    (4, ["group", "--cayley", "cayley_bad.json"]),
]:
    code, _, err = run(*args)
    check("exit %d: %s" % (expect, " ".join(args)), code == expect, "got %d: %s" % (code, err.strip()))

print("%d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
