#!/usr/bin/env python3
"""End-to-end checks of the mvx command line: exit codes, report shapes,
and byte-stable output under --no-timings."""

import json
import subprocess
import sys
import tempfile
import os

MVX = sys.argv[1] if len(sys.argv) > 1 else "mvx"
failures = 0


def run(args, stdin=None):
    proc = subprocess.run([MVX] + args, input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout


def check(name, cond):
    global failures
    if cond:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name}")


TUPLE = json.dumps({
    "dim": 2,
    "polytopes": [
        {"dim": 2, "points": [[0, 0], [1, 0], [0, 1]]},
        {"dim": 2, "points": [[0, 0], [2, 0], [0, 2]]},
    ],
})

SEGMENT = json.dumps({"dim": 1, "polytopes": [{"dim": 1, "points": [[0], [3]]}]})

POINT_SLOT = json.dumps({
    "dim": 2,
    "polytopes": [
        {"dim": 2, "points": [[1, 1]]},
        {"dim": 2, "points": [[0, 0], [2, 0], [0, 2]]},
    ],
})

CONFIG = json.dumps({
    "vars": 2,
    "sets": [{"degree": 3, "exponents": [[3, 0], [0, 3]]}],
})

CONFIG3 = json.dumps({
    "vars": 3,
    "sets": [
        {"exponents": [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]]},
        {"exponents": [[3, 0, 0], [0, 3, 0], [0, 0, 3]]},
    ],
})

SYSTEM = json.dumps({
    "vars": 1,
    "polys": [{"terms": [{"coeff": 1, "exp": [3]}, {"coeff": 1, "exp": [0]}]}],
})


code, out = run(["mv", "--no-timings"], stdin=TUPLE)
rep = json.loads(out)
check("mv exit 0", code == 0)
check("mv all routes give 2", rep["routes"]["geometric"] == 2
      and rep["routes"]["interp"] == 2 and rep["routes"]["algebraic"]["value"] == 2
      and rep["routes"]["samuel"]["value"] == 2)
check("mv echoes the stabilization base", rep["routes"]["algebraic"]["base"] > 0)
check("mv agreement", rep["agreement"] is True)

code, out = run(["mv", "--no-timings"], stdin=SEGMENT)
rep = json.loads(out)
check("mv segment bound 3", code == 0 and rep["routes"]["geometric"] == 3)

code, out = run(["mv", "--no-timings"], stdin=POINT_SLOT)
rep = json.loads(out)
check("mv point slot gives 0", code == 0 and rep["routes"]["geometric"] == 0
      and rep["agreement"] is True)

code, out = run(["mv", "--no-timings", "--route", "interp"], stdin=TUPLE)
rep = json.loads(out)
check("mv single route", code == 0 and rep["routes"]["interp"] == 2
      and "geometric" not in rep["routes"])

code, out = run(["mv", "--no-timings"], stdin="{broken")
check("malformed input exits 2", code == 2 and "error" in json.loads(out))

code, out = run(["mv", "--no-timings"], stdin='{"dim": 2, "polytopes": []}')
check("wrong tuple arity exits 2", code == 2)

out1 = run(["mv", "--no-timings", "--seed", "5"], stdin=TUPLE)[1]
out2 = run(["mv", "--no-timings", "--seed", "5"], stdin=TUPLE)[1]
check("reports are byte-identical without timings", out1 == out2)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(TUPLE)
    path = fh.name
code, out = run(["mv", "--no-timings", "--input", path])
check("file input works", code == 0 and json.loads(out)["agreement"] is True)
os.unlink(path)

code, out = run(["mixedmult", "--no-timings", "--alpha", "0,1"], stdin=CONFIG)
rep = json.loads(out)
check("mixedmult fd and diag agree on 3", code == 0 and rep["fd"] == 3
      and rep["diag"] == 3 and rep["agreement"] is True)
check("mixedmult reports the observed degree", rep["hilbert_degree"]["observed"] == 1)

code, out = run(["mixedmult", "--no-timings", "--alpha", "0,1,1", "--route", "fd"],
                stdin=CONFIG3)
rep = json.loads(out)
check("mixedmult Bezout 6", code == 0 and rep["fd"] == 6)

code, out = run(["mixedmult", "--no-timings", "--alpha", "0,1,1"], stdin=CONFIG)
check("bad alpha exits 2", code == 2)

code, out = run(["mixedmult", "--no-timings", "--alpha", "2,0,0"], stdin=CONFIG3)
rep = json.loads(out)
check("first-slot multiplicity is one", code == 0 and rep["fd"] == 1 and rep["diag"] == 1)

code, out = run(["hilbert", "--no-timings", "--alpha", "2,3"], stdin=CONFIG)
rep = json.loads(out)
check("hilbert raw value", code == 0 and rep["value"] == 2 + 9 + 1)

code, out = run(["samuel", "--no-timings", "--alpha", "0,1,1", "--seed", "4"], stdin=CONFIG3)
rep = json.loads(out)
check("samuel dim and value", code == 0 and rep["dim"] == 1 and rep["e"] == 6
      and rep["positive"] is True)

code, out = run(["bernstein", "--no-timings", "--exhaustive-q", "3", "--trials", "0",
                 "--prime", "3"], stdin=SYSTEM)
rep = json.loads(out)
check("bernstein characteristic-3 cubic", code == 0 and rep["bound"] == 3
      and rep["field_checks"][0]["distinct"] == 1 and rep["multiplicity_count"] == 3)

code, out = run(["probe-af", "--no-timings"],
                stdin=json.dumps({
                    "vars": 3,
                    "sets": [
                        {"exponents": [[2, 0, 0], [0, 2, 0], [0, 0, 2]]},
                        {"exponents": [[1, 1, 0], [0, 1, 1]]},
                    ],
                }))
rep = json.loads(out)
check("probe-af runs and reports both sides", code == 0 and rep["lhs"] == rep["e"] ** 2
      and rep["rhs"] == rep["e11"] * rep["e22"])

code, out = run(["crosscheck", "--no-timings", "--trials", "4", "--seed", "2"])
rep = json.loads(out)
check("crosscheck agrees", code == 0 and rep["failures"] == 0)

print(f"\n{failures} failure(s)")
sys.exit(1 if failures else 0)
