#!/usr/bin/env python3
"""Smoke tests for the python module: the main operations on small inputs
with known values."""

import sys
from fractions import Fraction

import mixedvol as mv

failures = 0


def check(name, cond):
    global failures
    if cond:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name}")


check("convex hull drops interior points",
      mv.convex_hull(2, [[0, 0], [3, 0], [0, 3], [1, 1]]) == [[0, 0], [0, 3], [3, 0]])

check("minkowski sum of intervals",
      mv.minkowski_sum(1, [[0], [1]], [[0], [2]]) == [[0], [3]])

check("volume of the unit triangle",
      mv.euclidean_volume(2, [[0, 0], [1, 0], [0, 1]]) == Fraction(1, 2))

check("normalized volume sees the difference lattice",
      mv.lattice_normalized_volume(1, [[0], [2]]) == 1)

check("huge coordinates survive the boundary",
      mv.lattice_normalized_volume(1, [[0], [10 ** 40]]) == 1)

simplex = [[0, 0], [1, 0], [0, 1]]
doubled = [[0, 0], [2, 0], [0, 2]]
check("mixed volume routes agree",
      mv.mixed_volume(2, [simplex, doubled]) == 2
      and mv.mixed_volume_ie(2, [simplex, doubled]) == 2
      and mv.mixed_volume_interp(2, [simplex, doubled]) == 2
      and mv.mv_via_algebra(2, [simplex, doubled]) == 2)

check("sumset power", mv.sumset_power([[1, 0], [0, 2]], 2) == [[0, 4], [1, 2], [2, 0]])

dense2 = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]]
dense3 = [[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [2, 0, 1], [1, 1, 1],
          [0, 2, 1], [1, 0, 2], [0, 1, 2], [0, 0, 3]]
check("hilbert value counts monomials", mv.hilbert_value(3, [dense2], [0, 2]) == 15)
check("finite differences extract the Bezout number",
      mv.mixed_multiplicity_fd(3, [dense2, dense3], [0, 1, 1]) == 6)
check("diagonal multiplicity of the twisted segment",
      mv.diagonal_multiplicity(2, [[[1, 0], [0, 1]]], [1, 1]) == 2)

mm = mv.mixed_mults_via_diagonals(3, [dense2, dense3])
check("diagonal route recovers every multiplicity",
      mm[(0, 1, 1)] == 6 and mm[(2, 0, 0)] == 1 and mm[(1, 1, 0)] == 2 and mm[(1, 0, 1)] == 3)

sam = mv.samuel_mixed_multiplicity(3, [dense2, dense3], [0, 1, 1], seed=1)
check("samuel route", sam["positive"] and sam["e"] == 6 and sam["dim"] == 1)

lhs, rhs = mv.teissier_check(2, [[[2, 0], [1, 1], [0, 2]]], [0, 1], seed=2)
check("teissier colength", lhs == 2 and rhs == 2)

probe = mv.probe_af(3, [dense2, dense3])
check("probe reports the squared inequality data", probe["lhs"] == 36 and probe["rhs"] == 36)

cube = [(1, [3]), (1, [0])]  # x^3 + 1
check("newton polytope of the cubic", mv.newton_polytope(1, cube) == [[0], [3]])
check("bernstein bound", mv.bernstein_bound(1, [cube]) == 3)
check("distinct count in characteristic three",
      mv.count_torus_points_exhaustive(1, [cube], 3) == 1)
check("multiplicity count in characteristic three",
      mv.count_with_multiplicity(1, [cube], 3) == 3)

rep = mv.verify_bernstein(1, [cube], 32003, [3, 7], trials=3, seed=5)
check("verification report", rep["bound"] == 3 and rep["field_checks"][0]["distinct"] == 1)

trials, fails = mv.crosscheck(trials=3, seed=9)
check("crosscheck", trials == 3 and fails == 0)

print(f"\n{failures} failure(s)")
sys.exit(1 if failures else 0)
