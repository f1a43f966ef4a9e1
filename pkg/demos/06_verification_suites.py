"""
Running the structural verification suites
==========================================

The verify module bundles the library's own consistency checks: a seeded
corpus of random symmetric generating measures on two dozen small groups,
plus operator-level and decay checks.  Each suite returns a report of
pass/fail records that serializes to JSON.
"""

from groupwalk import CyclicGroup, exp_bound_check, foguel_decay, make_measure, verify_suite
from fractions import Fraction

import numpy as np

# The examples suite replays the two ball fixtures from demo 05.
report = verify_suite("examples")
print(f"examples suite: {len(report.records)} checks, passed = {report.passed}")
for line in report.summary_lines():
    print(" ", line)
print()

# Consecutive convolution powers of a lazy walk merge in total variation.
z9 = CyclicGroup(9)
lazy = make_measure(z9, [(0, Fraction(1, 3)), (1, Fraction(1, 3)), (8, Fraction(1, 3))])
decay = foguel_decay(z9, lazy)
print("Z9 lazy walk, tv(mu^n, mu^(n+1)):")
for n in (1, 5, 10, 20, decay.first_below):
    print(f"  n = {n:3d}: {decay.distances[n - 1]:.3e}")
print(f"  first n with gap <= 1e-6: {decay.first_below}")
print()

# The norm bound ||(I - T) exp(-n(I - T))|| <= 2 n^n / (e^n n!) holds for any
# contraction; the right-hand side decays like n^(-1/2) by Stirling.
t = np.diag([1.0, -1.0, 0.5])
print("exp bound for a diagonal contraction:")
for n in (1, 10, 100):
    res = exp_bound_check(t, n)
    print(f"  n = {n:3d}: lhs {res.lhs:.3e} <= rhs {res.rhs:.3e}  (ratio to Stirling {res.stirling_ratio:.4f})")
print()

# The full battery (seeded corpus, ~4000 checks) runs in a few seconds:
#   groupwalk verify all --seed 0
# or programmatically: verify_suite("all", seed=0).
