"""
Coarse types of pure cubic fields
=================================

Combine the zeta_3 norm test (U) with the principal products of ramified
primes (A); the pair picks one of three types alpha, beta, gamma.
"""

import collections
import time

from dpftypes.coarse_types import type_lattice
from dpftypes.cubic_field import field_for
from dpftypes.dpf_classifier import classify_field
from dpftypes.errors import DegenerateRadicand
from dpftypes.radicand import normalize

# %%
# The three type tables.  For p = 5 two cells carry a pair of labels that
# only a zeta_5 norm test could separate.
for p in (3, 5, 7):
    print(p, [(t.label, t.u, t.a) for t in type_lattice(p)])

# %%
# Sweep the canonical radicands below 60.
seen, counts = set(), collections.Counter()
t = time.perf_counter()
for raw in range(2, 60):
    try:
        d = normalize(raw, 3).d
    except DegenerateRadicand:
        continue
    if d in seen:
        continue
    seen.add(d)
    c = classify_field(field_for(d))
    counts[c.coarse.label] += 1
    if c.coarse.label == "γ":
        print("type γ at d =", d, c.invariants)
print(dict(counts), f"{time.perf_counter() - t:.1f} s")
