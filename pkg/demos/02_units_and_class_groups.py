"""
Fundamental units and class groups
==================================

The unit group of a pure cubic field has rank one.  The fundamental unit is
found by sweeping a region of Minkowski space upward from a classical lower
bound, so the sweep itself proves minimality.  Class groups come from
relations among primes below the Minkowski bound, certified by principality
tests.
"""

import time

from dpftypes.class_group import class_group
from dpftypes.cubic_field import field_for
from dpftypes.units import fundamental_unit, verify_certificate

# %%
# d = 2: the unit 1 + theta + theta^2 is the inverse of theta - 1.
F = field_for(2)
U = fundamental_unit(F)
print("eps =", F.to_w(U.fundamental), "norm", F.norm(U.fundamental), "R =", round(U.regulator, 6))
print("slabs searched:", len(U.certificate.slabs), "certificate ok:", verify_certificate(F, U))

# %%
# A small table.  Regulators grow roughly like sqrt|disc|, which is what
# makes principality testing expensive for larger radicands.
print(f"{'d':>4} {'R':>10} {'h':>4}  Cl")
t = time.perf_counter()
for d in (2, 3, 5, 7, 10, 11, 19, 43, 61, 65):
    F = field_for(d)
    cg = class_group(F)
    print(f"{d:>4} {fundamental_unit(F).regulator:>10.5f} {cg.h:>4}  {cg.invariants}")
print(f"{time.perf_counter() - t:.1f} s")

# %%
# For prime d = 1 (mod 3) the class number is divisible by 3.
for d in (7, 13, 19, 31, 37, 43):
    print(d, class_group(field_for(d)).h)
