"""
Units of the normal closure and the zeta_3 norm test
====================================================

N = L(zeta_3) is a cyclic cubic extension of K = Q(zeta_3).  Its unit group
contains <zeta_6, eps, sigma(eps)> with finite index; saturating at 3 tells
whether zeta_3 is the relative norm of a unit.
"""

from dpftypes.cubic_field import field_for
from dpftypes.dpf_classifier import cube_saturate_units, zeta_norm_invariant
from dpftypes.sextic import SexticField
from dpftypes.units import fundamental_unit

# %%
# The generator sigma of Gal(N/K) sends theta to omega*theta, and the relative
# norm of theta is d.
F = field_for(3)
S = SexticField(F)
theta = S.from_cubic(F.theta)
print("N(theta) =", S.relative_norm(theta))
print("N(zeta_6) =", S.relative_norm(S.zeta6))

# %%
# Real units have relative norm 1, so the starting group only reaches +-1.
eps = S.from_cubic(fundamental_unit(F).fundamental)
print("N(eps) =", S.relative_norm(eps), " N(sigma eps) =", S.relative_norm(S.sigma(eps)))

# %%
# Saturation finds a cube among the classes zeta_6^a eps^b sigma(eps)^c,
# recognised from its complex embeddings and confirmed by exact cubing.
sat = cube_saturate_units(F)
for add in sat.additions:
    print("cube root of class", add.exponents, "verified:", S.pow(add.root, 3) == add.representative)
    print("  its relative norm:", S.relative_norm(add.root))
print("U =", zeta_norm_invariant(F, sat))

# %%
# For d = 2 the new unit found by saturation still has norm +-1, so U = 1.
F2 = field_for(2)
sat2 = cube_saturate_units(F2)
print("d=2 additions:", [a.exponents for a in sat2.additions], "U =", zeta_norm_invariant(F2, sat2))
