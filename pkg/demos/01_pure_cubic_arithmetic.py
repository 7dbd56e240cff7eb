"""
Arithmetic in a pure cubic field
================================

Build Q(cbrt(d)), look at its integral basis, split a few rational primes
and multiply ideals.
"""

from dpftypes.cubic_field import field_for
from dpftypes.radicand import normalize

# %%
# Radicands are reduced to a canonical cube-free form first.  18 and 12 give
# the same field (12^2 = 144 = 18 * 2^3), and the smaller one is kept.
for raw in (2, 250, 18, 12, 10):
    r = normalize(raw, 3)
    print(f"{raw:>4} -> d={r.d:<3} a={r.a} b={r.b} species {r.species.value}")

# %%
# Species II fields have integral basis {1, theta, theta^2/b}; species I
# (d^2 = 1 mod 9) needs one extra element with denominator 3.
for d in (12, 10):
    F = field_for(d)
    print(d, "disc", F.discriminant, "basis/", F.basis_denominator, F.basis)

# %%
# Prime decomposition.  Primes dividing 3d ramify; for species I the prime 3
# splits as P^2 Q instead of ramifying totally.
F = field_for(10)
for ell in (2, 3, 5, 7, 11, 13):
    parts = [f"P(e={P.e},f={P.f})" for P in F.factor_prime(ell)]
    print(ell, " * ".join(parts))

# %%
# Ideal arithmetic is done on Hermite normal forms; the product of the prime
# powers above ell is the principal ideal (ell).
I = F.unit_ideal()
for P in F.factor_prime(3):
    I = F.ideal_mul(I, F.prime_power(P, P.e))
print("product over 3:", I.hnf, "== (3):", I == F.ideal(F.element(3)))
