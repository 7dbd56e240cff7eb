"""
Splitting of primes in Q(zeta_p)
================================

The number of primes above ell in Q(zeta_p) is (p - 1) / ord_p(ell).  For
p = 7, primes ell = 2, 4 (mod 7) split into exactly two primes of degree 3.
"""

import numpy as np

from dpftypes.cyclotomic import primes_below, split_in_cyclotomic, two_split_primes

# %%
ps = primes_below(2000)
for p in (3, 5, 7):
    g = np.array([split_in_cyclotomic(int(ell), p).g for ell in ps])
    values, freq = np.unique(g, return_counts=True)
    print(p, dict(zip(values.tolist(), freq.tolist())))

# %%
print(two_split_primes(200))
print([split_in_cyclotomic(q, 7).flags() for q in two_split_primes(40)])
