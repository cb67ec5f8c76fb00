# %% [markdown]
# The bound sequence
#
# The clique order we can promise for a graph on n vertices with independence
# number a is floor(n / beta(a)) - 1. Everything here is an exact fraction.

# %%
from fractions import Fraction

import numpy as np

from cliqueimm.beta import beta, check_superadditivity, f_of_alpha, glw_bound, guarantee

for i in range(1, 9):
    print(i, beta(i), float(beta(i)))

# %%
# beta(a) = 9/4 a - f(a), with f creeping up from 9/4 as a harmonic tail
alphas = np.arange(3, 41)
f = np.array([float(f_of_alpha(int(a))) for a in alphas])
print(f[:5], f[-1])
assert all(beta(int(a)) == Fraction(9, 4) * int(a) - f_of_alpha(int(a)) for a in alphas)

# %%
# the per-vertex cost beta(a)/a drops below 2 only while a <= 10
ratio = np.array([float(beta(int(a))) / int(a) for a in alphas])
print(alphas[ratio <= 2])

# %%
# superadditivity holds with room to spare except at i = 4
print([i for i in range(4, 41) if not check_superadditivity(i)])

# %%
# compared with the older general bound ceil(n / 3.54a - 1.13)
for n in (60, 100, 200):
    print(n, [(a, guarantee(n, a), glw_bound(n, a)) for a in (3, 4, 5, 6)])
