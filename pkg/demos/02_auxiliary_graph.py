# %% [markdown]
# The auxiliary graph A_a and its minimal cuts
#
# Vertices encode neighbourhood traces on a maximum independent set. Flow
# from d_a to the d_S vertices is what attaches a new branch vertex, so the
# shape of the minimal cuts is what decides whether enough flow exists.

# %%
from cliqueimm.aalpha import (audit_aalpha, build_aalpha, derive_j_partition,
                              enumerate_minimal_cuts)

for a in range(2, 7):
    A = build_aalpha(a)
    print(a, A.graph.n, A.graph.m)

# %%
A = build_aalpha(3)
for c in enumerate_minimal_cuts(A):
    print(A.labels(sorted(c)))

# %%
# every cut other than {d_a} splits {1..a-1} into J1, J2 with the three properties
for c in enumerate_minimal_cuts(A):
    if c == frozenset([A.source]):
        continue
    jp = derive_j_partition(A, c)
    print(A.labels(sorted(c)), jp.sets(), jp.passed)

# %%
for a in (2, 3, 4):
    rep = audit_aalpha(a)
    print(a, rep.mode, rep.cuts, rep.passed)
rep = audit_aalpha(5, exhaustive=False, samples=600, seed=1)
print(5, rep.mode, rep.cuts, rep.passed)
