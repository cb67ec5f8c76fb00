# %% [markdown]
# A small seeded benchmark
#
# Same harness as `cliqueimm bench`; the table is reproducible for a seed.

# %%
import numpy as np

from cliqueimm.bench import run_bench

summary = run_bench(trials=40, n_max=100, alpha_max=6, seed=11, exact_alpha=True)
print(summary.table())

# %%
rows = summary.rows
order = np.array([r.order for r in rows])
promised = np.array([r.guarantee for r in rows])
glw = np.array([r.glw for r in rows])
print("margin over guarantee:", np.min(order - promised), np.median(order - promised))
print("guarantee beats glw on", np.mean(promised >= glw))
# the exceptions are tiny graphs where both bounds promise nothing
print([(r.n, r.guarantee, r.glw) for r in rows if r.guarantee < r.glw])

# %%
secs = np.array([r.seconds for r in rows])
print(f"median {np.median(secs):.4f}s, max {secs.max():.3f}s")
