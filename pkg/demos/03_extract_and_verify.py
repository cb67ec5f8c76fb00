# %% [markdown]
# Extracting an immersion and checking it

# %%
from collections import Counter

from cliqueimm.beta import guarantee
from cliqueimm.certificate import ImmersionCertificate, verify
from cliqueimm.extractor import extract
from cliqueimm.generators import disjoint_cliques, noisy_cliques
from cliqueimm.graph import independence_number

# disjoint cliques are the tight case for the conjectured n/a
g = disjoint_cliques(3, 9)
cert, trace = extract(g)
print(cert.clique_order(), guarantee(g.n, 3))

# %%
# a messier graph: 4 cliques with random cross edges
g = noisy_cliques(4, 100, 0.5, seed=2)
a = independence_number(g)
cert, trace = extract(g, debug=True)
print(g.n, a, cert.clique_order(), guarantee(g.n, a))
print(Counter(r.branch for r in trace.levels))

# %%
# lengths of the paths: all odd and at most 2a - 1
print(Counter(len(p) - 1 for p in cert.paths.values()))

# %%
rep = verify(g, cert, strong=True, odd=True, max_len=2 * a - 1)
print(rep.summary())

# %%
# the certificate travels as JSON and re-verifies identically
text = cert.to_json(g.n, {"strong": True, "odd": True, "max_length": 2 * a - 1})
back, n, claims = ImmersionCertificate.from_json(text)
print(verify(g, back, strong=True, odd=True, max_len=2 * a - 1).summary())

# %%
# one augmentation step up close
for r in trace.levels:
    if r.branch == "augment" and r.non_neighbors:
        print(r.depth, r.n, r.alpha, r.anchors, r.non_neighbors, r.flow_value)
        break
