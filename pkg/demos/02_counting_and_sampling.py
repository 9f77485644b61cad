# %% [markdown]
# Counting, listing and sampling subdivision trees. The number of trees is a
# product over trails: 2 per crown, m/2 per M-fence of size m, 1 per N-fence,
# 0 as soon as a W-fence appears.

# %%
from collections import Counter

import numpy as np

from treebased import count, decompose, enumerate_k, gadget_with_profile, sample_uniform

# 21 single-arc N-fences glue together M-fences of sizes 2..14: 1*2*3*...*7 trees
profile = [("N-fence", 1)] * 21 + [("M-fence", m) for m in range(2, 16, 2)]
net = gadget_with_profile(profile)
print(net, "count =", count(net))

# %% the first few trees of the enumeration; the last trail varies fastest
for tree in enumerate_k(net, 4):
    print(tree.selection[-7:], len(tree.arcs), "arcs")

# %% a crown doubles the count
net2 = gadget_with_profile([("crown", 8), ("N-fence", 7), ("M-fence", 6)]
                           + [("M-fence", 2)] * 2 + [("N-fence", 1)] * 8)
d2 = decompose(net2)
print(d2.counts, "count =", count(d2))

# %% uniform sampling draws every trail's choice independently
draws = sample_uniform(d2, seed=2024, n=12000)
freq = Counter(t.arcs for t in draws)
print("empirical frequencies:", sorted(freq.values()))
print("relative spread:", np.std(list(freq.values())) / np.mean(list(freq.values())))

# %% counts are exact integers of any size
big = gadget_with_profile([("M-fence", 2)] * 3 + [("M-fence", 8)] * 30 + [("N-fence", 1)] * 90)
print("4**30 =", count(big))
