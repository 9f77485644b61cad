# %% [markdown]
# Decomposition, the tree-based test and counting all run in time linear in
# the number of arcs. Fit the log-log slope over a few sizes.

# %%
import time

import numpy as np

from treebased import count, decompose, is_tree_based, random_network

sizes, seconds = [], []
for n in (1000, 4000, 16000, 64000):
    net = random_network(n, n, seed=1, tree_based=True)
    t = time.perf_counter()
    d = decompose(net)
    is_tree_based(d)
    alpha = count(d)
    seconds.append(time.perf_counter() - t)
    sizes.append(net.num_arcs)
    print(f"{net.num_arcs:7d} arcs  {seconds[-1]:.4f} s  count has {alpha.bit_length()} bits")

slope = np.polyfit(np.log10(sizes), np.log10(seconds), 1)[0]
print(f"log-log slope: {slope:.2f}")
