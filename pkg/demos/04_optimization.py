# %% [markdown]
# Maximum- and minimum-weight subdivision trees. Each trail is optimized on
# its own with prefix sums, so the result is checked here against a full
# enumeration on a small random instance.

# %%
import numpy as np

from treebased import count, enumerate_trees, optimize, random_network

rng = np.random.default_rng(3)
net = random_network(5, 4, seed=11, tree_based=True)
weights = rng.random(net.num_arcs).tolist()
print(net, "trees:", count(net))

# %%
best, best_score = optimize(net, weights, "max")
worst, worst_score = optimize(net, weights, "min")
scores = [t.score(weights) for t in enumerate_trees(net)]
print(f"max {best_score:.6f}  exhaustive {max(scores):.6f}")
print(f"min {worst_score:.6f}  exhaustive {min(scores):.6f}")

# %% weights can also live in the network file; they default to 0 when absent
from treebased import parse_edge_list, write_edge_list

weighted = parse_edge_list("".join(
    f"{t} {h} {w!r}\n" for (t, h), w in zip((net.arc_names(a) for a in range(net.num_arcs)), weights)))
print(optimize(weighted)[1] == best_score)
print(write_edge_list(weighted).splitlines()[0])
