# %% [markdown]
# Networks that are not tree-based. Every W-fence is an obstruction, and
# the number of W-fences is the minimum number of leaves that must be hung
# on the network to make it tree-based. We cross-check that number with
# the bipartite-matching formula and then repair the network.

# %%
from treebased import (attach_leaf, decompose, deviation, deviation_via_matching,
                       find_subdivision_tree, gadget_with_profile, is_tree_based, random_network)
from treebased.errors import NotTreeBased

net = gadget_with_profile([("M-fence", 2), ("M-fence", 4), ("M-fence", 4),
                           ("N-fence", 1), ("N-fence", 3), ("W-fence", 2)])
d = decompose(net)
print(d.counts)
print("tree-based:", is_tree_based(d))

# %% searching for a tree fails with the offending trail as witness
try:
    find_subdivision_tree(d)
except NotTreeBased as exc:
    fence = d.trails[exc.witnesses[0]]
    print("W-fence arcs:", [net.arc_names(a) for a in fence.arcs])

# %% deviation by trails and by maximum matching agree
print("delta (trails):  ", deviation(d).delta)
print("delta (matching):", deviation_via_matching(net))

# %% hanging a leaf on any W-fence arc splits it into two N-fences
fixed = attach_leaf(net, fence.arcs[0], leaf_name="y")
print(decompose(fixed).counts, "tree-based:", is_tree_based(fixed))

# %% a random network with several W-fences, repaired one fence at a time
net = random_network(6, 9, seed=22, tree_based=False)
while not is_tree_based(net):
    d = decompose(net)
    print("delta =", deviation(d).delta, "matching =", deviation_via_matching(net))
    net = attach_leaf(net, d.trails[d.w_fences[0]].arcs[0])
print("repaired:", net)
