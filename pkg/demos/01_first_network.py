# %% [markdown]
# A first look: read a small network, split its arcs into maximal zig-zag
# trails, and decide whether it is tree-based.

# %%
from treebased import (count, decompose, enumerate_trees, export_dot, find_subdivision_tree,
                       is_tree_based, parse_edge_list, parse_enewick)

text = """
# root r, tree vertex a, reticulation b
r a
r b
a x1
a b
b x2
"""
net = parse_edge_list(text)
print(net)

# %% the decomposition: one M-fence through the reticulation, one single-arc N-fence
d = decompose(net)
for i, t in enumerate(d.trails):
    arcs = ", ".join("%s>%s" % net.arc_names(a) for a in t.arcs)
    print(f"trail {i}: {t.kind:8s} size {t.size}  [{arcs}]")

# %% no W-fence, so the network is tree-based; the M-fence of size 4 gives 2 trees
print("tree-based:", is_tree_based(d))
print("subdivision trees:", count(d))
for tree in enumerate_trees(d):
    print("  ", [net.arc_names(a) for a in tree.arcs])

# %% the same network written in eNewick, with the reticulation tagged #H1
same = parse_enewick("((x1,(x2)#H1)a,#H1)r;")
print(same, "count =", count(same))

# %% DOT with the subdivision tree drawn bold; pipe into `dot -Tpng` to render
print(export_dot(net, find_subdivision_tree(net)))
