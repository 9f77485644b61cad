import random

import pytest
from hypothesis import strategies as st

from treebased import build_network, random_network

# network of the edge-list example: b is a reticulation below r and a
SMALL_EL = "r a\nr b\na x1\na b\nb x2\n"

# profiles reused across modules
PROFILE_5040 = [("N-fence", 1)] * 21 + [("M-fence", m) for m in range(2, 16, 2)]
PROFILE_ONE_W = [("M-fence", 2), ("M-fence", 4), ("M-fence", 4),
                 ("N-fence", 1), ("N-fence", 3), ("W-fence", 2)]
# crown of 8, N-fence of 7 and M-fence of 6 plus the small fences needed to glue them
PROFILE_MIXED = ([("crown", 8), ("N-fence", 7), ("M-fence", 6)]
                + [("M-fence", 2)] * 2 + [("N-fence", 1)] * 8)


def small_corpus(count: int, seed: int, max_arcs: int = 16):
    """Random binary networks with at most ``max_arcs`` arcs, tree-based or not."""
    rng = random.Random(seed)
    nets = []
    while len(nets) < count:
        n = rng.randint(1, 8)
        lo = 2 if n == 1 else 0
        hi = (max_arcs - 2 * n + 2) // 3
        if hi < lo:
            continue
        r = rng.randint(lo, hi)
        # bias a third of the draws towards networks with a W-fence
        want = False if (r >= 3 and rng.random() < 1 / 3) else None
        nets.append(random_network(n, r, rng.getrandbits(32), want))
    return nets


def almost_binary_variant(net, rng: random.Random):
    """Relax a binary network: contract some reticulation-to-tree-vertex arcs
    (creating (2,2) vertices) and subdivide some arcs (creating (1,1) vertices)."""
    arcs = [list(net.arc_names(a)) for a in range(net.num_arcs)]
    indeg = {}
    outdeg = {}
    for t, h in arcs:
        outdeg[t] = outdeg.get(t, 0) + 1
        indeg[h] = indeg.get(h, 0) + 1
    for i in rng.sample(range(len(arcs)), len(arcs)):
        if arcs[i] is None or rng.random() < 0.5:
            continue
        u, v = arcs[i]
        if indeg.get(u, 0) == 2 and outdeg.get(u, 0) == 1 and indeg.get(v) == 1 and outdeg.get(v, 0) == 2:
            arcs[i] = None
            for rec in arcs:
                if rec is not None and rec[0] == v:
                    rec[0] = u
            outdeg[u] = 2
    arcs = [tuple(a) for a in arcs if a is not None]
    out = []
    k = 0
    for t, h in arcs:
        if rng.random() < 0.15:
            k += 1
            s = f"s{k}"
            out += [(t, s), (s, h)]
        else:
            out.append((t, h))
    return build_network(out)


@st.composite
def networks(draw, max_leaves: int = 6, max_ret: int = 4, almost: bool = True):
    n = draw(st.integers(1, max_leaves))
    r = draw(st.integers(2 if n == 1 else 0, max(max_ret, 2 if n == 1 else 0)))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    net = random_network(n, r, seed)
    if almost and draw(st.booleans()):
        net = almost_binary_variant(net, random.Random(seed))
    return net


@pytest.fixture
def small_net():
    return build_network([("r", "a"), ("r", "b"), ("a", "x1"), ("a", "b"), ("b", "x2")])


def partition_ok(net, partition) -> bool:
    """Vertex-disjoint directed paths of ``net``, each ending at a leaf, covering V."""
    seen = set()
    arcs = {(net.tails[a], net.heads[a]) for a in range(net.num_arcs)}
    for path in partition.paths:
        if not net.is_leaf(path[-1]):
            return False
        for u, v in zip(path, path[1:]):
            if (u, v) not in arcs:
                return False
        for v in path:
            if v in seen:
                return False
            seen.add(v)
    return len(seen) == net.num_vertices and len(partition) == len(net.leaves)
