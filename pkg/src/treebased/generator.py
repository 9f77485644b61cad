"""Test-corpus generation: random networks, prescribed-profile gadgets, leaf attachment."""
from __future__ import annotations

import random
from collections import deque
from typing import Optional, Sequence

from .core import BINARY, Network, build_network
from .decompose import CROWN, KINDS, M_FENCE, N_FENCE, W_FENCE, decompose
from .errors import InfeasibleParameters, UnknownArc, Unrealizable

# vertex keys strictly increase along every arc; new vertices take a random key
# strictly inside the arc they subdivide, so the key span must stay huge
_KEY_SPAN = 1 << 512


def random_network(leaf_count: int, reticulation_count: int, seed: int,
                   tree_based: Optional[bool] = None) -> Network:
    """Random binary network with exactly the requested leaf and reticulation counts.

    A random binary tree is grown by repeatedly hanging a new leaf on a
    uniformly chosen arc; each reticulation then subdivides two distinct arcs
    and joins the new vertices by an arc. With ``tree_based=True`` only arcs
    of the growing base tree are subdivided, which keeps the network
    tree-based; with ``None`` any arc may be used, which produces a mix;
    ``False`` resamples until the network has a W-fence, which needs at least
    three reticulations.

    The root always has out-degree 2, so ``|V| = 2n + 2r - 1`` and
    ``|A| = 2n + 3r - 2``.
    """
    n, r = leaf_count, reticulation_count
    if n < 1 or r < 0:
        raise InfeasibleParameters("need leaf_count >= 1 and reticulation_count >= 0")
    if n == 1 and r < 2:
        raise InfeasibleParameters("a single leaf needs at least 2 reticulations "
                                   "for the root to have out-degree 2")
    if tree_based is False and r < 3:
        # both ends of a W-fence are out-degree-1 tails (reticulations, as the root has
        # out-degree 2) and at least one inner vertex is a shared head (a reticulation)
        raise InfeasibleParameters("a binary network with fewer than 3 reticulations "
                                   "is always tree-based")
    rng = random.Random(seed)
    for _ in range(10_000):
        if n == 1:
            arcs = _merged_leaf_arcs(rng, r - 1, tree_based)
        else:
            arcs = _grow(rng, n, r, tree_based)
        if arcs is None:
            continue
        net = build_network(arcs, strictness=BINARY)
        if tree_based is False or (tree_based and n == 1):
            tb = not decompose(net).w_fences
            if tb != tree_based:
                continue
        return net
    raise InfeasibleParameters(f"could not generate a network with n={n}, r={r}, "
                               f"tree_based={tree_based}")


def _grow(rng: random.Random, n: int, r: int, tree_based: Optional[bool]):
    keys = [0, _KEY_SPAN, _KEY_SPAN]
    is_leaf = [False, True, True]
    tails = [0, 0]
    heads = [1, 2]
    tree_arc = [True, True]

    def subdivide(a: int, key: int) -> int:
        w = len(keys)
        keys.append(key)
        is_leaf.append(False)
        tails.append(w)
        heads.append(heads[a])
        tree_arc.append(tree_arc[a])
        heads[a] = w
        return w

    for _ in range(n - 2):
        a = rng.randrange(len(tails))
        w = subdivide(a, rng.randrange(keys[tails[a]] + 1, keys[heads[a]]))
        keys.append(_KEY_SPAN)
        is_leaf.append(True)
        tails.append(w)
        heads.append(len(keys) - 1)
        tree_arc.append(True)

    tree_arcs = list(range(len(tails))) if tree_based else None
    for _ in range(r):
        pool = tree_arcs if tree_based else None
        size = len(pool) if pool is not None else len(tails)
        i, j = rng.sample(range(size), 2)
        a, b = (pool[i], pool[j]) if pool is not None else (i, j)
        if keys[tails[a]] >= keys[heads[b]]:
            a, b = b, a
        lo, hi = keys[tails[a]], min(keys[heads[a]], keys[heads[b]])
        ks = rng.randrange(lo + 1, hi)
        lo2 = max(ks, keys[tails[b]])
        kt = rng.randrange(lo2 + 1, keys[heads[b]])
        s = subdivide(a, ks)
        if tree_arcs is not None and tree_arc[a]:
            tree_arcs.append(len(tails) - 1)
        t = subdivide(b, kt)
        if tree_arcs is not None and tree_arc[b]:
            tree_arcs.append(len(tails) - 1)
        tails.append(s)
        heads.append(t)
        tree_arc.append(False)
    return _named(tails, heads, is_leaf)


def _merged_leaf_arcs(rng: random.Random, r: int, tree_based: Optional[bool]):
    # grow a two-leaf network, then fuse its leaves into one reticulation above a single leaf
    arcs = _grow(rng, 2, r, tree_based)
    leaf_arcs = [i for i, (t, h) in enumerate(arcs) if h.startswith("x")]
    (i, (p1, x1)), (j, (p2, x2)) = [(k, arcs[k]) for k in leaf_arcs]
    if p1 == p2:
        return None
    out = [a for k, a in enumerate(arcs) if k not in (i, j)]
    out += [(p1, "h"), (p2, "h"), ("h", "x1")]
    return out


def _named(tails, heads, is_leaf) -> list[tuple[str, str]]:
    names = {}
    n_leaf = n_int = 0
    for v in range(len(is_leaf)):
        if v == 0:
            names[v] = "r"
        elif is_leaf[v]:
            n_leaf += 1
            names[v] = f"x{n_leaf}"
        else:
            n_int += 1
            names[v] = f"v{n_int}"
    return [(names[t], names[h]) for t, h in zip(tails, heads)]


# -- gadgets with a prescribed trail profile ---------------------------------

def _template(kind: str, size: int):
    """Local vertices and arcs of one trail, with the role of every vertex.

    Roles: ``tl`` tail link (two out-arcs in the trail), ``te`` tail end,
    ``hl`` head link (two in-arcs), ``he`` head end.
    """
    if kind == M_FENCE:
        if size < 2 or size % 2:
            raise Unrealizable(f"M-fence size must be even and >= 2, got {size}")
        nv = size + 1
        arcs = []
        for j in range(1, size, 2):
            arcs += [(j, j - 1), (j, j + 1)]
        roles = ["he" if j in (0, size) else ("tl" if j % 2 else "hl") for j in range(nv)]
    elif kind == W_FENCE:
        if size < 2 or size % 2:
            raise Unrealizable(f"W-fence size must be even and >= 2, got {size}")
        nv = size + 1
        arcs = [(0, 1)]
        for j in range(2, size, 2):
            arcs += [(j, j - 1), (j, j + 1)]
        arcs.append((size, size - 1))
        roles = ["te" if j in (0, size) else ("tl" if j % 2 == 0 else "hl") for j in range(nv)]
    elif kind == N_FENCE:
        if size < 1 or size % 2 == 0:
            raise Unrealizable(f"N-fence size must be odd and >= 1, got {size}")
        nv = size + 1
        arcs = [(0, 1)]
        for j in range(2, size, 2):
            arcs += [(j, j - 1), (j, j + 1)]
        roles = ["te" if j == 0 else "he" if j == size else ("tl" if j % 2 == 0 else "hl")
                 for j in range(nv)]
    elif kind == CROWN:
        if size < 4 or size % 2:
            raise Unrealizable(f"crown size must be even and >= 4, got {size}")
        nv = size
        arcs = []
        for j in range(1, size, 2):
            arcs += [(j, j - 1), (j, (j + 1) % size)]
        roles = ["tl" if j % 2 else "hl" for j in range(nv)]
    else:
        raise Unrealizable(f"unknown trail kind {kind!r}; expected one of {KINDS}")
    return nv, arcs, roles


def _try_assemble(templates, root_index: int, order_rng: Optional[random.Random]):
    n_ids = 0
    H: deque = deque()
    L: deque = deque()
    placed: dict[int, list[int]] = {}

    def place(ti: int, root: bool) -> None:
        nonlocal n_ids
        nv, _, roles = templates[ti]
        ids = []
        root_done = not root
        for role in roles:
            if role in ("tl", "te") and not root_done:
                ids.append(n_ids)
                n_ids += 1
                root_done = True
            elif role == "tl":
                ids.append(H.popleft())
            elif role == "te":
                ids.append(L.popleft())
            else:
                ids.append(n_ids)
                (H if role == "he" else L).append(n_ids)
                n_ids += 1
        placed[ti] = ids

    place(root_index, True)
    remaining = [i for i in range(len(templates)) if i != root_index]
    while remaining:
        feasible = []
        for i in remaining:
            roles = templates[i][2]
            need_h = roles.count("tl")
            need_l = roles.count("te")
            if need_h <= len(H) and need_l <= len(L):
                gain = roles.count("he") + roles.count("hl") - need_h - need_l
                feasible.append((-gain, -need_l, i))
        if not feasible:
            return None
        if order_rng is None:
            pick = min(feasible)[2]
        else:
            pick = order_rng.choice(feasible)[2]
        place(pick, False)
        remaining.remove(pick)
    if L or not H:
        return None
    return placed, n_ids, set(H)


def gadget_with_profile(profile: Sequence[tuple[str, int]], seed: int = 0) -> Network:
    """Binary network whose trail decomposition has exactly the given profile.

    Trails are built with pairwise distinct vertices and glued so that every
    arc runs from an earlier-placed trail to a later one. Arcs are emitted
    trail by trail in profile order, so the decomposition lists the trails in
    that order. Profiles this construction cannot glue together raise
    :class:`Unrealizable`.
    """
    profile = [(k, int(s)) for k, s in profile]
    if not profile:
        raise Unrealizable("empty profile")
    templates = [_template(k, s) for k, s in profile]
    consumers = [sum(r in ("tl", "te") for r in t[2]) for t in templates]
    # a root of out-degree 2 (tail link) keeps the vertex/arc count identities
    roots = sorted((i for i, c in enumerate(consumers) if c == 1),
                   key=lambda i: (templates[i][2].count("tl") == 0, i))
    rng = random.Random(seed)
    result = None
    for attempt in range(200):
        for root in roots:
            result = _try_assemble(templates, root, None if attempt == 0 else rng)
            if result is not None:
                break
        if result is not None:
            break
    if result is None:
        raise Unrealizable(f"cannot realize profile {profile}")
    placed, n_ids, leaves = result
    root_id = 0
    names = {}
    leaf_no = inner_no = 0
    for v in range(n_ids):
        if v == root_id:
            names[v] = "r"
        elif v in leaves:
            leaf_no += 1
            names[v] = f"x{leaf_no}"
        else:
            inner_no += 1
            names[v] = f"v{inner_no}"
    arcs = []
    for ti in range(len(templates)):
        ids = placed[ti]
        arcs += [(names[ids[u]], names[ids[w]]) for u, w in templates[ti][1]]
    net = build_network(arcs)
    if decompose(net).profile() != sorted(profile):
        raise Unrealizable(f"cannot realize profile {profile}")
    return net


# -- surgery ---------------------------------------------------------------

def _fresh(net: Network, prefix: str) -> str:
    i = 1
    while f"{prefix}{i}" in net.index:
        i += 1
    return f"{prefix}{i}"


def attach_leaf(network: Network, arc: int, leaf_name: Optional[str] = None,
                vertex_name: Optional[str] = None) -> Network:
    """Subdivide ``arc`` = (u, v) by a new vertex w and hang a new leaf y below w.

    Arc ``arc`` becomes (u, w) and keeps its weight; (w, v) and (w, y) are
    appended, so all other arc indices are unchanged.
    """
    if not isinstance(arc, int) or not 0 <= arc < network.num_arcs:
        raise UnknownArc(f"arc index {arc!r} out of range")
    w = vertex_name or _fresh(network, "w")
    y = leaf_name or _fresh(network, "y")
    recs = []
    for a in range(network.num_arcs):
        t, h = network.arc_names(a)
        wt = network.weights[a]
        if a == arc:
            recs.append((t, w, wt))
            tail_old, head_old = t, h
        else:
            recs.append((t, h, wt))
    recs.append((w, head_old, None))
    recs.append((w, y, None))
    return build_network([(t, h) if wt is None else (t, h, wt) for t, h, wt in recs])
