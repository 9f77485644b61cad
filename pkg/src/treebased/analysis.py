"""Decision, deviation, counting, enumeration, optimization and sampling.

Every solver accepts either a :class:`~treebased.core.Network` or its
:class:`~treebased.decompose.Decomposition`; passing the decomposition avoids
recomputing it. Subdivision trees are the product of one admissible pattern
per trail, so each solver works trail by trail.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .core import Network
from .decompose import CROWN, M_FENCE, W_FENCE, Decomposition, decompose
from .errors import InvalidTree, KExceedsCount, NotTreeBased
from .trails import MAX, MIN, best_choice, family_size, selected_positions

NetworkLike = Union[Network, Decomposition]


def _decomp(x: NetworkLike) -> Decomposition:
    return x if isinstance(x, Decomposition) else decompose(x)


@dataclass(frozen=True)
class SubdivisionTree:
    """Arc set of a subdivision tree, sorted by arc index.

    ``selection`` records the per-trail choice indices it was built from.
    """

    arcs: tuple[int, ...]
    selection: Optional[tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.arcs)

    def arc_set(self) -> frozenset[int]:
        return frozenset(self.arcs)

    def score(self, weights: Sequence[float]) -> float:
        return math.fsum(weights[a] for a in self.arcs)


@dataclass(frozen=True)
class DeviationReport:
    """Deviation of a network from being tree-based.

    ``delta`` is the minimum number of leaves to attach; it equals the number
    of W-fences, the number of extra leaves forced on a rooted spanning tree
    (``leaf_index``) and the excess of a minimum path partition over the
    leaf count (``path_index``).
    """

    delta: int
    w_fence_count: int
    witnesses: tuple[int, ...] = ()

    @property
    def leaf_index(self) -> int:
        return self.delta

    @property
    def path_index(self) -> int:
        return self.delta


@dataclass(frozen=True)
class PathPartition:
    """Vertex-disjoint directed paths (vertex id tuples), each ending at a leaf."""

    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


# -- decision / search ----------------------------------------------------

def is_tree_based(x: NetworkLike) -> bool:
    d = _decomp(x)
    return not any(t.kind == W_FENCE for t in d.trails)


def _tree_from_choices(d: Decomposition, choices: Sequence[int]) -> SubdivisionTree:
    mask = bytearray(d.network.num_arcs)
    for trail, c in zip(d.trails, choices):
        arcs = trail.arcs
        for i in selected_positions(trail, c):
            mask[arcs[i]] = 1
    return SubdivisionTree(tuple(i for i, b in enumerate(mask) if b), tuple(choices))


def find_subdivision_tree(x: NetworkLike) -> SubdivisionTree:
    """Subdivision tree assembled from choice 0 in every trail.

    Raises :class:`NotTreeBased` (with the W-fence trail indices) otherwise.
    """
    d = _decomp(x)
    witnesses = d.w_fences
    if witnesses:
        raise NotTreeBased(witnesses)
    return _tree_from_choices(d, [0] * len(d.trails))


def deviation(x: NetworkLike) -> DeviationReport:
    d = _decomp(x)
    w = d.w_fences
    return DeviationReport(len(w), len(w), tuple(w))


# -- counting --------------------------------------------------------------

def _product(factors: list[int]) -> int:
    # balanced product keeps big-integer multiplications cheap
    while len(factors) > 1:
        paired = [a * b for a, b in zip(factors[0::2], factors[1::2])]
        if len(factors) % 2:
            paired.append(factors[-1])
        factors = paired
    return factors[0] if factors else 1


def count(x: NetworkLike) -> int:
    """Number of subdivision trees (0 exactly when a W-fence exists)."""
    d = _decomp(x)
    crowns = 0
    factors = []
    for t in d.trails:
        kind = t.kind
        if kind == W_FENCE:
            return 0
        if kind == CROWN:
            crowns += 1
        elif kind == M_FENCE and len(t.arcs) > 2:
            factors.append(len(t.arcs) // 2)
    return _product(factors) << crowns


# -- enumeration -----------------------------------------------------------

class EnumerationCursor:
    """Odometer over the per-trail choices.

    Trails are ordered as in the decomposition, the last trail varies
    fastest and each trail's choices ascend. Each step costs time linear in
    the number of arcs. A network with a W-fence gives an empty stream.
    """

    def __init__(self, decomposition: Decomposition):
        d = decomposition
        self.decomposition = d
        self.exhausted = not is_tree_based(d)
        self._choices = [0] * len(d.trails)
        # only trails with more than one admissible pattern take part in the odometer
        self._active = [i for i, t in enumerate(d.trails) if family_size(t) > 1]
        self._radix = [family_size(d.trails[i]) for i in self._active]
        self._arc_arrays = {i: np.asarray(d.trails[i].arcs, dtype=np.intp) for i in self._active}
        self._mask = np.zeros(d.network.num_arcs, dtype=np.uint8)
        self._started = False
        if not self.exhausted:
            base = _tree_from_choices(d, self._choices)
            self._mask[list(base.arcs)] = 1

    def _set(self, i: int, choice: int) -> None:
        arcs = self._arc_arrays[i]
        self._mask[arcs] = 0
        self._mask[arcs[selected_positions(self.decomposition.trails[i], choice)]] = 1
        self._choices[i] = choice

    def _advance(self) -> bool:
        for k in range(len(self._active) - 1, -1, -1):
            i = self._active[k]
            c = self._choices[i] + 1
            if c < self._radix[k]:
                self._set(i, c)
                return True
            self._set(i, 0)
        return False

    def next(self) -> Optional[SubdivisionTree]:
        """Next tree, or ``None`` once exhausted."""
        if self.exhausted:
            return None
        if self._started and not self._advance():
            self.exhausted = True
            return None
        self._started = True
        return SubdivisionTree(tuple(np.flatnonzero(self._mask).tolist()), tuple(self._choices))

    def __iter__(self) -> Iterator[SubdivisionTree]:
        return self

    def __next__(self) -> SubdivisionTree:
        tree = self.next()
        if tree is None:
            raise StopIteration
        return tree


def open_cursor(x: NetworkLike) -> EnumerationCursor:
    return EnumerationCursor(_decomp(x))


def enumerate_trees(x: NetworkLike) -> Iterator[SubdivisionTree]:
    return iter(open_cursor(x))


def enumerate_k(x: NetworkLike, k: int) -> list[SubdivisionTree]:
    """First ``k`` trees of the enumeration order."""
    d = _decomp(x)
    if k < 0:
        raise ValueError("k must be non-negative")
    total = count(d)
    if k > total:
        raise KExceedsCount(f"k={k} exceeds the number of subdivision trees ({total})")
    cursor = EnumerationCursor(d)
    return [cursor.next() for _ in range(k)]


# -- optimization ----------------------------------------------------------

def _weights(d: Decomposition, weights) -> list[float]:
    n = d.network.num_arcs
    if weights is None:
        return d.network.weight_vector()
    ws = [float(w) for w in weights]
    if len(ws) != n:
        raise ValueError(f"expected {n} weights, got {len(ws)}")
    for w in ws:
        if not w >= 0.0:
            raise ValueError(f"weights must be non-negative reals, got {w!r}")
    return ws


def optimize(x: NetworkLike, weights: Optional[Sequence[float]] = None,
             direction: str = MAX) -> tuple[SubdivisionTree, float]:
    """Subdivision tree maximizing (or minimizing) the total arc weight.

    ``weights`` is indexed by arc; by default the network's own arc weights
    are used. Returns the tree and its score, the correctly rounded sum of
    its arc weights.
    """
    d = _decomp(x)
    if direction not in (MAX, MIN):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    witnesses = d.w_fences
    if witnesses:
        raise NotTreeBased(witnesses)
    ws = _weights(d, weights)
    choices = [best_choice(t, ws, direction)[0] for t in d.trails]
    tree = _tree_from_choices(d, choices)
    return tree, tree.score(ws)


# -- sampling --------------------------------------------------------------

def sample_uniform(x: NetworkLike, seed: int, n: int) -> list[SubdivisionTree]:
    """``n`` independent uniformly random subdivision trees.

    Draws use numpy's PCG64 generator seeded with ``seed``: for each tree, one
    uniform choice per trail with more than one admissible pattern, in trail
    order. Identical seeds give identical output.
    """
    d = _decomp(x)
    witnesses = d.w_fences
    if witnesses:
        raise NotTreeBased(witnesses)
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    active = [i for i, t in enumerate(d.trails) if family_size(t) > 1]
    radix = np.array([family_size(d.trails[i]) for i in active], dtype=np.int64)
    rng = np.random.Generator(np.random.PCG64(seed))
    if active:
        draws = rng.integers(0, radix, size=(n, len(active)))
    else:
        draws = np.zeros((n, 0), dtype=np.int64)
    base = _tree_from_choices(d, [0] * len(d.trails))
    base_mask = np.zeros(d.network.num_arcs, dtype=np.uint8)
    base_mask[list(base.arcs)] = 1
    for i in active:
        base_mask[list(d.trails[i].arcs)] = 0
    # selected arc indices for every (active trail, choice) pair
    options = [
        [np.asarray([d.trails[i].arcs[p] for p in selected_positions(d.trails[i], c)],
                    dtype=np.intp) for c in range(family_size(d.trails[i]))]
        for i in active
    ]
    out = []
    for row in draws:
        mask = base_mask.copy()
        choices = [0] * len(d.trails)
        for k, c in enumerate(row.tolist()):
            mask[options[k][c]] = 1
            choices[active[k]] = c
        out.append(SubdivisionTree(tuple(np.flatnonzero(mask).tolist()), tuple(choices)))
    return out


# -- verification ----------------------------------------------------------

def _arc_list(network: Network, arcs: Iterable[int]) -> Optional[list[int]]:
    out = []
    for a in arcs:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < network.num_arcs:
            return None
        out.append(int(a))
    return out


def verify_subdivision_tree(network: Network, arcs: Union[SubdivisionTree, Iterable[int]]) -> bool:
    """Whether ``arcs`` is the arc set of a subdivision tree of ``network``.

    Checks: spanning tree rooted at the root (every other vertex has exactly
    one selected in-arc, all reachable), and the tree's leaves are exactly
    the network's leaves, so suppressing in/out-degree (1, 1) vertices leaves
    a binary phylogenetic tree on the same leaf set.
    """
    if isinstance(arcs, SubdivisionTree):
        arcs = arcs.arcs
    sel = _arc_list(network, arcs)
    if sel is None or len(set(sel)) != len(sel):
        return False
    nv = network.num_vertices
    if len(sel) != nv - 1:
        return False
    indeg = [0] * nv
    outs: list[list[int]] = [[] for _ in range(nv)]
    for a in sel:
        h = network.heads[a]
        indeg[h] += 1
        if indeg[h] > 1:
            return False
        outs[network.tails[a]].append(h)
    if indeg[network.root] != 0:
        return False
    seen = bytearray(nv)
    seen[network.root] = 1
    queue = deque([network.root])
    reached = 1
    while queue:
        v = queue.popleft()
        for h in outs[v]:
            if not seen[h]:
                seen[h] = 1
                reached += 1
                queue.append(h)
    if reached != nv:
        return False
    for v in range(nv):
        is_tree_leaf = not outs[v]
        if is_tree_leaf != network.is_leaf(v):
            return False
    return True


def is_admissible_global(network: Network, arcs: Union[SubdivisionTree, Iterable[int]]) -> bool:
    """Admissibility of an arc subset of the whole network.

    Every arc into an in-degree-1 vertex or out of an out-degree-1 vertex is
    selected; of two arcs sharing a head exactly one is selected; of two arcs
    sharing a tail at least one is selected.
    """
    if isinstance(arcs, SubdivisionTree):
        arcs = arcs.arcs
    sel = _arc_list(network, arcs)
    if sel is None:
        return False
    s = set(sel)
    for a in range(network.num_arcs):
        if a not in s and (network.indegree(network.heads[a]) == 1
                           or network.outdegree(network.tails[a]) == 1):
            return False
    for v in range(network.num_vertices):
        ins = network.in_arcs(v)
        if len(ins) == 2 and (ins[0] in s) == (ins[1] in s):
            return False
        outs = network.out_arcs(v)
        if len(outs) == 2 and outs[0] not in s and outs[1] not in s:
            return False
    return True


def path_partition_from_tree(network: Network,
                             tree: Union[SubdivisionTree, Iterable[int]]) -> PathPartition:
    """Split a subdivision tree into vertex-disjoint leaf-terminated paths.

    At each branching vertex the out-arc with the larger index is dropped;
    what remains is a set of directed paths covering every vertex, one per
    leaf. Paths are listed by their first vertex id.
    """
    arcs = tree.arcs if isinstance(tree, SubdivisionTree) else tuple(tree)
    if not verify_subdivision_tree(network, arcs):
        raise InvalidTree("arc set is not a subdivision tree of the network")
    nv = network.num_vertices
    nxt = [-1] * nv
    has_parent = bytearray(nv)
    for a in sorted(arcs):
        t = network.tails[a]
        if nxt[t] < 0:
            nxt[t] = network.heads[a]
            has_parent[network.heads[a]] = 1
    paths = []
    for v in range(nv):
        if has_parent[v]:
            continue
        path = [v]
        while nxt[path[-1]] >= 0:
            path.append(nxt[path[-1]])
        paths.append(tuple(path))
    return PathPartition(tuple(paths))
