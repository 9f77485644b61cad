"""Independent reference computations for cross-checking the trail-based solvers.

Neither routine looks at the trail decomposition:

* :func:`brute_force_admissible_sets` tests every arc subset against the
  admissibility conditions directly;
* :func:`deviation_via_matching` computes the deviation as
  ``|V| - |X| - (maximum matching size)`` in the bipartite graph with two
  copies of the vertex set and one edge per arc.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import Network
from .errors import TooLarge

MAX_BRUTE_FORCE_ARCS = 24
_CHUNK_BITS = 20


def brute_force_admissible_sets(network: Network, limit: int = MAX_BRUTE_FORCE_ARCS) -> list[frozenset[int]]:
    """All admissible arc subsets, in increasing bitmask order (bit i = arc i)."""
    m = network.num_arcs
    if m > limit:
        raise TooLarge(f"brute force limited to {limit} arcs, network has {m}")
    forced = 0
    for a in range(m):
        if network.indegree(network.heads[a]) == 1 or network.outdegree(network.tails[a]) == 1:
            forced |= 1 << a
    head_pairs = []
    tail_pairs = []
    for v in range(network.num_vertices):
        ins = network.in_arcs(v)
        if len(ins) == 2:
            head_pairs.append(ins)
        outs = network.out_arcs(v)
        if len(outs) == 2:
            tail_pairs.append(outs)

    found: list[frozenset[int]] = []
    total = 1 << m
    step = 1 << min(m, _CHUNK_BITS)
    for start in range(0, total, step):
        masks = np.arange(start, start + step, dtype=np.int64)
        ok = (masks & forced) == forced
        bit = [((masks >> a) & 1).astype(bool) for a in range(m)]
        for a, b in head_pairs:
            ok &= bit[a] ^ bit[b]
        for a, b in tail_pairs:
            ok &= bit[a] | bit[b]
        for mask in masks[ok].tolist():
            found.append(frozenset(a for a in range(m) if mask >> a & 1))
    return found


@dataclass(frozen=True)
class BipartiteGraph:
    """Left and right vertex sets are copies of the network's vertex ids."""

    n_left: int
    n_right: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_left)]
        for u, v in self.edges:
            adj[u].append(v)
        return adj


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


def build_bipartite(network: Network) -> BipartiteGraph:
    n = network.num_vertices
    return BipartiteGraph(n, n, tuple(zip(network.tails, network.heads)))


def maximum_matching(graph: BipartiteGraph) -> Matching:
    """Hopcroft-Karp maximum matching."""
    adj = graph.adjacency()
    nl = graph.n_left
    match_l = [-1] * nl
    match_r = [-1] * graph.n_right
    inf = nl + 1
    dist = [0] * nl

    def bfs() -> bool:
        q = deque()
        for u in range(nl):
            if match_l[u] < 0:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = inf
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; stack holds (left vertex, next neighbour index)
        stack = [[root, 0]]
        path_r = []
        while stack:
            frame = stack[-1]
            u, i = frame
            if i == len(adj[u]):
                dist[u] = inf
                stack.pop()
                if path_r:
                    path_r.pop()
                continue
            frame[1] = i + 1
            v = adj[u][i]
            w = match_r[v]
            if w < 0:
                path_r.append(v)
                for (lu, _), rv in zip(stack, path_r):
                    match_l[lu] = rv
                    match_r[rv] = lu
                return True
            if dist[w] == dist[u] + 1:
                path_r.append(v)
                stack.append([w, 0])
        return False

    while bfs():
        for u in range(nl):
            if match_l[u] < 0:
                dfs(u)
    return Matching(tuple((u, match_l[u]) for u in range(nl) if match_l[u] >= 0))


def max_matching(graph: BipartiteGraph) -> int:
    return maximum_matching(graph).size


def deviation_via_matching(network: Network) -> int:
    return network.num_vertices - len(network.leaves) - max_matching(build_bipartite(network))
