"""Maximal zig-zag trail decomposition.

Two arcs are *linked* when they share a head or share a tail. Because no
vertex has in- or out-degree above two, every arc has at most one head-link
and one tail-link partner, so the link graph on arcs is a disjoint union of
paths and cycles. Its components are the maximal zig-zag trails: cycles are
crowns, paths are fences, typed by their length and by whether the free ends
are heads or tails of the end arcs.
"""
from __future__ import annotations

import gc
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import Network
from .errors import MalformedTrail, UnknownArc

CROWN = "crown"
N_FENCE = "N-fence"
M_FENCE = "M-fence"
W_FENCE = "W-fence"
KINDS = (CROWN, N_FENCE, M_FENCE, W_FENCE)


@dataclass(frozen=True)
class Trail:
    """One maximal zig-zag trail.

    ``arcs`` lists arc indices in canonical zig-zag order. ``endpoints`` is
    ``(start, end)`` for fences and ``None`` for crowns. ``head_first`` tells
    whether ``arcs[0]`` and ``arcs[1]`` share their head (links alternate from
    there on); for a single arc it is True by convention.
    """

    arcs: tuple[int, ...]
    kind: str
    endpoints: Optional[tuple[int, int]] = None
    head_first: bool = True

    @property
    def size(self) -> int:
        return len(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class Decomposition:
    network: Network
    trails: tuple[Trail, ...]
    arc_to_trail: tuple[int, ...] = field(repr=False)
    arc_position: tuple[int, ...] = field(repr=False)

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(t.kind for t in self.trails)
        return {k: c.get(k, 0) for k in KINDS}

    @property
    def w_fences(self) -> list[int]:
        return [i for i, t in enumerate(self.trails) if t.kind == W_FENCE]

    def profile(self) -> list[tuple[str, int]]:
        """Sorted multiset of ``(kind, size)`` pairs."""
        return sorted((t.kind, t.size) for t in self.trails)

    def __len__(self) -> int:
        return len(self.trails)


def _neighbours(network: Network) -> tuple[list[int], list[int]]:
    heads, tails = network.heads, network.tails
    in1, in2, out1, out2 = network._in1, network._in2, network._out1, network._out2
    na = network.num_arcs
    head_link = [-1] * na
    tail_link = [-1] * na
    for v in range(network.num_vertices):
        a, b = in1[v], in2[v]
        if b >= 0:
            head_link[a] = b
            head_link[b] = a
        a, b = out1[v], out2[v]
        if b >= 0:
            tail_link[a] = b
            tail_link[b] = a
    return head_link, tail_link


@contextmanager
def _gc_paused():
    # the scan allocates one small object per trail and no reference cycles;
    # generational collections over that growing heap make the loop superlinear
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def decompose(network: Network) -> Decomposition:
    """Partition the arcs of ``network`` into its maximal zig-zag trails.

    Trails are discovered in order of their lowest arc index; each arc is
    visited a constant number of times. Fences are listed from the endpoint
    with the smaller vertex id (ties broken by the smaller end-arc index);
    crowns start at their lowest arc and continue through its head-link.
    """
    with _gc_paused():
        return _decompose(network)


def _decompose(network: Network) -> Decomposition:
    head_link, tail_link = _neighbours(network)
    heads, tails = network.heads, network.tails
    na = network.num_arcs
    visited = bytearray(na)
    trails: list[Trail] = []
    arc_to_trail = [0] * na
    arc_position = [0] * na

    for a in range(na):
        if visited[a]:
            continue
        visited[a] = 1
        fwd = []
        x = a
        via_head = True
        closed = False
        while True:
            y = head_link[x] if via_head else tail_link[x]
            if y < 0:
                break
            if y == a:
                closed = True
                break
            visited[y] = 1
            fwd.append(y)
            x = y
            via_head = not via_head
        if closed:
            arcs = [a]
            arcs.extend(fwd)
            trail = Trail(tuple(arcs), CROWN, None, True)
        else:
            end_is_head = via_head
            end_v = heads[x] if via_head else tails[x]
            bwd = []
            x = a
            via_head = False
            while True:
                y = head_link[x] if via_head else tail_link[x]
                if y < 0:
                    break
                visited[y] = 1
                bwd.append(y)
                x = y
                via_head = not via_head
            start_is_head = via_head
            start_v = heads[x] if via_head else tails[x]
            bwd.reverse()
            bwd.append(a)
            bwd.extend(fwd)
            arcs = bwd
            if (end_v, arcs[-1]) < (start_v, arcs[0]):
                arcs.reverse()
                start_v, end_v = end_v, start_v
                start_is_head, end_is_head = end_is_head, start_is_head
            m = len(arcs)
            if m % 2:
                kind = N_FENCE
            elif start_is_head:
                kind = M_FENCE
            else:
                kind = W_FENCE
            trail = Trail(tuple(arcs), kind, (start_v, end_v), m == 1 or not start_is_head)
        ti = len(trails)
        trails.append(trail)
        for pos, x in enumerate(trail.arcs):
            arc_to_trail[x] = ti
            arc_position[x] = pos
    return Decomposition(network, tuple(trails), tuple(arc_to_trail), tuple(arc_position))


def classify_trail(network: Network, arcs: Sequence[int]) -> str:
    """Kind of the zig-zag trail listed by ``arcs`` (consecutive arcs linked).

    Raises :class:`MalformedTrail` when consecutive arcs are not linked, the
    links do not alternate, or the trail can be extended (is not maximal).
    """
    arcs = list(arcs)
    m = len(arcs)
    if m == 0:
        raise MalformedTrail("empty trail")
    if len(set(arcs)) != m:
        raise MalformedTrail("repeated arc in trail")
    for a in arcs:
        network._check_arc(a)
    head_link, tail_link = _neighbours(network)
    # link types between consecutive arcs, True for a shared head
    links = []
    for a, b in zip(arcs, arcs[1:]):
        if head_link[a] == b:
            links.append(True)
        elif tail_link[a] == b:
            links.append(False)
        else:
            raise MalformedTrail(f"arcs {a} and {b} share neither head nor tail")
    if any(p == q for p, q in zip(links, links[1:])):
        raise MalformedTrail("head and tail links must alternate")
    first, last = arcs[0], arcs[-1]
    if m >= 4 and m % 2 == 0:
        closing_head = not links[-1]
        if (head_link if closing_head else tail_link)[last] == first:
            return CROWN
    # the free side of an end arc is the one not used by its link
    if m == 1:
        start_head, end_head = False, True
    else:
        start_head = not links[0]
        end_head = not links[-1]
    if ((head_link if start_head else tail_link)[first] >= 0
            or (head_link if end_head else tail_link)[last] >= 0):
        raise MalformedTrail("trail is not maximal")
    if m % 2:
        return N_FENCE
    return M_FENCE if start_head and end_head else W_FENCE


def trail_of_arc(decomposition: Decomposition, a: int) -> tuple[int, int]:
    """``(trail index, 0-based position)`` of arc ``a``."""
    if not isinstance(a, int) or not 0 <= a < len(decomposition.arc_to_trail):
        raise UnknownArc(f"arc index {a!r} out of range")
    return decomposition.arc_to_trail[a], decomposition.arc_position[a]
