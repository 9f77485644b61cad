"""Network data model: construction, validation and vertex classification.

A network is a finite simple acyclic digraph with a unique root (in-degree 0,
out-degree 1 or 2), leaves of degree (1, 0), and every other vertex either
binary ({in, out} = {1, 2}) or, in the relaxed mode, with in- and out-degree
each between 1 and 2.

Vertices are dense integer ids ``0..|V|-1`` assigned by first appearance in
the arc list; arcs keep their input order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    CycleDetected,
    DegreeViolation,
    DuplicateArc,
    MultipleRoots,
    NegativeWeight,
    NoRoot,
    SelfLoop,
    UnknownArc,
    UnknownVertex,
)

BINARY = "binary"
ALMOST_BINARY = "almost-binary"
STRICTNESS = (BINARY, ALMOST_BINARY)

ArcSpec = Tuple  # (tail, head) or (tail, head, weight)


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    weight: Optional[float] = None


class Network:
    """Immutable rooted network.

    Build instances with :func:`build_network` (or the parsers in
    :mod:`treebased.io`); the constructor assumes already-validated arrays.
    """

    __slots__ = (
        "names", "tails", "heads", "weights", "index", "root", "leaves",
        "strictness", "_in1", "_in2", "_out1", "_out2", "_indeg", "_outdeg",
        "_leaf_set",
    )

    def __init__(self, names, tails, heads, weights, index, root, leaves,
                 strictness, in1, in2, out1, out2, indeg, outdeg):
        set_ = object.__setattr__
        set_(self, "names", names)
        set_(self, "tails", tails)
        set_(self, "heads", heads)
        set_(self, "weights", weights)
        set_(self, "index", index)
        set_(self, "root", root)
        set_(self, "leaves", leaves)
        set_(self, "strictness", strictness)
        set_(self, "_in1", in1)
        set_(self, "_in2", in2)
        set_(self, "_out1", out1)
        set_(self, "_out2", out2)
        set_(self, "_indeg", indeg)
        set_(self, "_outdeg", outdeg)
        set_(self, "_leaf_set", frozenset(leaves))

    def __setattr__(self, name, value):
        raise AttributeError("Network is immutable")

    # sizes -------------------------------------------------------------
    @property
    def num_vertices(self) -> int:
        return len(self.names)

    @property
    def num_arcs(self) -> int:
        return len(self.tails)

    @property
    def num_reticulations(self) -> int:
        return sum(1 for d in self._indeg if d == 2)

    @property
    def is_binary(self) -> bool:
        return self.strictness == BINARY

    # access ------------------------------------------------------------
    def arc(self, a: int) -> Arc:
        self._check_arc(a)
        return Arc(self.tails[a], self.heads[a], self.weights[a])

    def arcs(self) -> list[Arc]:
        return [Arc(t, h, w) for t, h, w in zip(self.tails, self.heads, self.weights)]

    def arc_names(self, a: int) -> tuple[str, str]:
        self._check_arc(a)
        return self.names[self.tails[a]], self.names[self.heads[a]]

    def weight(self, a: int) -> float:
        """Weight of arc ``a``; absent weights count as 0."""
        w = self.weights[a]
        return 0.0 if w is None else w

    def weight_vector(self) -> list[float]:
        return [0.0 if w is None else w for w in self.weights]

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertex(f"no vertex named {name!r}") from None

    def is_leaf(self, v: int) -> bool:
        return v in self._leaf_set

    def in_arcs(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(a for a in (self._in1[v], self._in2[v]) if a >= 0)

    def out_arcs(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(a for a in (self._out1[v], self._out2[v]) if a >= 0)

    def parents(self, v: int) -> tuple[int, ...]:
        return tuple(self.tails[a] for a in self.in_arcs(v))

    def children(self, v: int) -> tuple[int, ...]:
        return tuple(self.heads[a] for a in self.out_arcs(v))

    def indegree(self, v: int) -> int:
        self._check_vertex(v)
        return self._indeg[v]

    def outdegree(self, v: int) -> int:
        self._check_vertex(v)
        return self._outdeg[v]

    def _check_vertex(self, v) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self.names):
            raise UnknownVertex(f"vertex id {v!r} out of range")

    def _check_arc(self, a) -> None:
        if not isinstance(a, int) or not 0 <= a < len(self.tails):
            raise UnknownArc(f"arc index {a!r} out of range")

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return (self.names == other.names and self.tails == other.tails
                and self.heads == other.heads and self.weights == other.weights)

    def __hash__(self):
        return hash((self.names, self.tails, self.heads))

    def __repr__(self):
        return (f"Network(|V|={self.num_vertices}, |A|={self.num_arcs}, "
                f"|X|={len(self.leaves)}, root={self.names[self.root]!r}, "
                f"{self.strictness})")


def _binary_ok(indeg: int, outdeg: int) -> bool:
    return (indeg, outdeg) in ((1, 2), (2, 1))


def _almost_binary_ok(indeg: int, outdeg: int) -> bool:
    return 1 <= indeg <= 2 and 1 <= outdeg <= 2


def build_network(arc_list: Iterable[Sequence], strictness: str = ALMOST_BINARY) -> Network:
    """Validate a list of ``(tail, head[, weight])`` name triples and build a network.

    ``strictness`` selects the acceptance rule: ``"almost-binary"`` (default)
    also admits vertices with in- and out-degree in {1, 2}; ``"binary"``
    rejects them. The resulting ``Network.strictness`` reports which class
    the network actually belongs to.
    """
    if strictness not in STRICTNESS:
        raise ValueError(f"strictness must be one of {STRICTNESS}, got {strictness!r}")
    index: dict[str, int] = {}
    names: list[str] = []
    tails: list[int] = []
    heads: list[int] = []
    weights: list[Optional[float]] = []
    for a, rec in enumerate(arc_list):
        if len(rec) == 2:
            t_name, h_name = rec
            w = None
        else:
            t_name, h_name, w = rec
        ids = []
        for name in (t_name, h_name):
            v = index.get(name)
            if v is None:
                _check_name(name)
                v = index[name] = len(names)
                names.append(name)
            ids.append(v)
        t, h = ids
        if t == h:
            raise SelfLoop(t_name, a)
        if w is not None:
            w = float(w)
            if not w >= 0.0:  # also rejects NaN
                raise NegativeWeight(w, a)
        tails.append(t)
        heads.append(h)
        weights.append(w)
    if not tails:
        raise NoRoot()
    return _assemble(names, tails, heads, weights, index, strictness)


def _check_name(name) -> None:
    if not isinstance(name, str) or not name or any(c.isspace() for c in name):
        raise ValueError(f"vertex names must be non-empty and whitespace-free: {name!r}")


def _assemble(names, tails, heads, weights, index, strictness) -> Network:
    nv = len(names)
    na = len(tails)
    in1 = [-1] * nv
    in2 = [-1] * nv
    out1 = [-1] * nv
    out2 = [-1] * nv
    indeg = [0] * nv
    outdeg = [0] * nv
    for a in range(na):
        t = tails[a]
        h = heads[a]
        d = outdeg[t]
        if d == 0:
            out1[t] = a
        elif d == 1:
            if heads[out1[t]] == h:
                raise DuplicateArc(names[t], names[h], a)
            out2[t] = a
        else:
            # out-degree already 2: duplicates still take precedence as the report
            if heads[out1[t]] == h or heads[out2[t]] == h:
                raise DuplicateArc(names[t], names[h], a)
        outdeg[t] = d + 1
        d = indeg[h]
        if d == 0:
            in1[h] = a
        elif d == 1:
            in2[h] = a
        indeg[h] = d + 1

    _check_acyclic(names, tails, heads, indeg, out1, out2, outdeg)

    roots = [v for v in range(nv) if indeg[v] == 0]
    if len(roots) > 1:
        raise MultipleRoots([names[v] for v in roots])
    if not roots:
        raise NoRoot()
    root = roots[0]
    if outdeg[root] not in (1, 2):
        raise DegreeViolation(names[root], 0, outdeg[root], strictness)

    leaves = []
    binary = True
    for v in range(nv):
        i, o = indeg[v], outdeg[v]
        if v == root:
            continue
        if o == 0:
            if i != 1:
                raise DegreeViolation(names[v], i, o, strictness)
            leaves.append(v)
        elif not _binary_ok(i, o):
            if strictness == BINARY or not _almost_binary_ok(i, o):
                raise DegreeViolation(names[v], i, o, strictness)
            binary = False
    return Network(
        tuple(names), tuple(tails), tuple(heads), tuple(weights), index, root,
        tuple(leaves), BINARY if binary else ALMOST_BINARY,
        in1, in2, out1, out2, indeg, outdeg,
    )


def _check_acyclic(names, tails, heads, indeg, out1, out2, outdeg) -> None:
    # Kahn's algorithm over arbitrary out-degrees (validation runs before degree checks)
    nv = len(names)
    remaining = list(indeg)
    extra: dict[int, list[int]] = {}
    for a in range(len(tails)):
        t = tails[a]
        if outdeg[t] > 2 and a != out1[t] and a != out2[t]:
            extra.setdefault(t, []).append(a)
    queue = deque(v for v in range(nv) if remaining[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for a in (out1[v], out2[v], *extra.get(v, ())):
            if a < 0:
                continue
            h = heads[a]
            remaining[h] -= 1
            if remaining[h] == 0:
                queue.append(h)
    if seen < nv:
        # every unprocessed vertex keeps an in-arc from another unprocessed vertex;
        # walking back along those arcs must revisit a vertex, which lies on a cycle
        back: dict[int, int] = {}
        for a in range(len(tails)):
            if remaining[heads[a]] > 0 and remaining[tails[a]] > 0:
                back.setdefault(heads[a], a)
        v = next(iter(back))
        visited = set()
        while v not in visited:
            visited.add(v)
            arc = back[v]
            v = tails[arc]
        raise CycleDetected(names[v], arc)


def degrees(network: Network, v: int) -> tuple[int, int]:
    """``(in-degree, out-degree)`` of vertex ``v``."""
    return network.indegree(v), network.outdegree(v)


@dataclass(frozen=True)
class VertexKind:
    """Local classification of a vertex.

    ``kind`` is one of ``root``, ``leaf``, ``tree-vertex``, ``reticulation``
    or ``hybrid`` (a degree pattern only allowed in almost-binary networks,
    e.g. (1, 1) or (2, 2)). ``reticulation_type`` is ``type0`` when both
    parents are reticulations, ``type1`` when exactly one is, ``type2`` when
    neither is, and ``none`` for vertices with in-degree other than 2.
    """

    kind: str
    indeg: int
    outdeg: int
    omnian: bool
    reticulation_type: str

    @property
    def is_reticulation(self) -> bool:
        return self.indeg == 2


def classify_vertex(network: Network, v: int) -> VertexKind:
    i, o = degrees(network, v)
    if v == network.root:
        kind = "root"
    elif o == 0:
        kind = "leaf"
    elif (i, o) == (1, 2):
        kind = "tree-vertex"
    elif (i, o) == (2, 1):
        kind = "reticulation"
    else:
        kind = "hybrid"
    children = network.children(v)
    omnian = bool(children) and all(network.indegree(c) == 2 for c in children)
    if i == 2:
        k = sum(1 for p in network.parents(v) if network.indegree(p) == 2)
        rtype = ("type2", "type1", "type0")[k]
    else:
        rtype = "none"
    return VertexKind(kind, i, o, omnian, rtype)
