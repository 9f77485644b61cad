"""Parsers and writers: whitespace edge lists, a small eNewick dialect, DOT export.

Edge-list format, one arc per line::

    # comment
    tail head [weight]

Fields are separated by spaces or tabs; record order is arc order.

eNewick dialect: standard Newick nesting with optional labels and optional
``:<length>`` branch lengths, which become arc weights. A vertex with
in-degree 2 is written ``name#H<k>`` (the name is optional) at each of its
positions in the string; all occurrences of one tag are merged into a single
vertex. At most one occurrence may carry a child list, and that occurrence
supplies the out-arcs. Unnamed internal vertices get fresh names ``v1, v2, ..``
(hybrids ``H<k>``) that avoid every label already present.
"""
from __future__ import annotations

import math
from typing import Optional, Union

from .core import ALMOST_BINARY, Network, build_network
from .decompose import Decomposition
from .errors import (
    CycleDetected,
    DegreeViolation,
    DuplicateArc,
    InvalidNetwork,
    MultipleRoots,
    NegativeWeight,
    NetworkSyntaxError,
    SelfLoop,
    UnpairedHybridTag,
)

# -- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str, strictness: str = ALMOST_BINARY) -> Network:
    """Parse the edge-list format. Validation errors carry the offending line number."""
    records = []
    arc_line = []
    first_line: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise NetworkSyntaxError(
                f"expected 'tail head [weight]', got {len(fields)} field(s)", line=lineno)
        if len(fields) == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise NetworkSyntaxError(f"weight {fields[2]!r} is not a number",
                                         line=lineno) from None
            if math.isinf(w):
                raise NetworkSyntaxError(f"weight {fields[2]!r} is not finite", line=lineno)
            records.append((fields[0], fields[1], w))
        else:
            records.append((fields[0], fields[1]))
        arc_line.append(lineno)
        for name in fields[:2]:
            first_line.setdefault(name, lineno)
    try:
        return build_network(records, strictness)
    except InvalidNetwork as exc:
        line = _blame_line(exc, arc_line, first_line)
        if line is not None:
            exc.annotate(line)
        raise


def _blame_line(exc: InvalidNetwork, arc_line: list[int], first_line: dict[str, int]):
    if isinstance(exc, (SelfLoop, DuplicateArc, NegativeWeight, CycleDetected)):
        if exc.arc is not None:
            return arc_line[exc.arc]
    if isinstance(exc, DegreeViolation):
        return first_line.get(exc.vertex)
    if isinstance(exc, MultipleRoots):
        return first_line.get(exc.roots[1])
    return None


def write_edge_list(network: Network) -> str:
    """Inverse of :func:`parse_edge_list`; weights use the shortest round-tripping decimal."""
    out = []
    names = network.names
    for t, h, w in zip(network.tails, network.heads, network.weights):
        if w is None:
            out.append(f"{names[t]} {names[h]}\n")
        else:
            out.append(f"{names[t]} {names[h]} {w!r}\n")
    return "".join(out)


# -- eNewick ------------------------------------------------------------------

_DELIMS = set("(),:;#")


class _Node:
    __slots__ = ("children", "name", "tag", "length", "pos", "has_list")

    def __init__(self, pos: int):
        self.children: list[_Node] = []
        self.name: Optional[str] = None
        self.tag: Optional[int] = None
        self.length: Optional[float] = None
        self.pos = pos
        self.has_list = False


def parse_enewick(text: str, strictness: str = ALMOST_BINARY) -> Network:
    """Parse the restricted eNewick dialect described in the module docstring."""
    root = _parse_tree(text)
    return _to_network(root, strictness)


def _parse_tree(s: str) -> _Node:
    n = len(s)
    i = 0

    def skip(i: int) -> int:
        while i < n and s[i].isspace():
            i += 1
        return i

    def read_label(i: int, node: _Node) -> int:
        i = skip(i)
        j = i
        while j < n and s[j] not in _DELIMS and not s[j].isspace():
            j += 1
        if j > i:
            node.name = s[i:j]
        i = skip(j)
        if i < n and s[i] == "#":
            if s[i + 1:i + 2] != "H":
                raise NetworkSyntaxError("expected 'H' after '#'", position=i + 1)
            j = i + 2
            while j < n and s[j].isdigit():
                j += 1
            if j == i + 2:
                raise NetworkSyntaxError("hybrid tag needs a number", position=j)
            node.tag = int(s[i + 2:j])
            i = skip(j)
        if i < n and s[i] == ":":
            i = skip(i + 1)
            j = i
            while j < n and s[j] not in _DELIMS and not s[j].isspace():
                j += 1
            try:
                node.length = float(s[i:j])
            except ValueError:
                raise NetworkSyntaxError(f"bad branch length {s[i:j]!r}", position=i) from None
            if not math.isfinite(node.length):
                raise NetworkSyntaxError(f"branch length {s[i:j]!r} is not finite", position=i)
            i = skip(j)
        return i

    # iterative descent so that deep caterpillars do not hit the recursion limit
    stack: list[_Node] = []
    root: Optional[_Node] = None
    i = skip(0)
    expect_subtree = True
    while True:
        if i >= n:
            raise NetworkSyntaxError("unexpected end of input, missing ';'", position=i)
        c = s[i]
        if expect_subtree:
            node = _Node(i)
            if stack:
                stack[-1].children.append(node)
            elif root is None:
                root = node
            if c == "(":
                node.has_list = True
                stack.append(node)
                i = skip(i + 1)
                continue
            if c in "),;":
                raise NetworkSyntaxError(f"expected a subtree, found {c!r}", position=i)
            i = read_label(i, node)
            if node.name is None and node.tag is None:
                raise NetworkSyntaxError("leaf without a label", position=node.pos)
            expect_subtree = False
            continue
        if c == ",":
            if not stack:
                raise NetworkSyntaxError("',' outside parentheses", position=i)
            expect_subtree = True
            i = skip(i + 1)
        elif c == ")":
            if not stack:
                raise NetworkSyntaxError("unbalanced ')'", position=i)
            node = stack.pop()
            i = read_label(i + 1, node)
        elif c == ";":
            if stack:
                raise NetworkSyntaxError("unbalanced '('", position=i)
            i = skip(i + 1)
            if i < n:
                raise NetworkSyntaxError("trailing characters after ';'", position=i)
            return root
        else:
            raise NetworkSyntaxError(f"unexpected character {c!r}", position=i)


def _to_network(root: _Node, strictness: str) -> Network:
    # collect every explicit label and merge hybrid occurrences
    order: list[_Node] = []
    todo = [root]
    while todo:
        node = todo.pop()
        order.append(node)
        todo.extend(reversed(node.children))
    taken = set()
    hybrids: dict[int, list[_Node]] = {}
    leaf_labels = set()
    for node in order:
        if node.tag is not None:
            hybrids.setdefault(node.tag, []).append(node)
            continue
        if node.name is None:
            continue
        if node.name in taken:
            kind = "leaf" if not node.has_list else "vertex"
            raise NetworkSyntaxError(f"duplicate {kind} label {node.name!r}", position=node.pos)
        taken.add(node.name)
        if not node.has_list:
            leaf_labels.add(node.name)
    hybrid_name: dict[int, str] = {}
    for tag, occ in hybrids.items():
        if len(occ) < 2:
            raise UnpairedHybridTag(tag)
        if sum(o.has_list for o in occ) > 1:
            raise NetworkSyntaxError(f"more than one occurrence of #H{tag} has children",
                                     position=occ[-1].pos)
        labels = {o.name for o in occ if o.name is not None}
        if len(labels) > 1:
            raise NetworkSyntaxError(f"conflicting labels {sorted(labels)} for #H{tag}",
                                     position=occ[0].pos)
        name = labels.pop() if labels else None
        if name is not None and name in taken:
            raise NetworkSyntaxError(f"duplicate label {name!r}", position=occ[0].pos)
        if name is None:
            name = f"H{tag}"
            k = 1
            while name in taken:
                name = f"H{tag}_{k}"
                k += 1
        taken.add(name)
        hybrid_name[tag] = name

    counter = 0

    def fresh() -> str:
        nonlocal counter
        while True:
            counter += 1
            name = f"v{counter}"
            if name not in taken:
                taken.add(name)
                return name

    names: dict[int, str] = {}
    for node in order:
        if node.tag is not None:
            names[id(node)] = hybrid_name[node.tag]
        elif node.name is not None:
            names[id(node)] = node.name
        else:
            names[id(node)] = fresh()

    # the child list of a hybrid lives on whichever occurrence carries it
    arcs = []
    for node in order:
        tail = names[id(node)]
        for child in node.children:
            head = names[id(child)]
            arcs.append((tail, head) if child.length is None else (tail, head, child.length))
    if not arcs:
        raise NetworkSyntaxError("a network needs at least one arc", position=0)
    return build_network(arcs, strictness)


# -- DOT ----------------------------------------------------------------------

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(network: Network, overlay: Union[None, Decomposition, object] = None) -> str:
    """DOT text with vertices in id order and arcs in arc order.

    ``overlay`` may be a :class:`Decomposition` (every arc gets the color of
    its trail and a tooltip naming the trail) or a subdivision tree, given as
    an object with an ``arcs`` attribute or a plain iterable of arc indices
    (tree arcs are drawn bold, the rest dashed).
    """
    lines = ["digraph N {"]
    leaves = set(network.leaves)
    for v, name in enumerate(network.names):
        if v == network.root:
            lines.append(f"  {_q(name)} [shape=doublecircle];")
        elif v in leaves:
            lines.append(f"  {_q(name)} [shape=box];")
        elif network.indegree(v) == 2:
            lines.append(f"  {_q(name)} [shape=circle, style=filled, fillcolor=lightgrey];")
        else:
            lines.append(f"  {_q(name)} [shape=circle];")
    decomp = overlay if isinstance(overlay, Decomposition) else None
    tree = None
    if overlay is not None and decomp is None:
        tree = set(getattr(overlay, "arcs", overlay))
    names = network.names
    for a in range(network.num_arcs):
        attrs = []
        w = network.weights[a]
        if w is not None:
            attrs.append(f'label="{w!r}"')
        if decomp is not None:
            ti = decomp.arc_to_trail[a]
            kind = decomp.trails[ti].kind
            attrs.append(f'color="{_PALETTE[ti % len(_PALETTE)]}"')
            attrs.append(f'tooltip="trail {ti} ({kind})"')
        elif tree is not None:
            attrs.append("style=bold" if a in tree else "style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_q(names[network.tails[a]])} -> {_q(names[network.heads[a]])}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
