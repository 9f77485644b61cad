"""Command-line interface.

Exit codes: 0 success, 1 valid input with a negative answer (for example
``check`` on a network that is not tree-based), 2 input or format error,
3 internal guard (oracle size cap).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import analysis, oracle
from .core import ALMOST_BINARY, BINARY, Network
from .decompose import decompose
from .errors import NetworkError, NotTreeBased, TooLarge
from .generator import attach_leaf, gadget_with_profile, random_network
from .io import export_dot, parse_edge_list, parse_enewick, write_edge_list
from .trails import MAX, MIN

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

_KIND_CODES = {"C": "crown", "N": "N-fence", "M": "M-fence", "W": "W-fence"}


class _InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def load_network(path: str, fmt: str = "auto", strictness: str = ALMOST_BINARY) -> Network:
    """Read a network, choosing the parser by ``fmt`` or by file extension."""
    text = _read_text(path)
    if fmt == "auto":
        ext = os.path.splitext(path)[1].lower()
        if ext in (".nwk", ".newick", ".enewick"):
            fmt = "nwk"
        elif ext in (".el", ".txt", ".edges"):
            fmt = "el"
        else:
            # sniff: Newick strings end with ';' and start with '('
            stripped = text.strip()
            fmt = "nwk" if stripped.startswith("(") and stripped.endswith(";") else "el"
    if fmt == "nwk":
        return parse_enewick(text, strictness)
    return parse_edge_list(text, strictness)


def _parse_weights(value: Optional[str], net: Network) -> Optional[list[float]]:
    """``--weights``: a file (one weight per line, or ``tail head weight``) or inline CSV."""
    if value is None:
        return None
    if os.path.exists(value):
        text = _read_text(value)
        rows = [ln.split() for ln in text.splitlines()
                if ln.strip() and not ln.lstrip().startswith("#")]
        try:
            if rows and all(len(r) == 3 for r in rows):
                ws: list[Optional[float]] = [None] * net.num_arcs
                lookup = {net.arc_names(a): a for a in range(net.num_arcs)}
                for t, h, w in rows:
                    if (t, h) not in lookup:
                        raise _InputError(f"weights file names unknown arc ({t}, {h})")
                    ws[lookup[(t, h)]] = float(w)
                if any(w is None for w in ws):
                    raise _InputError("weights file does not cover every arc")
                return ws
            if all(len(r) == 1 for r in rows):
                return [float(r[0]) for r in rows]
        except ValueError as exc:
            raise _InputError(f"bad weight: {exc}") from None
        raise _InputError("weights file must have one weight per line or 'tail head weight' lines")
    try:
        return [float(x) for x in value.split(",") if x.strip()]
    except ValueError as exc:
        raise _InputError(f"bad inline weights: {exc}") from None


def _parse_profile(value: str) -> list[tuple[str, int]]:
    out = []
    for tok in value.replace(" ", "").split(","):
        if not tok:
            continue
        code, size = tok[0].upper(), tok[1:]
        if code not in _KIND_CODES or not size.isdigit():
            raise _InputError(f"bad profile entry {tok!r}; use e.g. M4, N1, C6, W2")
        out.append((_KIND_CODES[code], int(size)))
    return out


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.doc: dict = {}

    def line(self, text: str) -> None:
        if not self.as_json:
            sys.stdout.write(text + "\n")

    def set(self, key: str, value) -> None:
        self.doc[key] = value

    def finish(self) -> None:
        if self.as_json:
            sys.stdout.write(json.dumps(self.doc) + "\n")


def _tree_repr(net: Network, tree, names: bool):
    if names:
        return [list(net.arc_names(a)) for a in tree.arcs]
    return list(tree.arcs)


def _tree_line(net: Network, tree, names: bool) -> str:
    if names:
        return " ".join(f"{t}>{h}" for t, h in (net.arc_names(a) for a in tree.arcs))
    return " ".join(map(str, tree.arcs))


def _write_text(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ----------------------------------------------------------------

def _cmd_validate(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    info = {"vertices": net.num_vertices, "arcs": net.num_arcs, "leaves": len(net.leaves),
            "reticulations": net.num_reticulations, "root": net.names[net.root],
            "class": net.strictness}
    out.set("valid", True)
    for k, v in info.items():
        out.set(k, v)
    out.line("valid " + " ".join(f"{k}={v}" for k, v in info.items()))
    return EXIT_OK


def _cmd_decompose(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    d = decompose(net)
    trails = []
    for i, t in enumerate(d.trails):
        trails.append({"index": i, "kind": t.kind, "size": t.size, "arcs": list(t.arcs)})
        out.line(f"{i} {t.kind} {t.size} " + " ".join(map(str, t.arcs)))
    out.set("counts", d.counts)
    out.set("trails", trails)
    return EXIT_OK


def _cmd_check(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    if args.oracle:
        tb = oracle.deviation_via_matching(net) == 0
    else:
        tb = analysis.is_tree_based(net)
    out.set("tree_based", tb)
    out.line("tree-based" if tb else "not tree-based")
    return EXIT_OK if tb else EXIT_NEGATIVE


def _cmd_find(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    tree = analysis.find_subdivision_tree(net)
    out.set("arcs", _tree_repr(net, tree, args.names))
    out.line(_tree_line(net, tree, args.names))
    return EXIT_OK


def _cmd_deviation(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    if args.oracle:
        delta = oracle.deviation_via_matching(net)
        out.set("delta", delta)
    else:
        rep = analysis.deviation(net)
        delta = rep.delta
        out.set("delta", delta)
        out.set("w_fences", list(rep.witnesses))
    out.line(str(delta))
    return EXIT_OK


def _cmd_count(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    if args.oracle:
        n = len(oracle.brute_force_admissible_sets(net))
    else:
        n = analysis.count(net)
    out.set("count", n)
    out.line(str(n))
    return EXIT_OK


def _cmd_enumerate(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    d = decompose(net)
    if args.oracle:
        stream = iter(sorted(tuple(sorted(s)) for s in oracle.brute_force_admissible_sets(net)))
        stream = (analysis.SubdivisionTree(arcs) for arcs in stream)
    else:
        stream = analysis.open_cursor(d)
    trees = []
    emitted = 0
    for tree in stream:
        if args.limit is not None and emitted >= args.limit:
            break
        emitted += 1
        if out.as_json:
            trees.append(_tree_repr(net, tree, args.names))
        else:
            out.line(_tree_line(net, tree, args.names))
    out.set("trees", trees)
    if d.w_fences:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_optimize(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    weights = _parse_weights(args.weights, net)
    direction = MIN if args.min else MAX
    tree, score = analysis.optimize(net, weights, direction)
    out.set("direction", direction)
    out.set("score", score)
    out.set("arcs", _tree_repr(net, tree, args.names))
    out.line(repr(score))
    out.line(_tree_line(net, tree, args.names))
    return EXIT_OK


def _cmd_sample(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    trees = analysis.sample_uniform(net, args.seed, args.n)
    out.set("trees", [_tree_repr(net, t, args.names) for t in trees])
    for t in trees:
        out.line(_tree_line(net, t, args.names))
    return EXIT_OK


def _cmd_generate(args, out: _Out) -> int:
    if args.profile:
        net = gadget_with_profile(_parse_profile(args.profile), seed=args.seed)
    else:
        if args.leaves is None or args.reticulations is None:
            raise _InputError("generate needs --leaves and --reticulations, or --profile")
        tb = {"any": None, "yes": True, "no": False}[args.tree_based]
        net = random_network(args.leaves, args.reticulations, args.seed, tb)
    text = write_edge_list(net)
    if out.as_json:
        out.set("edge_list", text)
    else:
        _write_text(text, args.output)
    return EXIT_OK


def _cmd_export_dot(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    overlay = None
    if args.overlay == "trails":
        overlay = decompose(net)
    elif args.overlay == "tree":
        overlay = analysis.find_subdivision_tree(net)
    text = export_dot(net, overlay)
    if out.as_json:
        out.set("dot", text)
    else:
        _write_text(text, args.output)
    return EXIT_OK


def _cmd_attach_leaf(args, out: _Out) -> int:
    net = load_network(args.input, args.format, args.strictness)
    new = attach_leaf(net, args.arc, args.leaf_name)
    text = write_edge_list(new)
    if out.as_json:
        out.set("edge_list", text)
    else:
        _write_text(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treebased",
                                description="Tree-based phylogenetic network toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, net_input=True):
        sp = sub.add_parser(name, help=helptext)
        if net_input:
            sp.add_argument("input", help="network file (.el edge list, .nwk eNewick, '-' for stdin)")
            sp.add_argument("--format", choices=("auto", "el", "nwk"), default="auto")
            sp.add_argument("--binary", dest="strictness", action="store_const",
                            const=BINARY, default=ALMOST_BINARY,
                            help="reject vertices that are not strictly binary")
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        sp.set_defaults(func=func)
        return sp

    add("validate", _cmd_validate, "validate a network and print its sizes")
    add("decompose", _cmd_decompose, "list the maximal zig-zag trails")
    sp = add("check", _cmd_check, "decide whether the network is tree-based")
    sp.add_argument("--oracle", action="store_true", help="use the matching oracle")
    sp = add("find", _cmd_find, "print one subdivision tree")
    sp.add_argument("--names", action="store_true")
    sp = add("deviation", _cmd_deviation, "minimum number of leaves to attach")
    sp.add_argument("--oracle", action="store_true", help="use the matching oracle")
    sp = add("count", _cmd_count, "number of subdivision trees")
    sp.add_argument("--oracle", action="store_true", help="brute-force count (small inputs)")
    sp = add("enumerate", _cmd_enumerate, "list subdivision trees, one per line")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--names", action="store_true", help="print arcs as tail>head")
    sp.add_argument("--oracle", action="store_true", help="brute-force enumeration (small inputs)")
    sp = add("optimize", _cmd_optimize, "maximum- or minimum-weight subdivision tree")
    sp.add_argument("--weights", default=None,
                    help="weights file or comma-separated values in arc order "
                         "(default: the network's own arc weights)")
    sp.add_argument("--min", action="store_true", help="minimize instead of maximize")
    sp.add_argument("--names", action="store_true")
    sp = add("sample", _cmd_sample, "uniformly random subdivision trees")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--names", action="store_true")
    sp = add("generate", _cmd_generate, "generate a random network or a profile gadget",
             net_input=False)
    sp.add_argument("--leaves", type=int)
    sp.add_argument("--reticulations", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tree-based", choices=("any", "yes", "no"), default="any")
    sp.add_argument("--profile", help="trail profile such as 'M2,M4,M4,N1,N3,W2'")
    sp.add_argument("-o", "--output")
    sp = add("export-dot", _cmd_export_dot, "render the network as DOT")
    sp.add_argument("--overlay", choices=("none", "trails", "tree"), default="none")
    sp.add_argument("-o", "--output")
    sp = add("attach-leaf", _cmd_attach_leaf, "subdivide an arc and hang a new leaf on it")
    sp.add_argument("--arc", type=int, required=True)
    sp.add_argument("--leaf-name")
    sp.add_argument("-o", "--output")
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    out = _Out(args.json)
    try:
        code = args.func(args, out)
    except NotTreeBased as exc:
        out.set("tree_based", False)
        out.set("w_fences", exc.witnesses)
        out.line("not tree-based")
        out.finish()
        return EXIT_NEGATIVE
    except TooLarge as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_GUARD
    except (NetworkError, _InputError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.finish()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
