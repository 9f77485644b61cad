"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class NetworkError(ValueError):
    """Base class for invalid networks and invalid requests on them."""


class InvalidNetwork(NetworkError):
    """Input arcs do not describe a valid (almost-)binary network.

    Parsers annotate these with ``line`` (edge lists) when known.
    """

    line: int | None = None

    def annotate(self, line: int) -> "InvalidNetwork":
        self.line = line
        self.args = (f"line {line}: {self.args[0]}",) + self.args[1:]
        return self


class CycleDetected(InvalidNetwork):
    def __init__(self, vertex: str, arc: int | None = None):
        super().__init__(f"directed cycle through vertex {vertex!r}")
        self.vertex = vertex
        self.arc = arc


class RootError(InvalidNetwork):
    pass


class MultipleRoots(RootError):
    def __init__(self, roots: list[str]):
        super().__init__(f"more than one vertex with in-degree 0: {roots[:5]}")
        self.roots = roots


class NoRoot(RootError):
    def __init__(self):
        super().__init__("no vertex with in-degree 0")


class SelfLoop(InvalidNetwork):
    def __init__(self, vertex: str, arc: int):
        super().__init__(f"self-loop at {vertex!r}")
        self.vertex = vertex
        self.arc = arc


class DuplicateArc(InvalidNetwork):
    def __init__(self, tail: str, head: str, arc: int):
        super().__init__(f"duplicate arc ({tail}, {head})")
        self.tail, self.head, self.arc = tail, head, arc


class NegativeWeight(InvalidNetwork):
    def __init__(self, weight: float, arc: int):
        super().__init__(f"negative arc weight {weight!r}")
        self.weight = weight
        self.arc = arc


class DegreeViolation(InvalidNetwork):
    def __init__(self, vertex: str, indeg: int, outdeg: int, strictness: str):
        super().__init__(
            f"vertex {vertex!r} has (in, out) = ({indeg}, {outdeg}), "
            f"not allowed in a {strictness} network"
        )
        self.vertex = vertex
        self.indeg = indeg
        self.outdeg = outdeg
        self.strictness = strictness


class NetworkSyntaxError(InvalidNetwork):
    """Malformed edge-list line or eNewick string."""

    def __init__(self, message: str, line: int | None = None, position: int | None = None):
        where = f"line {line}: " if line is not None else (
            f"position {position}: " if position is not None else "")
        super().__init__(where + message)
        self.line = line
        self.position = position


class UnpairedHybridTag(InvalidNetwork):
    def __init__(self, tag: int):
        super().__init__(f"hybrid tag #H{tag} occurs only once")
        self.tag = tag


class UnknownVertex(NetworkError, KeyError):
    pass


class UnknownArc(NetworkError, IndexError):
    pass


class MalformedTrail(NetworkError):
    pass


class InvalidChoice(NetworkError):
    pass


class WFenceHasNoSelection(NetworkError):
    pass


class LengthMismatch(NetworkError):
    pass


class NotTreeBased(NetworkError):
    """Raised by solvers that need a subdivision tree; ``witnesses`` holds W-fence trail indices."""

    def __init__(self, witnesses: list[int]):
        super().__init__(f"network is not tree-based ({len(witnesses)} W-fence(s))")
        self.witnesses = list(witnesses)


class KExceedsCount(NetworkError):
    pass


class InvalidTree(NetworkError):
    pass


class TooLarge(NetworkError):
    pass


class InfeasibleParameters(NetworkError):
    pass


class Unrealizable(NetworkError):
    pass
