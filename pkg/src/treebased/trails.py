"""Admissible arc subsets inside a single maximal zig-zag trail.

A subset of a trail's arcs is written as a 0-1 pattern over the canonical arc
order. Admissible patterns per kind:

* crown of size m: ``(10)^(m/2)`` (choice 0) and ``(01)^(m/2)`` (choice 1);
* N-fence of odd size m: the single pattern ``1(01)^((m-1)/2)`` (choice 0);
* M-fence of even size m: ``1 (01)^p (10)^q 1`` with ``p + q = (m-2)/2``;
  choice ``p`` ranges over ``0..m/2-1``;
* W-fence: none.
"""
from __future__ import annotations

import math
from typing import Sequence

from .decompose import CROWN, M_FENCE, N_FENCE, W_FENCE, Trail
from .errors import InvalidChoice, LengthMismatch, WFenceHasNoSelection

MAX = "max"
MIN = "min"


def family_size(trail: Trail) -> int:
    """Number of admissible subsets of the trail's arcs."""
    kind = trail.kind
    if kind == N_FENCE:
        return 1
    if kind == M_FENCE:
        return len(trail.arcs) // 2
    if kind == CROWN:
        return 2
    return 0


def admissible_by_index(trail: Trail, choice: int) -> tuple[int, ...]:
    m = len(trail.arcs)
    kind = trail.kind
    if kind == W_FENCE:
        raise WFenceHasNoSelection("a W-fence has no admissible subset")
    if not isinstance(choice, int) or not 0 <= choice < family_size(trail):
        raise InvalidChoice(f"choice {choice!r} invalid for {kind} of size {m}")
    if kind == CROWN:
        return (1, 0) * (m // 2) if choice == 0 else (0, 1) * (m // 2)
    if kind == N_FENCE:
        return (1,) + (0, 1) * ((m - 1) // 2)
    q = (m - 2) // 2 - choice
    return (1,) + (0, 1) * choice + (1, 0) * q + (1,)


def selected_positions(trail: Trail, choice: int) -> list[int]:
    """0-based positions of the 1s in ``admissible_by_index(trail, choice)``."""
    m = len(trail.arcs)
    kind = trail.kind
    if kind == W_FENCE:
        raise WFenceHasNoSelection("a W-fence has no admissible subset")
    if not isinstance(choice, int) or not 0 <= choice < family_size(trail):
        raise InvalidChoice(f"choice {choice!r} invalid for {kind} of size {m}")
    if kind == CROWN:
        return list(range(choice, m, 2))
    if kind == N_FENCE:
        return list(range(0, m, 2))
    # M-fence: both ends, even positions 2..2p from the (01)^p block, odd 2p+1..m-3 from (10)^q
    return [0, *range(2, 2 * choice + 1, 2), *range(2 * choice + 1, m - 2, 2), m - 1]


def is_admissible_local(trail: Trail, pattern: Sequence[int]) -> bool:
    """Check the per-trail admissibility conditions on a 0-1 pattern.

    Free end arcs of a fence must be selected; for each pair of consecutive
    arcs, a shared head needs exactly one of them selected and a shared tail
    at least one.
    """
    m = len(trail.arcs)
    if len(pattern) != m:
        raise LengthMismatch(f"pattern has length {len(pattern)}, trail has {m} arcs")
    x = [1 if b else 0 for b in pattern]
    closed = trail.kind == CROWN
    if not closed and not (x[0] and x[-1]):
        return False
    shared_head = trail.head_first
    pairs = m if closed else m - 1
    for i in range(pairs):
        s = x[i] + x[(i + 1) % m]
        if shared_head:
            if s != 1:
                return False
        elif s == 0:
            return False
        shared_head = not shared_head
    return True


def _exact(weights: Sequence[float]) -> list[int]:
    # floats are dyadic: scale all of them to one power-of-two denominator
    ratios = [float(w).as_integer_ratio() for w in weights]
    k = max((d.bit_length() - 1 for _, d in ratios), default=0)
    return [n << (k - (d.bit_length() - 1)) for n, d in ratios]


def best_choice(trail: Trail, weights, direction: str = MAX) -> tuple[int, float]:
    """Optimal choice index for the trail and its score.

    ``weights`` is indexed by arc index (a sequence over all arcs of the
    network, or a mapping). Candidates are compared exactly; ties go to the
    smallest choice. The score is the correctly rounded sum of the selected
    weights.
    """
    if direction not in (MAX, MIN):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    kind = trail.kind
    if kind == W_FENCE:
        raise WFenceHasNoSelection("a W-fence has no admissible subset")
    ws = [weights[a] for a in trail.arcs]
    m = len(ws)
    if kind == N_FENCE:
        choice = 0
    else:
        ex = _exact(ws)
        better = (lambda s, b: s > b) if direction == MAX else (lambda s, b: s < b)
        if kind == CROWN:
            s0 = sum(ex[0::2])
            s1 = sum(ex[1::2])
            choice = 1 if better(s1, s0) else 0
        else:
            # the ends are common to every choice; choice p adds
            # even_prefix[p] = ex[2] + ex[4] + .. + ex[2p] and
            # odd_suffix[p] = ex[2p+1] + ex[2p+3] + .. + ex[m-3]
            half = m // 2
            even_prefix = [0] * half
            acc = 0
            for p in range(1, half):
                acc += ex[2 * p]
                even_prefix[p] = acc
            odd_suffix = [0] * half
            acc = 0
            for p in range(half - 2, -1, -1):
                acc += ex[2 * p + 1]
                odd_suffix[p] = acc
            choice = 0
            best = even_prefix[0] + odd_suffix[0]
            for p in range(1, half):
                s = even_prefix[p] + odd_suffix[p]
                if better(s, best):
                    best, choice = s, p
    score = math.fsum(ws[i] for i in selected_positions(trail, choice))
    return choice, score
