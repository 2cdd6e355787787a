"""Exact chromatic computations.

The chromatic number is found by iterative deepening on k-colorability,
starting from a greedy clique lower bound. Optimal colorings (proper
partitions into exactly chi classes) are enumerated exhaustively with a
first-use color rule, so each partition appears exactly once regardless of
color names; partitions are then canonicalized by sorting classes on their
minimum vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, PreconditionError, iter_bits

DEFAULT_ENUMERATION_CAP = 10**6


class EnumerationCapError(RuntimeError):
    """Raised when optimal-coloring enumeration exceeds its cap.

    Hitting the cap is a hard error rather than a truncated answer: the
    downstream statistics (sigma, class-size differences) are only correct
    when the enumeration is complete.
    """


def require_edge(h: Graph) -> None:
    if h.n == 0 or h.edge_count() == 0:
        raise PreconditionError("graph must contain at least one edge")


def greedy_clique(h: Graph) -> tuple[int, ...]:
    """Grow a clique greedily by most-constrained degree; lower-bounds chi."""
    cand = h.vertex_mask
    clique = []
    while cand:
        best = -1
        best_deg = -1
        for v in iter_bits(cand):
            d = (h.adj[v] & cand).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        clique.append(best)
        cand &= h.adj[best]
    return tuple(clique)


def _search_order(h: Graph) -> list[int]:
    return sorted(range(h.n), key=lambda v: (-h.degree(v), v))


def _k_colorable(h: Graph, k: int) -> bool:
    order = _search_order(h)
    class_masks = [0] * k

    def place(i: int, used: int) -> bool:
        if i == h.n:
            return True
        v = order[i]
        limit = min(used + 1, k)
        for c in range(limit):
            if class_masks[c] & h.adj[v]:
                continue
            class_masks[c] |= 1 << v
            if place(i + 1, max(used, c + 1)):
                return True
            class_masks[c] ^= 1 << v
        return False

    return place(0, 0)


def chromatic_number(h: Graph) -> int:
    if h.n == 0:
        raise PreconditionError("chromatic number of the empty graph is undefined")
    if h.edge_count() == 0:
        return 1
    lower = max(2, len(greedy_clique(h)))
    for k in range(lower, h.n + 1):
        if _k_colorable(h, k):
            return k
    return h.n


@dataclass(frozen=True)
class ColoringPartition:
    """A partition of the vertex set into independent classes.

    ``classes`` are ordered by their minimum vertex, which identifies the
    partition uniquely without reference to color names.
    """

    classes: tuple[frozenset[int], ...]
    sizes_sorted: tuple[int, ...]

    @classmethod
    def from_classes(cls, classes: Iterator[frozenset[int]]) -> "ColoringPartition":
        ordered = tuple(sorted(classes, key=min))
        sizes = tuple(sorted(len(c) for c in ordered))
        return cls(ordered, sizes)

    def to_json(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]


def optimal_colorings(h: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[ColoringPartition]:
    """All partitions of V(h) into exactly chi(h) independent classes.

    Color permutations are identified: the result holds each partition once.
    Raises EnumerationCapError if more than ``cap`` partitions exist.
    """
    if h.n == 0:
        raise PreconditionError("cannot color the empty graph")
    r = chromatic_number(h)
    order = _search_order(h)
    class_masks = [0] * r
    out: list[ColoringPartition] = []

    def emit() -> None:
        if len(out) >= cap:
            raise EnumerationCapError(
                f"more than {cap} optimal colorings; raise the cap to enumerate"
            )
        out.append(
            ColoringPartition.from_classes(
                frozenset(iter_bits(m)) for m in class_masks
            )
        )

    def place(i: int, used: int) -> None:
        if i == h.n:
            if used == r:
                emit()
            return
        v = order[i]
        remaining = h.n - i - 1
        limit = min(used + 1, r)
        for c in range(limit):
            new_used = max(used, c + 1)
            # every class must end up nonempty
            if new_used + remaining < r:
                continue
            if class_masks[c] & h.adj[v]:
                continue
            class_masks[c] |= 1 << v
            place(i + 1, new_used)
            class_masks[c] ^= 1 << v

    place(0, 0)
    out.sort(key=lambda p: tuple(tuple(sorted(c)) for c in p.classes))
    return out


def _sigma_of(partitions: list[ColoringPartition]) -> int:
    return min(p.sizes_sorted[0] for p in partitions)


def _diff_set_of(partitions: list[ColoringPartition]) -> set[int]:
    out: set[int] = set()
    for p in partitions:
        s = p.sizes_sorted
        out.update(s[i + 1] - s[i] for i in range(len(s) - 1))
    return out


def sigma(h: Graph) -> int:
    """Smallest color-class size over all optimal colorings."""
    require_edge(h)
    return _sigma_of(optimal_colorings(h))


def colour_difference_set(h: Graph) -> set[int]:
    """All differences of consecutive sorted class sizes, over all optimal
    colorings."""
    require_edge(h)
    return _diff_set_of(optimal_colorings(h))


def every_optimal_coloring_equitable(h: Graph) -> bool:
    require_edge(h)
    return colour_difference_set(h) == {0}
