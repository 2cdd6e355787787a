"""Exact search for copies of H in G and perfect H-packings.

Copies are subgraph embeddings (not necessarily induced). The embedding
search backtracks over H-vertices, always extending the vertex whose
candidate set (a bitset intersection of the images of its already-placed
neighbors) is smallest; vertices of an untouched component start from all
unused vertices, components largest-first. The packing search repeatedly
anchors on a hardest-to-cover uncovered vertex and branches over the
distinct copy images covering it.

Search effort is metered in node expansions (candidate assignments tried),
so identical inputs and budgets always reproduce the same verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence

from .graphs import Graph, PreconditionError, iter_bits

DEFAULT_BUDGET = 10**8


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class BudgetExhausted(Exception):
    pass


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: Optional[int]):
        self.nodes = 0
        self.limit = limit

    def spend(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted


@dataclass(frozen=True)
class Embedding:
    """Injective map from V(H) into V(G); mapping[h_vertex] = g_vertex."""

    mapping: tuple[int, ...]

    @property
    def image_mask(self) -> int:
        m = 0
        for g in self.mapping:
            m |= 1 << g
        return m

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def to_json(self) -> dict:
        return {str(i): g for i, g in enumerate(self.mapping)}


@dataclass(frozen=True)
class PackingResult:
    verdict: Verdict
    certificate: Optional[tuple[Embedding, ...]]
    nodes: int
    budget: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "certificate": None
            if self.certificate is None
            else [e.to_json() for e in self.certificate],
            "stats": {"nodes": self.nodes, "budget": self.budget},
        }


@dataclass(frozen=True)
class CoverSearchResult:
    verdict: Verdict
    embedding: Optional[Embedding]
    nodes: int


def _component_major_order(h: Graph) -> list[int]:
    """Vertices grouped by component, largest components first."""
    seen = 0
    comps = []
    for v in range(h.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= h.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: (-c.bit_count(), c & -c))
    order = []
    for comp in comps:
        order.extend(iter_bits(comp))
    return order


def _search(
    g: Graph,
    h: Graph,
    allowed: int,
    assignment: list[Optional[int]],
    used: int,
    budget: _Budget,
    comp_order: list[int],
) -> Iterator[tuple[int, ...]]:
    placed = [v for v in range(h.n) if assignment[v] is not None]
    if len(placed) == h.n:
        yield tuple(assignment)  # type: ignore[arg-type]
        return

    # most-constrained unplaced vertex adjacent to the placed part
    best_v = None
    best_cands = 0
    best_count = -1
    for v in range(h.n):
        if assignment[v] is not None:
            continue
        cands = None
        for u in iter_bits(h.adj[v]):
            gu = assignment[u]
            if gu is not None:
                cands = g.adj[gu] if cands is None else cands & g.adj[gu]
                if not cands:
                    break
        if cands is None:
            continue
        cands &= allowed & ~used
        count = cands.bit_count()
        if best_count < 0 or count < best_count:
            best_v, best_cands, best_count = v, cands, count
            if count == 0:
                return
    if best_v is None:
        # no partially-placed component remains; open the next one
        for v in comp_order:
            if assignment[v] is None:
                best_v = v
                break
        best_cands = allowed & ~used

    for c in iter_bits(best_cands):
        budget.spend()
        assignment[best_v] = c
        yield from _search(g, h, allowed, assignment, used | (1 << c), budget, comp_order)
        assignment[best_v] = None


def _embeddings(
    g: Graph,
    h: Graph,
    allowed: int,
    anchor: Optional[int],
    budget: _Budget,
) -> Iterator[tuple[int, ...]]:
    if h.n == 0:
        yield ()
        return
    if h.n > allowed.bit_count():
        return
    comp_order = _component_major_order(h)
    if anchor is None:
        assignment: list[Optional[int]] = [None] * h.n
        yield from _search(g, h, allowed, assignment, 0, budget, comp_order)
        return
    # each embedding whose image contains the anchor maps exactly one
    # h-vertex there, so iterating that choice emits it exactly once
    for v in range(h.n):
        assignment = [None] * h.n
        assignment[v] = anchor
        yield from _search(g, h, allowed, assignment, 1 << anchor, budget, comp_order)


def enumerate_copies(
    g: Graph, h: Graph, anchor: Optional[int] = None
) -> Iterator[Embedding]:
    """Stream every labeled embedding of h into g, optionally restricted to
    those whose image contains ``anchor``. The stream is exhaustive; stop
    consuming it to bound work."""
    if anchor is not None and not 0 <= anchor < g.n:
        raise PreconditionError(f"anchor {anchor} out of range")
    budget = _Budget(None)
    for mapping in _embeddings(g, h, g.vertex_mask, anchor, budget):
        yield Embedding(mapping)


def copy_covering_vertex(
    g: Graph, h: Graph, w: int, budget: int = DEFAULT_BUDGET
) -> CoverSearchResult:
    """First copy of h whose image contains w, or a definite NO after
    complete search, or UNKNOWN on budget exhaustion."""
    if not 0 <= w < g.n:
        raise PreconditionError(f"vertex {w} out of range for order {g.n}")
    meter = _Budget(budget)
    try:
        if 0 < h.n <= g.n:
            for mapping in _embeddings(g, h, g.vertex_mask, w, meter):
                return CoverSearchResult(Verdict.YES, Embedding(mapping), meter.nodes)
    except BudgetExhausted:
        return CoverSearchResult(Verdict.UNKNOWN, None, meter.nodes)
    return CoverSearchResult(Verdict.NO, None, meter.nodes)


def _pick_packing_anchor(g: Graph, uncovered: int) -> int:
    """Fail-first: the uncovered vertex with fewest uncovered neighbors."""
    best = -1
    best_deg = -1
    for v in iter_bits(uncovered):
        d = (g.adj[v] & uncovered).bit_count()
        if best < 0 or d < best_deg:
            best, best_deg = v, d
    return best


def has_perfect_packing(
    g: Graph, h: Graph, budget: int = DEFAULT_BUDGET
) -> PackingResult:
    """Decide whether vertex-disjoint copies of h cover all of g."""
    if h.n == 0:
        raise PreconditionError("packing graph must have at least one vertex")
    if g.n % h.n != 0:
        return PackingResult(Verdict.NO, None, 0, budget)
    meter = _Budget(budget)

    def solve(uncovered: int) -> Optional[list[Embedding]]:
        if not uncovered:
            return []
        v = _pick_packing_anchor(g, uncovered)
        seen_images: set[int] = set()
        for mapping in _embeddings(g, h, uncovered, v, meter):
            emb = Embedding(mapping)
            mask = emb.image_mask
            if mask in seen_images:
                continue
            seen_images.add(mask)
            rest = solve(uncovered & ~mask)
            if rest is not None:
                return [emb] + rest
        return None

    try:
        cert = solve(g.vertex_mask)
    except BudgetExhausted:
        return PackingResult(Verdict.UNKNOWN, None, meter.nodes, budget)
    if cert is None:
        return PackingResult(Verdict.NO, None, meter.nodes, budget)
    return PackingResult(Verdict.YES, tuple(cert), meter.nodes, budget)


def verify_packing(g: Graph, h: Graph, cert: Sequence[Embedding]) -> bool:
    """True iff every embedding is a valid copy of h, images are pairwise
    disjoint, and their union is all of V(g)."""
    covered = 0
    for emb in cert:
        if len(emb.mapping) != h.n:
            return False
        mask = 0
        for gv in emb.mapping:
            if not 0 <= gv < g.n:
                return False
            mask |= 1 << gv
        if mask.bit_count() != h.n:
            return False
        if mask & covered:
            return False
        for u, v in h.edges():
            if not g.has_edge(emb.mapping[u], emb.mapping[v]):
                return False
        covered |= mask
    return covered == g.vertex_mask
