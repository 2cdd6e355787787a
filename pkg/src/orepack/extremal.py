"""Generators for the tight lower-bound constructions and their verifier.

Each bounded construction packages a graph, a distinguished vertex w that
no copy of the target graph H can cover, and the exact degree-sum bound
the construction is claimed to satisfy. Bounds are kept as exact rationals
and compared against the integer minimum degree sum, so no floor/ceiling
ambiguity can creep in. The verifier re-checks all three claims: the
degree-sum bound, the impossibility of covering w (by complete anchored
search), and the divisibility that turns "w uncovered" into "no perfect
packing".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .coloring import chromatic_number
from .graphs import (
    Graph,
    MAX_VERTICES,
    PreconditionError,
    min_ore_degree_sum,
    to_graph6,
)
from .packing import DEFAULT_BUDGET, Verdict, copy_covering_vertex
from .parameters import colour_extension_number, fraction_json

BOUNDED_FAMILIES = ("prop1", "prop2", "prop2-padded")
FAMILIES = BOUNDED_FAMILIES + ("fdiamond", "hdiamond")


@dataclass(frozen=True)
class ExtremalInstance:
    graph: Graph
    w: int
    claimed_ore_bound: Fraction
    family: str
    params: Mapping[str, int]

    def __post_init__(self) -> None:
        if not 0 <= self.w < self.graph.n:
            raise ValueError("distinguished vertex out of range")

    def to_json_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "w": self.w,
            "family": self.family,
            "params": dict(self.params),
            "claimed_bound": fraction_json(self.claimed_ore_bound),
        }


def _balanced_sizes(n: int, r: int) -> list[int]:
    """r class sizes summing to n, differing by at most 1, ascending."""
    q, rem = divmod(n, r)
    return [q] * (r - rem) + [q + 1] * rem


def construct_prop1(r: int, n: int) -> ExtremalInstance:
    """Near-multipartite graph whose distinguished vertex w has an
    (r-2)-partite neighborhood.

    Start from the complete r-partite graph of order n with classes as
    equal as possible (ascending); move all but one vertex, w, of the
    smallest class into the second class, turn that enlarged class into a
    clique, and delete the edges between w and it. Every non-adjacent pair
    has degree sum at least 2(1 - 1/r)n - 2, yet w cannot be covered by
    any H with chi(H) = r whose vertex neighborhoods are all
    (r-1)-chromatic.
    """
    if r < 2:
        raise PreconditionError("need r >= 2")
    if n < r:
        raise PreconditionError(f"need n >= r, got n={n}, r={r}")
    sizes = _balanced_sizes(n, r)
    clique_size = sizes[0] + sizes[1] - 1
    # vertex 0 is w; 1..clique_size is the clique class; rest keep classes
    edges = []
    clique = range(1, clique_size + 1)
    for u in clique:
        for v in clique:
            if u < v:
                edges.append((u, v))
    upper_classes = []
    start = clique_size + 1
    for s in sizes[2:]:
        upper_classes.append(range(start, start + s))
        start += s
    for i, cls in enumerate(upper_classes):
        for v in cls:
            edges.append((0, v))
            for u in clique:
                edges.append((u, v))
            for other in upper_classes[i + 1:]:
                for u in other:
                    edges.append((v, u))
    graph = Graph.from_edges(n, edges)
    bound = Fraction(2 * (r - 1) * n, r) - 2
    return ExtremalInstance(graph, 0, bound, "prop1", {"r": r, "n": n})


def _prop2_sizes(r: int, m: int, h_order: int, t: int) -> tuple[int, list[int]]:
    block = (m + 2) * r - 2
    if 2 * h_order % block != 0:
        raise PreconditionError(
            f"divisibility: 2*{h_order} is not a multiple of (m+2)r-2 = {block}"
        )
    s = 2 * h_order // block
    if t <= 0 or t % (block * (r - 2)) != 0:
        raise PreconditionError(
            f"divisibility: t={t} is not a positive multiple of "
            f"((m+2)r-2)(r-2) = {block * (r - 2)}"
        )
    big = (h_order * t - (m + 1) * s * t) // (r - 2)
    sizes = [s * t - 1] + [s * t] * m + [big] * (r - 2)
    return s, sizes


def _prop2_graph(sizes: list[int], m: int) -> tuple[Graph, int]:
    """Complete multipartite graph on ``sizes`` plus an extra vertex w
    (index 0) adjacent exactly to the classes after the first m+1."""
    n = 1 + sum(sizes)
    if n > MAX_VERTICES:
        raise PreconditionError(f"order {n} exceeds {MAX_VERTICES}")
    edges = []
    classes = []
    start = 1
    for s in sizes:
        classes.append(range(start, start + s))
        start += s
    for i, cls in enumerate(classes):
        for v in cls:
            for other in classes[i + 1:]:
                for u in other:
                    edges.append((v, u))
    for cls in classes[m + 1:]:
        for v in cls:
            edges.append((0, v))
    return Graph.from_edges(n, edges), n


def construct_prop2(r: int, m: int, h_order: int, t: int) -> ExtremalInstance:
    """Complete (r+m-1)-partite graph plus a vertex w seeing only the last
    r-2 classes.

    With s := 2*h_order/((m+2)r - 2), the classes have sizes st-1, then m
    classes of st, then r-2 classes of (m+2)st/2; w (index 0) is adjacent
    exactly to the last r-2 classes. The order is h_order * t and every
    non-adjacent pair has degree sum at least
    2(1 - (m+2)/((m+2)r-2)) * h_order * t - 1, attained by w against the
    st-classes. Any H with chi(H) = r and finite extension number m cannot
    cover w: its (r-2)-colorable-neighborhood vertices are exactly the ones
    that would need chi + m colors.
    """
    if r < 3:
        raise PreconditionError("need r >= 3")
    if m < 0:
        raise PreconditionError("need m >= 0")
    _, sizes = _prop2_sizes(r, m, h_order, t)
    graph, n = _prop2_graph(sizes, m)
    assert n == h_order * t
    bound = 2 * (1 - Fraction(m + 2, (m + 2) * r - 2)) * n - 1
    return ExtremalInstance(
        graph, 0, bound, "prop2", {"r": r, "m": m, "h_order": h_order, "t": t}
    )


def construct_prop2_padded(r: int, m: int, h_order: int, n: int) -> ExtremalInstance:
    """The previous construction at the largest admissible order n' <= n,
    padded up to order n with clones inside the first class.

    The padding vertices copy the neighborhood of the smallest class, so w
    still cannot be covered; the degree-sum bound relaxes to
    2(1 - (m+2)/((m+2)r-2)) * n - 2 * h_order**4.
    """
    if r < 3:
        raise PreconditionError("need r >= 3")
    if m < 0:
        raise PreconditionError("need m >= 0")
    if n % h_order != 0:
        raise PreconditionError(f"divisibility: {h_order} does not divide n={n}")
    block = ((m + 2) * r - 2) * (r - 2)
    if n < block * h_order:
        raise PreconditionError(
            f"need n >= ((m+2)r-2)(r-2)*h_order = {block * h_order}"
        )
    if n > MAX_VERTICES:
        raise PreconditionError(f"order {n} exceeds {MAX_VERTICES}")
    t = (n // h_order) // block * block
    _, sizes = _prop2_sizes(r, m, h_order, t)
    sizes[0] += n - h_order * t
    graph, order = _prop2_graph(sizes, m)
    assert order == n
    bound = 2 * (1 - Fraction(m + 2, (m + 2) * r - 2)) * n - 2 * h_order**4
    return ExtremalInstance(
        graph, 0, bound, "prop2-padded", {"r": r, "m": m, "h_order": h_order, "n": n}
    )


def construct_fdiamond() -> Graph:
    """Octahedron minus an edge xy, plus a new vertex z adjacent to x and y
    only: 7 vertices, 13 edges, the smallest graph with extension number 1."""
    return construct_hdiamond(1, 3, [2, 2, 2], labels=("x", "x'", "y", "y'", "c1", "c2", "z"))


def construct_hdiamond(
    k: int, r: int, sizes: list[int], labels: Optional[tuple[str, ...]] = None
) -> Graph:
    """Apex construction with extension number exactly k at chromatic
    number r.

    Take the complete r-partite graph with the given class sizes (each
    > k), delete k vertex-disjoint transversal (k+1)-cliques inside the
    first k+1 classes, and add an apex adjacent to those k(k+1) vertices
    and to every class strictly between the (k+1)-st and the last.
    """
    if k < 1:
        raise PreconditionError("need k >= 1")
    if r < k + 2:
        raise PreconditionError(f"need r >= k+2, got r={r}, k={k}")
    if len(sizes) != r:
        raise PreconditionError(f"need exactly r={r} class sizes")
    if any(s <= k for s in sizes):
        raise PreconditionError(f"every class size must exceed k={k}")
    n = sum(sizes) + 1
    if n > MAX_VERTICES:
        raise PreconditionError(f"order {n} exceeds {MAX_VERTICES}")
    starts = []
    pos = 0
    for s in sizes:
        starts.append(pos)
        pos += s
    apex = pos
    edges = []
    deleted = set()
    for i in range(k):
        transversal = [starts[j] + i for j in range(k + 1)]
        for a in range(len(transversal)):
            for b in range(a + 1, len(transversal)):
                deleted.add((transversal[a], transversal[b]))
    for ci in range(r):
        for cj in range(ci + 1, r):
            for u in range(starts[ci], starts[ci] + sizes[ci]):
                for v in range(starts[cj], starts[cj] + sizes[cj]):
                    if (u, v) not in deleted:
                        edges.append((u, v))
    for j in range(k + 1):
        for i in range(k):
            edges.append((apex, starts[j] + i))
    for cj in range(k + 1, r - 1):
        for v in range(starts[cj], starts[cj] + sizes[cj]):
            edges.append((apex, v))
    return Graph.from_edges(n, edges, labels)


@dataclass(frozen=True)
class VerificationReport:
    ore_ok: bool
    no_cover: Verdict
    divisibility_ok: bool
    nodes: int

    @property
    def all_ok(self) -> bool:
        return self.ore_ok and self.no_cover is Verdict.YES and self.divisibility_ok

    def to_json_dict(self) -> dict:
        return {
            "ore_ok": self.ore_ok,
            "no_cover": self.no_cover.value,
            "divisibility_ok": self.divisibility_ok,
            "nodes": self.nodes,
        }


def verify_lower_bound(
    inst: ExtremalInstance, h: Graph, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Machine-check an instance against a concrete H.

    ``no_cover`` is YES when the complete anchored search proves no copy of
    h covers w, NO when one is found, UNKNOWN when the budget ran out.
    """
    if inst.family not in BOUNDED_FAMILIES:
        raise PreconditionError(f"family {inst.family!r} carries no verifiable bound")
    chi = chromatic_number(h)
    if chi != inst.params["r"]:
        raise PreconditionError(
            f"chromatic number mismatch: chi(h)={chi}, instance r={inst.params['r']}"
        )
    ce, _ = colour_extension_number(h)
    if inst.family == "prop1":
        if ce.is_finite:
            raise PreconditionError(
                "prop1 requires an H with infinite colour extension number"
            )
    else:
        if not ce.is_finite or ce.value != inst.params["m"]:
            raise PreconditionError(
                f"extension number mismatch: CE(h)={ce}, instance m={inst.params['m']}"
            )
        if h.n != inst.params["h_order"]:
            raise PreconditionError(
                f"order mismatch: |h|={h.n}, instance h_order={inst.params['h_order']}"
            )
    ore_ok = min_ore_degree_sum(inst.graph) >= inst.claimed_ore_bound
    cover = copy_covering_vertex(inst.graph, h, inst.w, budget)
    if cover.verdict is Verdict.NO:
        no_cover = Verdict.YES
    elif cover.verdict is Verdict.YES:
        no_cover = Verdict.NO
    else:
        no_cover = Verdict.UNKNOWN
    divisibility_ok = h.n > 0 and inst.graph.n % h.n == 0
    return VerificationReport(ore_ok, no_cover, divisibility_ok, cover.nodes)
