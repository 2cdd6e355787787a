"""Bitset-backed simple graphs on up to 128 vertices.

Graphs are immutable: adjacency is a tuple of per-vertex bitmasks, so
values can be hashed, compared and shared across threads freely. Every
operation in this module is a pure function of its inputs.

Two text formats are supported: graph6 (the compact ASCII interchange
format used by graph corpora) and a line-oriented edge list ("n m" header
followed by one "u v" pair per line, 0-indexed; '#' starts a comment).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128


class GraphFormatError(ValueError):
    """Graph text (graph6 or edge list) could not be decoded."""


class PreconditionError(ValueError):
    """An operation was called outside its input contract."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbor bitmask of ``v``.

    ``labels`` are optional decoration (constructions use them to name a
    distinguished vertex); structural equality and hashing ignore them.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {self.n}")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, mask in enumerate(self.adj):
            for u in iter_bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2


@dataclass(frozen=True)
class VertexSetPartition:
    """Disjoint nonempty vertex classes covering ``0..n-1``."""

    classes: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen = 0
        for cls in self.classes:
            if not cls:
                raise ValueError("empty class in partition")
            mask = 0
            for v in cls:
                mask |= 1 << v
            if seen & mask:
                raise ValueError("classes are not disjoint")
            seen |= mask
        n = sum(len(c) for c in self.classes)
        if seen != (1 << n) - 1:
            raise ValueError("classes do not cover a contiguous vertex range")

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


# ---------------------------------------------------------------------------
# generators


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` pendant vertices."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> tuple[Graph, VertexSetPartition]:
    """Complete multipartite graph; class ``i`` holds ``sizes[i]`` consecutive
    vertices, in the order given."""
    if not sizes:
        raise PreconditionError("at least one class size required")
    if any(s <= 0 for s in sizes):
        raise PreconditionError("class sizes must be positive")
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise PreconditionError(f"order {n} exceeds {MAX_VERTICES}")
    classes = []
    start = 0
    class_masks = []
    for s in sizes:
        classes.append(frozenset(range(start, start + s)))
        class_masks.append(((1 << s) - 1) << start)
        start += s
    full = (1 << n) - 1
    adj = []
    for mask in class_masks:
        for v in iter_bits(mask):
            adj.append(full ^ mask)
    return Graph(n, tuple(adj)), VertexSetPartition(tuple(classes))


def blow_up(g: Graph, t: int) -> Graph:
    """Replace each vertex with ``t`` independent clones; each edge becomes a
    complete bipartite join between the two clone sets."""
    if t < 1:
        raise PreconditionError("blow-up factor must be >= 1")
    if t * g.n > MAX_VERTICES:
        raise PreconditionError(f"order {t * g.n} exceeds {MAX_VERTICES}")
    block = (1 << t) - 1
    adj = []
    for x in range(g.n):
        mask = 0
        for y in iter_bits(g.adj[x]):
            mask |= block << (y * t)
        adj.extend([mask] * t)
    return Graph(t * g.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise PreconditionError(f"order {g.n + h.n} exceeds {MAX_VERTICES}")
    adj = list(g.adj) + [m << g.n for m in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full ^ m ^ (1 << v) for v, m in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0.. in ascending order."""
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in iter_bits(g.adj[v]):
            if u in index:
                adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex bijection ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    adj = [0] * g.n
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(adj))


# ---------------------------------------------------------------------------
# degree utilities


def min_ore_degree_sum(g: Graph) -> int | float:
    """Minimum of d(x)+d(y) over non-adjacent pairs x != y.

    Returns ``math.inf`` when no such pair exists (complete or tiny graph),
    in which case any degree-sum condition holds vacuously.
    """
    degs = g.degrees()
    best: int | float = math.inf
    for u in range(g.n):
        non_adj = ~g.adj[u] & (g.vertex_mask >> (u + 1) << (u + 1))
        for v in iter_bits(non_adj):
            s = degs[u] + degs[v]
            if s < best:
                best = s
    return best


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise PreconditionError("average degree of the empty graph is undefined")
    return Fraction(2 * g.edge_count(), g.n)


# ---------------------------------------------------------------------------
# graph6 codec
#
# Encoding: the order n in one byte (n + 63) for n <= 62, else '~' followed
# by three bytes carrying n as an 18-bit big-endian value in 6-bit groups;
# then the upper triangle in column-major order (x01, x02, x12, x03, ...)
# packed big-endian into 6-bit groups, each offset by 63, zero-padded.

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    out = []
    if g.n <= 62:
        out.append(chr(g.n + 63))
    else:
        out.append("~")
        out.append(chr(((g.n >> 12) & 63) + 63))
        out.append(chr(((g.n >> 6) & 63) + 63))
        out.append(chr((g.n & 63) + 63))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphFormatError("empty graph6 input")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError("8-byte order field implies n >= 258048")
        if len(s) < 4:
            raise GraphFormatError("truncated 4-byte order field")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        if n < 63:
            raise GraphFormatError("non-canonical 4-byte order field")
        body = s[4:]
    if n > MAX_VERTICES:
        raise GraphFormatError(f"order {n} exceeds supported maximum {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"body length {len(body)} does not match order {n} (expected {need})"
        )
    adj = [0] * n
    bit_index = 0
    total_bits = n * (n - 1) // 2
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for ch in body:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            bit = val >> k & 1
            if bit_index < total_bits:
                if bit:
                    i, j = next(pairs)
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                else:
                    next(pairs)
            elif bit:
                raise GraphFormatError("nonzero padding bits")
            bit_index += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# edge-list codec


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphFormatError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"bad header {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {rows[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"order {n} exceeds supported maximum {MAX_VERTICES}")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer edge line {row!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u}-{v} out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        edges.append((u, v))
    # duplicates are tolerated in hand-authored fixtures; from_edges dedups
    return Graph.from_edges(n, edges)


def parse_graph_text(text: str) -> Graph:
    """Auto-detect the format: an edge list starts with an 'n m' integer
    header (after comment stripping); anything else is treated as graph6."""
    stripped = text.strip()
    if stripped.startswith(_G6_HEADER):
        return parse_graph6(stripped)
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2:
            try:
                int(parts[0]), int(parts[1])
            except ValueError:
                break
            return parse_edge_list(text)
        break
    return parse_graph6(stripped)
