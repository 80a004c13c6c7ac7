"""Simple undirected graphs and the constructions the bound rules rely on.

Graphs are immutable: nodes are 0..n-1, edges are stored as a frozenset of
ordered pairs (u, v) with u < v.  No self-loops, no multi-edges, no weights.
The scale of interest is small (tens of nodes), so adjacency is kept both as
neighbor sets and as integer bitmasks; the bitmasks make the subset searches
in :mod:`syncbound.subgraphs` cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction (bad endpoint, self-loop, duplicate edge)."""


class DisconnectedGraphError(ValueError):
    """Raised by operations that require a connected graph."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-node degrees plus their extremes."""

    degrees: tuple[int, ...]
    d_min: int
    d_max: int


@dataclass(frozen=True)
class Graph:
    """An undirected graph on nodes 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"node count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                if u == v:
                    raise GraphError(f"self-loop at node {u}")
                raise GraphError(f"edge ({u}, {v}) is not an ordered in-range pair")

    # -- basic accessors ---------------------------------------------------

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Neighbor sets as integer bitmasks (bit v of entry u <=> edge uv)."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges if u != v else False

    def degrees(self) -> DegreeProfile:
        degs = tuple(len(s) for s in self.adjacency_sets)
        if not degs:
            raise GraphError("degree profile of an empty graph is undefined")
        return DegreeProfile(degs, min(degs), max(degs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    # -- connectivity ------------------------------------------------------

    def is_connected(self) -> bool:
        """Breadth-first reachability from node 0; the 1-node graph counts."""
        if self.n == 0:
            return False
        if self.n == 1:
            return True
        bits = self.adjacency_bits
        seen = 1
        frontier = 1
        full = (1 << self.n) - 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= bits[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    # -- constructions -----------------------------------------------------

    def complement(self) -> "Graph":
        """Graph on the same nodes whose edges are exactly the missing pairs."""
        missing = frozenset(
            e for e in combinations(range(self.n), 2) if e not in self.edges
        )
        return Graph(self.n, missing)

    def induced_subgraph(self, nodes: Iterable[int]) -> "Graph":
        """Subgraph on the given nodes, relabeled 0..k-1 in sorted node order."""
        sel = sorted(set(nodes))
        if sel and not (0 <= sel[0] and sel[-1] < self.n):
            raise GraphError(f"induced node set {sel} out of range for n={self.n}")
        rank = {v: i for i, v in enumerate(sel)}
        kept = frozenset(
            (rank[u], rank[v]) for u, v in self.edges if u in rank and v in rank
        )
        return Graph(len(sel), kept)


# -- constructors and generators --------------------------------------------


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from (u, v) pairs, rejecting malformed input.

    Raises GraphError on out-of-range endpoints, self-loops, or duplicate
    edges (duplicates in either orientation).
    """
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphError(f"self-loop at node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
    return Graph(n, frozenset(seen))


def edgeless(k: int) -> Graph:
    """k isolated nodes."""
    return Graph(k, frozenset())


def complete(k: int) -> Graph:
    """The complete graph K_k."""
    if k < 1:
        raise GraphError(f"complete graph needs k >= 1, got {k}")
    return Graph(k, frozenset(combinations(range(k), 2)))


def cycle(k: int) -> Graph:
    """The cycle C_k, k >= 3, with edges (i, i+1 mod k)."""
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return Graph(k, frozenset(_normalize_edge(i, (i + 1) % k) for i in range(k)))


def path(k: int) -> Graph:
    """The path P_k on k >= 1 nodes, edges (i, i+1)."""
    if k < 1:
        raise GraphError(f"path needs k >= 1, got {k}")
    return Graph(k, frozenset((i, i + 1) for i in range(k - 1)))


def join(g1: Graph, g2: Graph) -> Graph:
    """Join g1 * g2: disjoint union plus every cross edge.

    g1 keeps its labels; g2's node j becomes g1.n + j.
    """
    off = g1.n
    edges = set(g1.edges)
    edges.update((u + off, v + off) for u, v in g2.edges)
    edges.update((a, b + off) for a in range(g1.n) for b in range(g2.n))
    return Graph(g1.n + g2.n, frozenset(edges))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts 0..a-1 and a..a+b-1, all cross edges."""
    if a < 1 or b < 1:
        raise GraphError(f"complete bipartite needs both parts >= 1, got {a}, {b}")
    return join(edgeless(a), edgeless(b))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product: node (i, j) becomes i * g2.n + j.

    (i1, j1) ~ (i2, j2) iff i1 == i2 and j1 ~ j2 in g2, or j1 == j2 and
    i1 ~ i2 in g1.
    """
    n2 = g2.n
    edges: set[tuple[int, int]] = set()
    for i in range(g1.n):
        for u, v in g2.edges:
            edges.add(_normalize_edge(i * n2 + u, i * n2 + v))
    for u, v in g1.edges:
        for j in range(n2):
            edges.add(_normalize_edge(u * n2 + j, v * n2 + j))
    return Graph(g1.n * n2, frozenset(edges))


def prism() -> Graph:
    """The 3-prism (triangular prism), built as the complement of C_6."""
    return cycle(6).complement()
