"""Structure searches that feed the bound rules.

Everything here is exhaustive over node subsets (enumerated in lexicographic
order, so results are deterministic) and is meant for hosts of a few dozen
nodes at most.  Searches that would scan subsets of an oversized host raise
SearchUndecided so callers can tell "absent" from "not searched".  Found
structures come back as certificates that can be re-verified independently
of the search that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Mapping, Sequence

from .graph import DisconnectedGraphError, Graph

#: default host-size cutoff for exhaustive subset searches
DEFAULT_SEARCH_CUTOFF = 16

#: node-expansion budget for the greedy fallback beyond the cutoff
GREEDY_BUDGET = 200_000


class CertificateError(ValueError):
    """A certificate failed structural verification against its host."""


class SearchUndecided(RuntimeError):
    """Host too large for exhaustive search; presence is unknown."""


CERTIFICATE_KINDS = (
    "even_cycle",
    "odd_cycle",
    "chain",
    "join",
    "product",
    "disconnected_set",
)


@dataclass(frozen=True)
class SubgraphCertificate:
    """A checkable witness that a host graph contains some structure.

    nodes:     host nodes in traversal order (cycles: cyclic order; chains:
               path order; otherwise sorted).
    parts:     the two sides of a join.
    factors:   the two factor graphs of a product embedding.
    embedding: factor node (i, j) -> host node at index i * factors[1].n + j.
    """

    kind: str
    nodes: tuple[int, ...]
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    factors: tuple[Graph, Graph] | None = None
    embedding: tuple[int, ...] | None = None
    parameters: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in CERTIFICATE_KINDS:
            raise CertificateError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class DegreeClass:
    """All host nodes of one degree, with the induced subgraph they span."""

    degree: int
    nodes: tuple[int, ...]
    subgraph: Graph


# -- degree classes ------------------------------------------------------------


def degree_classes(g: Graph) -> tuple[DegreeClass, ...]:
    """Degree classes of g in ascending degree order."""
    profile = g.degrees()
    out = []
    for d in sorted(set(profile.degrees)):
        nodes = tuple(v for v in range(g.n) if profile.degrees[v] == d)
        out.append(DegreeClass(d, nodes, g.induced_subgraph(nodes)))
    return tuple(out)


def max_degree_class(g: Graph) -> DegreeClass:
    """The class of maximum-degree nodes."""
    return degree_classes(g)[-1]


def degree_class_of(g: Graph, nodes: Sequence[int]) -> DegreeClass | None:
    """The degree class containing all of `nodes`, or None if degrees mix."""
    profile = g.degrees()
    ds = {profile.degrees[v] for v in nodes}
    if len(ds) != 1:
        return None
    d = ds.pop()
    for dc in degree_classes(g):
        if dc.degree == d:
            return dc
    return None


# -- bitmask helpers -----------------------------------------------------------


def _mask_connected(bits: Sequence[int], mask: int) -> bool:
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= bits[v] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


def _is_induced_cycle(bits: Sequence[int], members: Sequence[int], mask: int) -> bool:
    for v in members:
        if (bits[v] & mask).bit_count() != 2:
            return False
    return _mask_connected(bits, mask)


def _is_induced_path(bits: Sequence[int], members: Sequence[int], mask: int) -> bool:
    if len(members) == 1:
        return True
    ones = 0
    total = 0
    for v in members:
        d = (bits[v] & mask).bit_count()
        if d > 2:
            return False
        if d == 1:
            ones += 1
        total += d
    if ones != 2 or total != 2 * (len(members) - 1):
        return False
    return _mask_connected(bits, mask)


def _cycle_order(bits: Sequence[int], members: Sequence[int], mask: int) -> tuple[int, ...]:
    """Walk an induced cycle starting at its smallest node, smaller neighbor first."""
    start = min(members)
    nbrs = bits[start] & mask
    first = (nbrs & -nbrs).bit_length() - 1
    order = [start, first]
    prev, cur = start, first
    while True:
        step = bits[cur] & mask & ~(1 << prev)
        nxt = (step & -step).bit_length() - 1
        if nxt == start:
            return tuple(order)
        order.append(nxt)
        prev, cur = cur, nxt


def _path_order(bits: Sequence[int], members: Sequence[int], mask: int) -> tuple[int, ...]:
    """Order an induced path from its smaller endpoint."""
    ends = [v for v in members if (bits[v] & mask).bit_count() == 1]
    order = [min(ends)]
    seen = 1 << order[0]
    while len(order) < len(members):
        step = bits[order[-1]] & mask & ~seen
        nxt = (step & -step).bit_length() - 1
        order.append(nxt)
        seen |= 1 << nxt
    return tuple(order)


def _check_cutoff(g: Graph, max_nodes: int | None, what: str) -> None:
    if max_nodes is not None and g.n > max_nodes:
        raise SearchUndecided(
            f"{what}: host has {g.n} nodes, exhaustive search cutoff is {max_nodes}"
        )


# -- cycle and path searches -----------------------------------------------------


def find_induced_even_cycle(
    g: Graph, max_nodes: int | None = None
) -> SubgraphCertificate | None:
    """Shortest induced even cycle of g, or None when no even one is induced."""
    _check_cutoff(g, max_nodes, "even cycle search")
    bits = g.adjacency_bits
    for size in range(4, g.n + 1, 2):
        for members in combinations(range(g.n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            if _is_induced_cycle(bits, members, mask):
                return SubgraphCertificate(
                    "even_cycle",
                    _cycle_order(bits, members, mask),
                    parameters={"length": size},
                )
    return None


def longest_induced_odd_cycle(
    g: Graph, max_nodes: int | None = None
) -> SubgraphCertificate | None:
    """Longest induced odd cycle of g, or None when every induced cycle is even."""
    _check_cutoff(g, max_nodes, "odd cycle search")
    bits = g.adjacency_bits
    top = g.n if g.n % 2 == 1 else g.n - 1
    for size in range(top, 2, -2):
        for members in combinations(range(g.n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            if _is_induced_cycle(bits, members, mask):
                return SubgraphCertificate(
                    "odd_cycle",
                    _cycle_order(bits, members, mask),
                    parameters={"length": size},
                )
    return None


def longest_induced_path(g: Graph, max_nodes: int | None = None) -> tuple[int, ...]:
    """Node sequence of a longest induced (chordless) path of g.

    Beyond the cutoff this falls back to a budgeted depth-first scan, so the
    result is then only a longest-found path.
    """
    if g.n == 0:
        raise ValueError("induced path search needs a nonempty graph")
    if max_nodes is not None and g.n > max_nodes:
        return _greedy_longest_path(g, induced=True)
    bits = g.adjacency_bits
    for size in range(g.n, 1, -1):
        for members in combinations(range(g.n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            if _is_induced_path(bits, members, mask):
                return _path_order(bits, members, mask)
    return (0,)


def longest_chain(
    g: Graph, max_nodes: int | None = None
) -> SubgraphCertificate:
    """Longest simple path of g as a subgraph; chords are permitted.

    Within the cutoff the search is an exact dynamic program over (node-set,
    endpoint) states.  Beyond it a budgeted depth-first scan runs instead and
    the certificate carries parameters["exhaustive"] = False: the length is
    then only a lower bound.
    """
    if g.n == 0:
        raise ValueError("chain search needs a nonempty graph")
    if max_nodes is not None and g.n > max_nodes:
        seq = _greedy_longest_path(g, induced=False)
        return SubgraphCertificate(
            "chain", seq, parameters={"length": len(seq), "exhaustive": False}
        )
    seq = _exact_longest_chain(g)
    return SubgraphCertificate(
        "chain", seq, parameters={"length": len(seq), "exhaustive": True}
    )


def _exact_longest_chain(g: Graph) -> tuple[int, ...]:
    n = g.n
    bits = g.adjacency_bits
    ends: list[int] = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best_size = 1
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        size = mask.bit_count()
        if size > best_size:
            best_size = size
        m = e
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            ext = bits[v] & ~mask
            while ext:
                w = (ext & -ext).bit_length() - 1
                ext &= ext - 1
                ends[mask | (1 << w)] |= 1 << w
    best_mask = None
    best_nodes: tuple[int, ...] | None = None
    for mask in range(1, 1 << n):
        if ends[mask] and mask.bit_count() == best_size:
            nodes = tuple(v for v in range(n) if mask >> v & 1)
            if best_nodes is None or nodes < best_nodes:
                best_mask, best_nodes = mask, nodes
    assert best_mask is not None
    seq = _recover_chain(bits, ends, best_mask)
    return min(seq, tuple(reversed(seq)))


def _recover_chain(
    bits: Sequence[int], ends: list[int], mask: int
) -> tuple[int, ...]:
    e = ends[mask]
    v = (e & -e).bit_length() - 1
    rev = [v]
    while mask.bit_count() > 1:
        prev_mask = mask & ~(1 << v)
        cand = bits[v] & ends[prev_mask]
        u = (cand & -cand).bit_length() - 1
        rev.append(u)
        mask, v = prev_mask, u
    return tuple(reversed(rev))


def _greedy_longest_path(g: Graph, induced: bool) -> tuple[int, ...]:
    """Budgeted DFS for long (optionally chordless) paths; deterministic."""
    bits = g.adjacency_bits
    best: tuple[int, ...] = (0,)
    budget = GREEDY_BUDGET
    for start in range(g.n):
        stack = [((start,), 1 << start)]
        while stack and budget > 0:
            seq, mask = stack.pop()
            budget -= 1
            if len(seq) > len(best):
                best = seq
            tail = seq[-1]
            ext = bits[tail] & ~mask
            pushed = []
            while ext:
                w = (ext & -ext).bit_length() - 1
                ext &= ext - 1
                if induced and any(
                    bits[w] >> u & 1 for u in seq[:-1]
                ):
                    continue
                pushed.append((seq + (w,), mask | 1 << w))
            stack.extend(reversed(pushed))
        if budget <= 0:
            break
    return best


# -- joins inside a degree class ---------------------------------------------------


def find_join_in_class(
    dc: DegreeClass, max_nodes: int | None = None
) -> SubgraphCertificate | None:
    """Largest join spanned by nodes of one degree class, in host labels.

    A node set S splits into a join (V1, V2) exactly when the complement of
    the class subgraph restricted to S is disconnected, so the search reduces
    to max_disconnected_subgraph on that complement; n1 + n2 = |S| is then
    maximal.  Returns None when the class subgraph has no edge (no join at
    all); V1 is the complement component holding the smallest node of S.
    """
    sub = dc.subgraph
    _check_cutoff(sub, max_nodes, "join search")
    if sub.n < 2 or not sub.edges:
        return None
    comp = sub.complement()
    if comp.is_connected():
        disc = max_disconnected_subgraph(comp)
        if disc is None:  # complement complete would mean an edgeless class
            return None
        members = disc.nodes
    else:
        members = tuple(range(sub.n))
    mask = 0
    for v in members:
        mask |= 1 << v
    cbits = comp.adjacency_bits
    seed = 1 << min(members)
    seen = seed
    frontier = seed
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= cbits[v] & mask
        frontier = nxt & ~seen
        seen |= frontier
    v1 = tuple(v for v in members if seen >> v & 1)
    v2 = tuple(v for v in members if not seen >> v & 1)
    join_sub = sub.induced_subgraph(members)
    host_v1 = tuple(dc.nodes[v] for v in v1)
    host_v2 = tuple(dc.nodes[v] for v in v2)
    return SubgraphCertificate(
        "join",
        tuple(sorted(host_v1 + host_v2)),
        parts=(host_v1, host_v2),
        parameters={
            "n1": len(v1),
            "n2": len(v2),
            "d_max_join": join_sub.degrees().d_max,
            "lambda_max_join": float(len(members)),
        },
    )


# -- connectivity extremes ----------------------------------------------------------


def vertex_connectivity(g: Graph, max_nodes: int | None = None) -> int:
    """Smallest number of node removals that disconnect g.

    Exhaustive over removal sets in increasing size; complete graphs return
    n - 1 by convention.  Requires a connected host.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("vertex connectivity needs a connected graph")
    _check_cutoff(g, max_nodes, "vertex connectivity")
    if g.is_complete():
        return g.n - 1
    bits = g.adjacency_bits
    full = (1 << g.n) - 1
    for k in range(1, g.n - 1):
        for removal in combinations(range(g.n), k):
            mask = full
            for v in removal:
                mask &= ~(1 << v)
            if not _mask_connected(bits, mask):
                return k
    raise RuntimeError("unreachable: non-complete graph has a separating set")


def max_disconnected_subgraph(
    g: Graph, max_nodes: int | None = None
) -> SubgraphCertificate | None:
    """Largest node set inducing a disconnected subgraph, or None for complete g.

    The maximum size always comes out as n - vertex_connectivity(g), which is
    asserted.  Ties go to the lexicographically smallest node set.
    """
    if not g.is_connected():
        raise DisconnectedGraphError(
            "max disconnected subgraph needs a connected host"
        )
    _check_cutoff(g, max_nodes, "disconnected subgraph search")
    if g.is_complete():
        return None
    bits = g.adjacency_bits
    for size in range(g.n - 1, 1, -1):
        for members in combinations(range(g.n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            if not _mask_connected(bits, mask):
                kappa = vertex_connectivity(g)
                if size != g.n - kappa:
                    raise RuntimeError(
                        f"disconnected set of size {size} contradicts "
                        f"vertex connectivity {kappa}"
                    )
                return SubgraphCertificate(
                    "disconnected_set", members, parameters={"size": size}
                )
    raise RuntimeError("unreachable: non-complete graph has a disconnected subset")


# -- certificate verification ----------------------------------------------------


def relabel_certificate(
    cert: SubgraphCertificate, mapping: Sequence[int]
) -> SubgraphCertificate:
    """Map a certificate through node relabeling (index -> mapping[index])."""
    new = replace(
        cert,
        nodes=tuple(mapping[v] for v in cert.nodes),
        parts=(
            tuple(tuple(mapping[v] for v in part) for part in cert.parts)
            if cert.parts is not None
            else None
        ),
        embedding=(
            tuple(mapping[v] for v in cert.embedding)
            if cert.embedding is not None
            else None
        ),
    )
    return new


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CertificateError(msg)


def _check_nodes_in_range(g: Graph, nodes: Sequence[int]) -> None:
    for v in nodes:
        _require(0 <= v < g.n, f"node {v} outside host range 0..{g.n - 1}")
    _require(len(set(nodes)) == len(nodes), "certificate nodes are not distinct")


def verify_cycle_certificate(g: Graph, cert: SubgraphCertificate) -> None:
    """Check an induced-cycle witness: consecutive edges, closure, no chords."""
    seq = cert.nodes
    _require(len(seq) >= 3, f"cycle needs at least 3 nodes, got {len(seq)}")
    _check_nodes_in_range(g, seq)
    want_even = cert.kind == "even_cycle"
    _require(
        (len(seq) % 2 == 0) == want_even,
        f"{cert.kind} certificate has {len(seq)} nodes",
    )
    k = len(seq)
    ring = {
        (min(seq[i], seq[(i + 1) % k]), max(seq[i], seq[(i + 1) % k]))
        for i in range(k)
    }
    for e in ring:
        _require(e in g.edges, f"cycle edge {e} missing from host")
    for u, v in combinations(sorted(seq), 2):
        if (u, v) in g.edges:
            _require((u, v) in ring, f"chord ({u}, {v}) breaks inducedness")


def verify_chain_certificate(g: Graph, cert: SubgraphCertificate) -> None:
    """Check a chain witness: a simple path as a subgraph (chords allowed)."""
    seq = cert.nodes
    _require(len(seq) >= 1, "chain certificate is empty")
    _check_nodes_in_range(g, seq)
    for a, b in zip(seq, seq[1:]):
        _require(g.has_edge(a, b), f"chain edge ({a}, {b}) missing from host")


def verify_join_certificate(g: Graph, cert: SubgraphCertificate) -> None:
    """Check a join witness: disjoint nonempty parts with every cross edge."""
    _require(cert.parts is not None, "join certificate needs parts")
    v1, v2 = cert.parts
    _require(len(v1) >= 1 and len(v2) >= 1, "join parts must be nonempty")
    _check_nodes_in_range(g, tuple(v1) + tuple(v2))
    for a in v1:
        for b in v2:
            _require(g.has_edge(a, b), f"join cross edge ({a}, {b}) missing")


def verify_disconnected_certificate(g: Graph, cert: SubgraphCertificate) -> None:
    """Check a disconnected-set witness: the induced subgraph splits."""
    _require(len(cert.nodes) >= 2, "disconnected set needs at least 2 nodes")
    _check_nodes_in_range(g, cert.nodes)
    _require(
        not g.induced_subgraph(cert.nodes).is_connected(),
        "induced subgraph on the certificate nodes is connected",
    )


def verify_product_certificate(
    g: Graph,
    factor_a: Graph,
    factor_b: Graph,
    embedding: Sequence[int],
) -> SubgraphCertificate:
    """Check a product witness: every factor-product edge maps to a host edge.

    The embedding sends factor node (i, j) to embedding[i * factor_b.n + j].
    Host edges beyond the product's are tolerated (subgraph semantics); the
    returned certificate records whether the embedded node set is induced,
    since some consumers need that stronger property.
    """
    na, nb = factor_a.n, factor_b.n
    _require(na >= 1 and nb >= 1, "product factors must be nonempty")
    _require(
        len(embedding) == na * nb,
        f"embedding length {len(embedding)} != {na} * {nb}",
    )
    _require(
        len(set(embedding)) == len(embedding), "embedding is not injective"
    )
    _check_nodes_in_range(g, tuple(embedding))
    product_edges: set[tuple[int, int]] = set()
    for i in range(na):
        for u, v in factor_b.edges:
            product_edges.add((i * nb + u, i * nb + v))
    for u, v in factor_a.edges:
        for j in range(nb):
            a, b = u * nb + j, v * nb + j
            product_edges.add((min(a, b), max(a, b)))
    for u, v in product_edges:
        _require(
            g.has_edge(embedding[u], embedding[v]),
            f"product edge ({u}, {v}) maps to missing host edge "
            f"({embedding[u]}, {embedding[v]})",
        )
    mapped = set(embedding)
    extra = 0
    for a, b in g.edges:
        if a in mapped and b in mapped:
            extra += 1
    induced = extra == len(product_edges)
    prod_dmax = max(
        sum(1 for u, v in product_edges if w in (u, v)) for w in range(na * nb)
    )
    return SubgraphCertificate(
        "product",
        tuple(sorted(embedding)),
        factors=(factor_a, factor_b),
        embedding=tuple(embedding),
        parameters={
            "n_a": na,
            "n_b": nb,
            "d_max_product": prod_dmax,
            "induced": induced,
        },
    )


def verify_certificate(g: Graph, cert: SubgraphCertificate) -> SubgraphCertificate:
    """Verify any certificate kind against its host; returns the certificate
    (re-derived for products so the parameters are trustworthy)."""
    if cert.kind in ("even_cycle", "odd_cycle"):
        verify_cycle_certificate(g, cert)
    elif cert.kind == "chain":
        verify_chain_certificate(g, cert)
    elif cert.kind == "join":
        verify_join_certificate(g, cert)
    elif cert.kind == "disconnected_set":
        verify_disconnected_certificate(g, cert)
    elif cert.kind == "product":
        _require(
            cert.factors is not None and cert.embedding is not None,
            "product certificate needs factors and an embedding",
        )
        return verify_product_certificate(
            g, cert.factors[0], cert.factors[1], cert.embedding
        )
    else:  # pragma: no cover - guarded by __post_init__
        raise CertificateError(f"unknown certificate kind {cert.kind!r}")
    return cert
