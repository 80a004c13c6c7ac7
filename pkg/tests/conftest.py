"""Shared graph builders and hypothesis strategies for the test suite."""

import random

from hypothesis import strategies as st

import syncbound as sb


def erdos_renyi(rng: random.Random, n: int, p: float) -> sb.Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return sb.from_edge_list(n, edges)


def connected_erdos_renyi(rng: random.Random, n: int, p: float) -> sb.Graph:
    for _ in range(100_000):
        g = erdos_renyi(rng, n, p)
        if g.is_connected():
            return g
    raise AssertionError(f"no connected sample at n={n}, p={p}")


@st.composite
def graphs(draw, max_nodes: int = 8, connected: bool = False) -> sb.Graph:
    n = draw(st.integers(2 if connected else 1, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen: set[tuple[int, int]] = set()
    if pairs:
        chosen.update(
            draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        )
    if connected and n > 1:
        # overlay a random spanning path so the sample is always connected
        order = draw(st.permutations(list(range(n))))
        chosen.update(
            (min(a, b), max(a, b)) for a, b in zip(order, order[1:])
        )
    return sb.from_edge_list(n, sorted(chosen))
