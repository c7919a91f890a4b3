"""Deterministic graph constructors used by tests, demos, and the CLI.

Every random family is driven by a single seed through ``random.Random``
(the stdlib Mersenne Twister), so identical (family, parameters, seed)
invocations are byte-reproducible within this implementation.
"""

from __future__ import annotations

import random

from .errors import UnsupportedGraphError
from .graphs import Graph, is_connected


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the u side on ids 0..a-1 and the v side on ids a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def prism_graph() -> Graph:
    # Two triangles {0,1,2} and {3,4,5} joined by a perfect matching.
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                                (0, 3), (1, 4), (2, 5)])


def cube_graph() -> Graph:
    # Vertices are 3-bit ids; edges join ids differing in exactly one bit.
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w))
    return Graph.from_edges(8, edges)


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((i, i + 5))              # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph.from_edges(10, edges)


NAMED_GRAPHS = {
    "k4": lambda: complete_graph(4),
    "k33": lambda: complete_bipartite(3, 3),
    "petersen": petersen_graph,
    "prism": prism_graph,
    "cube": cube_graph,
}


def named_graph(name: str) -> Graph:
    key = name.lower()
    if key not in NAMED_GRAPHS:
        known = ", ".join(sorted(NAMED_GRAPHS))
        raise UnsupportedGraphError(f"unknown named graph {name!r} (known: {known})")
    return NAMED_GRAPHS[key]()


def random_2degenerate(n: int, seed: int) -> Graph:
    """Connected 2-degenerate graph grown from a triangle.

    Each new vertex attaches to 1 or 2 uniformly chosen existing vertices, so
    the reverse insertion order is an elimination order with degrees <= 2 and
    the result is connected and 2-degenerate by construction.
    """
    if n < 3:
        raise ValueError("generator needs n >= 3")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        count = rng.randint(1, 2)
        for u in rng.sample(range(v), count):
            edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_cubic(n: int, seed: int, max_tries: int = 2000) -> Graph:
    """Connected 3-regular graph on n vertices via the pairing model.

    Retries the pairing until it is simple and connected; the retry stream is
    part of the seeded determinism.  n must be even and at least 4.
    """
    if n < 4 or n % 2:
        raise ValueError("a cubic graph needs an even vertex count >= 4")
    rng = random.Random(seed)
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = {(min(a, b), max(a, b))
                 for a, b in zip(stubs[::2], stubs[1::2])}
        if any(a == b for a, b in pairs) or len(pairs) != 3 * n // 2:
            continue
        g = Graph(n, tuple(sorted(pairs)))
        if is_connected(g):
            return g
    raise RuntimeError(f"no simple connected pairing found in {max_tries} tries")
