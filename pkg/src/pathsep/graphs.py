"""Undirected simple graphs and the structural queries the builders rely on.

Vertices are dense 0-based integers.  All operations are pure functions of
immutable inputs; tie-breaking is always by smallest vertex id (then
lexicographic on edge pairs) so that every derived object is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphFormatError, UnsupportedGraphError

Edge = tuple[int, int]

DEGREE1_SAFE = "degree1-safe"
DEGREE2_SAFE = "degree2-safe"
DEGREE2_CUT = "degree2-cut"

ISOLATED_VERTEX = "isolated-vertex"
SINGLE_EDGE = "single-edge"
K4 = "K4"
CUBIC_NON_K4 = "cubic-non-K4"
SUBCUBIC_2DEGENERATE = "subcubic-2degenerate"
GENERAL_2DEGENERATE = "general-2degenerate"
OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is a lexicographically sorted tuple of pairs (u, v) with u < v;
    isolated vertices are permitted.  Construct through :meth:`from_edges`
    unless the edge tuple is already normalized.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and duplicate-free")
            prev = (u, v)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        return Graph(n, tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def without_edge(self, edge: tuple[int, int]) -> "Graph":
        u, v = edge if edge[0] < edge[1] else (edge[1], edge[0])
        if (u, v) not in self.edge_set:
            raise ValueError(f"edge ({u}, {v}) not present")
        return Graph(self.n, tuple(e for e in self.edges if e != (u, v)))


def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Parsing and serialization.
#
# Graph file format (text): first non-comment line "n m"; then m lines "u v"
# with 0 <= u, v < n and u != v; '#' starts a comment to end of line; blank
# lines are ignored.  Duplicate edge lines collapse to one edge.
# ---------------------------------------------------------------------------

def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _two_ints(line: str, lineno: int, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected '{what}', got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected '{what}', got {line!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse the text graph format, rejecting malformed input with line numbers."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty graph file") from None
    n, m = _two_ints(header, lineno, "n m")
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative counts in header")
    edges: set[Edge] = set()
    count = 0
    for lineno, line in lines:
        if count == m:
            raise GraphFormatError(f"line {lineno}: unexpected extra edge line (declared m={m})")
        u, v = _two_ints(line, lineno, "u v")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range (n={n})")
        edges.add(normalize_edge(u, v))
        count += 1
    if count < m:
        raise GraphFormatError(f"expected {m} edge lines, found {count}")
    return Graph(n, tuple(sorted(edges)))


def parse_graph_loose(text: str) -> tuple[Graph, dict[int, int]]:
    """Parse while accepting arbitrary non-negative vertex ids.

    Ids are relabeled densely in ascending order; the returned mapping sends
    each original id to its new id.  The declared vertex count is ignored
    except as a lower bound on the result size.
    """
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty graph file") from None
    declared_n, m = _two_ints(header, lineno, "n m")
    raw_edges: list[tuple[int, int]] = []
    for lineno, line in lines:
        u, v = _two_ints(line, lineno, "u v")
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        raw_edges.append((u, v))
    ids = sorted({x for e in raw_edges for x in e})
    mapping = {old: new for new, old in enumerate(ids)}
    n = max(len(ids), declared_n)
    edges = {normalize_edge(mapping[u], mapping[v]) for u, v in raw_edges}
    return Graph(n, tuple(sorted(edges))), mapping


def serialize_graph(g: Graph) -> str:
    """Emit the text format with edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))


# ---------------------------------------------------------------------------
# Connectivity and components.
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    """Partition of {0..n-1} into components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph relabeled to 0..k-1; returns it with the old-id table.

    ``old_ids[new]`` recovers the original vertex for a new id.
    """
    old_ids = tuple(sorted(set(vertices)))
    index = {old: new for new, old in enumerate(old_ids)}
    keep = set(old_ids)
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in keep and v in keep
    ]
    return Graph(len(old_ids), tuple(sorted(edges))), old_ids


# ---------------------------------------------------------------------------
# Degeneracy.
# ---------------------------------------------------------------------------

def is_2_degenerate(g: Graph) -> tuple[bool, list[int] | None]:
    """Peel minimum-degree vertices; fail as soon as the minimum reaches 3.

    Returns (True, elimination_order) or (False, None).  Ties are broken by
    smallest vertex id, so the witness order is canonical.
    """
    degree = list(g.degrees)
    alive = [True] * g.n
    adj = [set(a) for a in g.adjacency]
    order: list[int] = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if alive[v] and (best < 0 or degree[v] < degree[best]):
                best = v
        if degree[best] > 2:
            return False, None
        alive[best] = False
        order.append(best)
        for w in adj[best]:
            adj[w].discard(best)
            degree[w] -= 1
    return True, order


@dataclass(frozen=True)
class RemovalStep:
    """One peeling step: the vertex, its case tag, and its neighbors at removal.

    ``split`` is populated only for cut steps and records the two components
    the removal produced, each sorted.
    """

    vertex: int
    kind: str
    neighbors: tuple[int, ...]
    split: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass(frozen=True)
class VertexRemovalPlan:
    order: tuple[RemovalStep, ...]

    def vertices(self) -> tuple[int, ...]:
        return tuple(step.vertex for step in self.order)


class _Peeler:
    """Mutable view of a graph being peeled; tracks live vertices only."""

    def __init__(self, g: Graph):
        self.adj = [set(a) for a in g.adjacency]
        self.alive = [True] * g.n
        self.n_alive = g.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def component_of(self, v: int) -> list[int]:
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def remove(self, v: int) -> None:
        for w in self.adj[v]:
            self.adj[w].discard(v)
        self.adj[v] = set()
        self.alive[v] = False
        self.n_alive -= 1

    def stays_connected_without(self, v: int, component: list[int]) -> bool:
        rest = [x for x in component if x != v]
        if not rest:
            return True
        seen = {rest[0], v}
        queue = deque([rest[0]])
        reached = 1
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    reached += 1
                    queue.append(y)
        return reached == len(rest)


def removal_plan_2degenerate(g: Graph) -> VertexRemovalPlan:
    """Peeling plan for a connected 2-degenerate graph down to 3-vertex cores.

    Each step removes a vertex of current degree at most 2, preferring, in
    order: a degree-1 vertex (always safe), a degree-2 vertex whose removal
    keeps its component connected, and only then a degree-2 cut vertex.  Cut
    steps are asserted to split their component into exactly two parts of at
    least 3 vertices each; the minimum-degree-2 situation forces this.
    """
    if g.n < 4:
        raise UnsupportedGraphError("removal plan requires at least 4 vertices")
    if not is_connected(g):
        raise UnsupportedGraphError("removal plan requires a connected graph")
    ok, _ = is_2_degenerate(g)
    if not ok:
        raise UnsupportedGraphError("graph is not 2-degenerate")

    peeler = _Peeler(g)
    steps: list[RemovalStep] = []
    # Components with more than 3 vertices still need peeling; sizes only
    # change one vertex at a time, so recomputing them per step is fine at
    # desk scale.
    while True:
        comps = []
        seen: set[int] = set()
        for v in range(g.n):
            if peeler.alive[v] and v not in seen:
                comp = peeler.component_of(v)
                seen.update(comp)
                if len(comp) > 3:
                    comps.append(comp)
        if not comps:
            break
        in_large = {v: comp for comp in comps for v in comp}

        step = None
        deg1 = [v for v in in_large if peeler.degree(v) == 1]
        if deg1:
            v = min(deg1)
            step = RemovalStep(v, DEGREE1_SAFE, tuple(sorted(peeler.adj[v])))
        else:
            deg2 = sorted(v for v in in_large if peeler.degree(v) == 2)
            for v in deg2:
                if peeler.stays_connected_without(v, in_large[v]):
                    step = RemovalStep(v, DEGREE2_SAFE, tuple(sorted(peeler.adj[v])))
                    break
            if step is None:
                if not deg2:
                    raise AssertionError("no degree-<=2 vertex in a 2-degenerate graph")
                v = deg2[0]
                nbrs = tuple(sorted(peeler.adj[v]))
                peeler.remove(v)
                sides = tuple(sorted(
                    (tuple(peeler.component_of(w)) for w in nbrs),
                    key=lambda c: c[0],
                ))
                if len(sides) != 2 or sides[0] == sides[1]:
                    raise AssertionError("cut step did not produce two components")
                if min(len(s) for s in sides) < 3:
                    raise AssertionError("cut step produced a component smaller than 3")
                steps.append(RemovalStep(v, DEGREE2_CUT, nbrs, (sides[0], sides[1])))
                continue
        peeler.remove(step.vertex)
        steps.append(step)
    return VertexRemovalPlan(tuple(steps))


def replay_removal_plan(g: Graph, plan: VertexRemovalPlan) -> list[list[int]]:
    """Replay a plan, checking every recorded invariant; returns final components.

    Raises AssertionError on any violation: degree above 2 at a step, a safe
    step that disconnects its component, or a cut step that does not produce
    exactly two components of size at least 3.
    """
    peeler = _Peeler(g)
    for step in plan.order:
        v = step.vertex
        assert peeler.alive[v], f"vertex {v} removed twice"
        assert peeler.degree(v) <= 2, f"vertex {v} has degree {peeler.degree(v)} at its step"
        assert tuple(sorted(peeler.adj[v])) == step.neighbors, f"stale neighbors for {v}"
        comp = peeler.component_of(v)
        peeler.remove(v)
        if step.kind in (DEGREE1_SAFE, DEGREE2_SAFE):
            rest = [x for x in comp if x != v]
            if rest:
                reachable = set(peeler.component_of(rest[0]))
                assert set(rest) <= reachable, f"safe step at {v} disconnected its component"
        else:
            assert step.kind == DEGREE2_CUT
            sides = {tuple(peeler.component_of(w)) for w in step.neighbors}
            assert len(sides) == 2, f"cut step at {v} produced {len(sides)} components"
            assert all(len(s) >= 3 for s in sides), f"cut step at {v} produced a tiny side"
            assert step.split is not None and set(step.split) == sides
    remaining = [v for v in range(g.n) if peeler.alive[v]]
    comps: list[list[int]] = []
    seen: set[int] = set()
    for v in remaining:
        if v not in seen:
            comp = peeler.component_of(v)
            seen.update(comp)
            comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# Triangle membership and component classification.
# ---------------------------------------------------------------------------

def find_non_triangle_edge(g: Graph) -> Edge | None:
    """First edge (lexicographically) whose endpoints share no neighbor."""
    adj_sets = [set(a) for a in g.adjacency]
    for u, v in g.edges:
        if not (adj_sets[u] & adj_sets[v]):
            return (u, v)
    return None


def classify_component(g: Graph, comp: Iterable[int]) -> str:
    """Label a connected component for builder dispatch."""
    vertices = sorted(set(comp))
    if len(vertices) == 1:
        return ISOLATED_VERTEX
    if len(vertices) == 2:
        return SINGLE_EDGE
    sub, _ = induced_subgraph(g, vertices)
    degs = sub.degrees
    if all(d == 3 for d in degs):
        if sub.n == 4:
            return K4
        return CUBIC_NON_K4
    ok, _ = is_2_degenerate(sub)
    if ok:
        if max(degs) <= 3:
            return SUBCUBIC_2DEGENERATE
        return GENERAL_2DEGENERATE
    return OTHER
