"""Inductive path-system construction for connected 2-degenerate graphs.

The construction peels the graph down to 3-vertex cores (a 2-edge path or a
triangle), seeds each core with a fixed 3-path system, and replays the
peeling in reverse.  Re-adding a vertex v:

  * degree 1, neighbor u: one path ending at u is extended to v and the
    1-edge path (u, v) is added;
  * degree 2, neighbors u and w: two distinct paths ending at u and w are
    extended to v and the path (u, v, w) is added.  When the removal had cut
    the component in two, the same move stitches the two sub-systems
    together.

Each step keeps two invariants: every edge lies in exactly two paths, and
every vertex is an endpoint of exactly two paths.  The second one is what
guarantees the paths the next step needs always exist.

The result always has exactly n paths for an n-vertex input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import UnsupportedGraphError
from .graphs import (
    DEGREE1_SAFE, DEGREE2_CUT, DEGREE2_SAFE,
    Graph, connected_components, induced_subgraph,
    is_2_degenerate, is_connected, normalize_edge, removal_plan_2degenerate,
)
from .systems import Path, PathSystem

BASE_PATH = "path-of-2-edges"
BASE_TRIANGLE = "triangle"

DEG1_EXTEND = "deg1-extend"
DEG2_EXTEND = "deg2-extend"
DEG2_JOIN = "deg2-join"

_CASE_FOR_KIND = {
    DEGREE1_SAFE: DEG1_EXTEND,
    DEGREE2_SAFE: DEG2_EXTEND,
    DEGREE2_CUT: DEG2_JOIN,
}


@dataclass(frozen=True)
class BaseCase:
    component: tuple[int, ...]  # the 3 vertices, sorted
    shape: str                  # BASE_PATH or BASE_TRIANGLE


@dataclass(frozen=True)
class TraceStep:
    vertex: int
    case: str
    attach: tuple[int, ...]          # neighbors used by the step (1 or 2)
    paths_modified: tuple[int, ...]  # indices of extended paths
    paths_added: tuple[int, ...]     # indices of appended paths


@dataclass(frozen=True)
class ConstructionTrace:
    """Replayable record of a build: seed systems plus one step per vertex."""

    base_cases: tuple[BaseCase, ...]
    steps: tuple[TraceStep, ...]

    def to_json(self) -> str:
        return json.dumps({
            "base_cases": [
                {"component": list(b.component), "shape": b.shape}
                for b in self.base_cases
            ],
            "steps": [
                {
                    "vertex-added": s.vertex,
                    "case-tag": s.case,
                    "attach": list(s.attach),
                    "paths-modified": list(s.paths_modified),
                    "paths-added": list(s.paths_added),
                }
                for s in self.steps
            ],
        })

    @staticmethod
    def from_json(text: str) -> "ConstructionTrace":
        obj = json.loads(text)
        bases = tuple(
            BaseCase(tuple(b["component"]), b["shape"]) for b in obj["base_cases"])
        steps = tuple(
            TraceStep(
                s["vertex-added"], s["case-tag"], tuple(s["attach"]),
                tuple(s["paths-modified"]), tuple(s["paths-added"]))
            for s in obj["steps"])
        return ConstructionTrace(bases, steps)


def _base_case(g: Graph, comp: tuple[int, ...]) -> tuple[BaseCase, list[tuple[int, ...]]]:
    """Seed system for a 3-vertex component of g (its induced subgraph)."""
    x, y, z = comp
    present = [e for e in ((x, y), (x, z), (y, z)) if g.has_edge(*e)]
    if len(present) == 3:
        paths = [(x, y, z), (y, z, x), (z, x, y)]
        return BaseCase(comp, BASE_TRIANGLE), paths
    if len(present) != 2:
        raise AssertionError(f"3-vertex core {comp} is not connected")
    counts = {v: 0 for v in comp}
    for u, v in present:
        counts[u] += 1
        counts[v] += 1
    mid = next(v for v in comp if counts[v] == 2)
    a, b = sorted(v for v in comp if v != mid)
    paths = [(a, mid, b), (a, mid), (mid, b)]
    return BaseCase(comp, BASE_PATH), paths


def _ends_at(paths: list[tuple[int, ...]], v: int) -> list[int]:
    return [i for i, p in enumerate(paths) if p[0] == v or p[-1] == v]


def _extend(path: tuple[int, ...], end: int, new: int) -> tuple[int, ...]:
    if path[-1] == end:
        return path + (new,)
    if path[0] == end:
        return (new,) + path
    raise AssertionError(f"path {path} does not end at {end}")


def _apply_step(paths: list[tuple[int, ...]], vertex: int,
                attach: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Mutate ``paths`` for one re-insertion; returns (modified, added) indices."""
    if len(attach) == 1:
        u = attach[0]
        ends_u = _ends_at(paths, u)
        if not ends_u:
            raise AssertionError(f"no path ends at {u}; endpoint invariant broken")
        i = ends_u[0]
        paths[i] = _extend(paths[i], u, vertex)
        paths.append((u, vertex))
        return (i,), (len(paths) - 1,)
    u, w = attach
    ends_u = _ends_at(paths, u)
    if not ends_u:
        raise AssertionError(f"no path ends at {u}; endpoint invariant broken")
    i = ends_u[0]
    ends_w = [j for j in _ends_at(paths, w) if j != i]
    if not ends_w:
        raise AssertionError(f"no second path ends at {w}; endpoint invariant broken")
    j = ends_w[0]
    paths[i] = _extend(paths[i], u, vertex)
    paths[j] = _extend(paths[j], w, vertex)
    paths.append((u, vertex, w))
    return (i, j), (len(paths) - 1,)


def build_ssp_2degenerate(g: Graph) -> tuple[PathSystem, ConstructionTrace]:
    """Strongly separating system with exactly n paths for a connected
    2-degenerate graph on n >= 3 vertices, plus its construction trace."""
    if g.n < 3:
        raise UnsupportedGraphError("construction needs at least 3 vertices")
    if not is_connected(g):
        raise UnsupportedGraphError("construction needs a connected graph")
    ok, _ = is_2_degenerate(g)
    if not ok:
        raise UnsupportedGraphError("graph is not 2-degenerate")

    if g.n == 3:
        base, seed_paths = _base_case(g, (0, 1, 2))
        system = PathSystem(g, tuple(Path(p) for p in seed_paths))
        return system, ConstructionTrace((base,), ())

    plan = removal_plan_2degenerate(g)
    removed = set(plan.vertices())
    core_vertices = [v for v in range(g.n) if v not in removed]

    # Base components, ordered by smallest contained vertex.
    comps: list[tuple[int, ...]] = []
    seen: set[int] = set()
    adj = g.adjacency
    core_set = set(core_vertices)
    for v in core_vertices:
        if v in seen:
            continue
        stack, comp = [v], {v}
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in core_set and y not in comp:
                    comp.add(y)
                    stack.append(y)
        comp_t = tuple(sorted(comp))
        if len(comp_t) != 3:
            raise AssertionError(f"core component {comp_t} does not have 3 vertices")
        seen.update(comp_t)
        comps.append(comp_t)
    comps.sort(key=lambda c: c[0])

    paths: list[tuple[int, ...]] = []
    bases: list[BaseCase] = []
    for comp in comps:
        base, seed_paths = _base_case(g, comp)
        bases.append(base)
        paths.extend(seed_paths)

    steps: list[TraceStep] = []
    for removal in reversed(plan.order):
        case = _CASE_FOR_KIND[removal.kind]
        modified, added = _apply_step(paths, removal.vertex, removal.neighbors)
        steps.append(TraceStep(removal.vertex, case, removal.neighbors, modified, added))

    if len(paths) != g.n:
        raise AssertionError(f"built {len(paths)} paths for n={g.n}")
    system = PathSystem(g, tuple(Path(p) for p in paths))
    return system, ConstructionTrace(tuple(bases), tuple(steps))


def replay_trace(g: Graph, trace: ConstructionTrace, check: bool = False) -> PathSystem:
    """Rebuild a system from its trace; with ``check`` set, assert the local
    separation facts of every degree-2 step along the way."""
    paths: list[tuple[int, ...]] = []
    for base in trace.base_cases:
        recorded, seed_paths = _base_case(g, base.component)
        if recorded.shape != base.shape:
            raise AssertionError(f"base case {base.component} is {recorded.shape}, "
                                 f"trace says {base.shape}")
        paths.extend(seed_paths)
    for step in trace.steps:
        modified, added = _apply_step(paths, step.vertex, step.attach)
        if (modified, added) != (step.paths_modified, step.paths_added):
            raise AssertionError(f"replay diverged at vertex {step.vertex}")
        if check and len(step.attach) == 2:
            u, w = step.attach
            v = step.vertex
            i, j = modified
            uv, vw = normalize_edge(u, v), normalize_edge(v, w)
            p1 = set(_path_edges(paths[i]))
            p2 = set(_path_edges(paths[j]))
            mid = set(_path_edges(paths[added[0]]))
            assert uv in p1 and vw not in p1, "extended path must hit uv and avoid vw"
            assert vw in p2 and uv not in p2, "extended path must hit vw and avoid uv"
            assert mid == {uv, vw}, "the added 2-edge path must carry exactly uv and vw"
    return PathSystem(g, tuple(Path(p) for p in paths))


def _path_edges(vertices: tuple[int, ...]):
    return (normalize_edge(vertices[k], vertices[k + 1]) for k in range(len(vertices) - 1))


# ---------------------------------------------------------------------------
# Cubic graph minus a non-triangle edge.
# ---------------------------------------------------------------------------

def build_ssp_cubic_minus_edge(g: Graph, e: tuple[int, int]) -> PathSystem:
    """System with n paths for H = g - e, where g is connected cubic (not K4)
    and e = uv lies in no triangle.

    Removing u and v leaves 2-degenerate components of size >= 3; each gets
    the inductive system.  Four pairwise distinct paths ending at the four
    neighbors u1, u2, v1, v2 are extended to u and v, and the two 2-edge
    paths (u1, u, u2) and (v1, v, v2) are appended.
    """
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise UnsupportedGraphError(f"edge ({u}, {v}) not in graph")
    if any(d != 3 for d in g.degrees):
        raise UnsupportedGraphError("graph is not cubic")
    if not is_connected(g):
        raise UnsupportedGraphError("graph is not connected")
    if g.n == 4:
        raise UnsupportedGraphError("K4 has no edge outside a triangle")
    u_nbrs = tuple(x for x in g.adjacency[u] if x != v)
    v_nbrs = tuple(x for x in g.adjacency[v] if x != u)
    if set(u_nbrs) & set(v_nbrs):
        raise UnsupportedGraphError(f"edge ({u}, {v}) lies in a triangle")

    h = g.without_edge((u, v))
    rest = [x for x in range(g.n) if x not in (u, v)]
    inner, _ = induced_subgraph(g, rest)
    paths: list[tuple[int, ...]] = []
    for comp in connected_components(inner):
        if len(comp) < 3:
            raise AssertionError("component of the reduced graph has fewer than 3 vertices")
        sub, old_ids = induced_subgraph(inner, comp)
        # Map twice: component ids -> inner ids -> original ids.
        inner_ids = tuple(rest[i] for i in old_ids)
        sub_system, _ = build_ssp_2degenerate(sub)
        for path in sub_system.paths:
            paths.append(tuple(inner_ids[x] for x in path.vertices))

    u1, u2 = u_nbrs
    v1, v2 = v_nbrs
    assignment = _distinct_end_paths(paths, (u1, u2, v1, v2))
    for end_vertex, idx, new_vertex in (
        (u1, assignment[0], u),
        (u2, assignment[1], u),
        (v1, assignment[2], v),
        (v2, assignment[3], v),
    ):
        paths[idx] = _extend(paths[idx], end_vertex, new_vertex)
    paths.append((u1, u, u2))
    paths.append((v1, v, v2))

    if len(paths) != g.n:
        raise AssertionError(f"built {len(paths)} paths for n={g.n}")
    return PathSystem(h, tuple(Path(p) for p in paths))


def _distinct_end_paths(paths: list[tuple[int, ...]], ends: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least assignment of pairwise distinct path indices,
    the k-th ending at ends[k].

    Each vertex has exactly two paths ending at it and every path has two
    ends, so a system of distinct representatives always exists; plain greedy
    can dead-end, hence the tiny backtracking search (at most 2^4 leaves).
    """
    candidates = [_ends_at(paths, x) for x in ends]
    for cand in candidates:
        if not cand:
            raise AssertionError("endpoint invariant broken: no path ends at a needed vertex")

    chosen: list[int] = []

    def search(k: int) -> bool:
        if k == len(candidates):
            return True
        for idx in candidates[k]:
            if idx not in chosen:
                chosen.append(idx)
                if search(k + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        raise AssertionError("no distinct path assignment exists; endpoint invariant broken")
    return tuple(chosen)
