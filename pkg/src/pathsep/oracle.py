"""Exact minimum strongly-separating path system sizes for small graphs.

The search enumerates every simple path once (canonical orientation), then
runs iterative deepening on the system size p starting from the larger of
two lower bounds:

  * the maximum degree (each path covers at most 2 edges at a vertex, and a
    counting argument over singleton incidence sets pushes this to p >= max
    degree);
  * the antichain bound: m pairwise incomparable subsets of [p] need
    C(p, floor(p/2)) >= m.

Within one depth, subsets of candidate paths are explored in lexicographic
index order with pruning that never discards a feasible completion, so the
first system found is the lexicographically least witness at the minimum:

  * a pair of edges whose incidence sets are currently nested must still have
    an available candidate containing one and avoiding the other (adding
    paths can only fix nesting, never create it, so resolved pairs stay
    resolved);
  * an uncovered edge must still have an available candidate covering it;
  * at most 2r of the uncovered edges at any one vertex can be covered by r
    more paths;
  * the total incidence sum needed by any feasible antichain size profile
    (a small DP over the normalized matching bound) must still be reachable.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

from .errors import LimitExceededError, UnsupportedGraphError
from .graphs import Graph, max_degree
from .systems import Path, PathSystem


@dataclass(frozen=True)
class OracleConfig:
    max_vertices: int = 10
    max_edges: int = 16
    max_path_budget: int = 12
    time_budget: float | None = None
    symmetry_breaking: bool = False

    def __post_init__(self) -> None:
        if self.max_vertices <= 0 or self.max_edges <= 0 or self.max_path_budget <= 0:
            raise ValueError("oracle limits must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


DEFAULT_CONFIG = OracleConfig()


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exact search.

    ``value``/``witness`` are set when the search was conclusive; otherwise
    the best known interval [lower, upper] is reported (the all-singletons
    system shows the minimum never exceeds the edge count).
    """

    value: int | None
    witness: PathSystem | None
    lower: int
    upper: int
    conclusive: bool
    nodes: int
    elapsed: float


def _check_limits(g: Graph, cfg: OracleConfig) -> None:
    if g.n > cfg.max_vertices:
        raise LimitExceededError(
            f"graph has {g.n} vertices, limit is {cfg.max_vertices}")
    if g.m > cfg.max_edges:
        raise LimitExceededError(
            f"graph has {g.m} edges, limit is {cfg.max_edges}")


def enumerate_paths(g: Graph, cfg: OracleConfig = DEFAULT_CONFIG) -> list[Path]:
    """Every simple path with at least one edge, smaller endpoint first,
    sorted by (edge count, vertex sequence)."""
    _check_limits(g, cfg)
    adj = g.adjacency
    found: list[tuple[int, ...]] = []
    current: list[int] = []
    on_path = [False] * g.n

    def extend(last: int) -> None:
        for nxt in adj[last]:
            if on_path[nxt]:
                continue
            current.append(nxt)
            on_path[nxt] = True
            if current[0] < nxt:
                found.append(tuple(current))
            extend(nxt)
            on_path[nxt] = False
            current.pop()

    for start in range(g.n):
        current = [start]
        on_path[start] = True
        extend(start)
        on_path[start] = False
    found.sort(key=lambda vs: (len(vs), vs))
    return [Path(vs) for vs in found]


def sperner_lower_bound(m: int) -> int:
    """Smallest k whose middle binomial coefficient reaches m."""
    k = 1
    while math.comb(k, k // 2) < m:
        k += 1
    return k


@lru_cache(maxsize=None)
def _min_incidence_total(p: int, m: int) -> float:
    """Minimum of sum(|S(e)|) over antichain size profiles of m subsets of [p],
    or inf when no profile fits.

    Uses the normalized matching (LYM) inequality as the feasibility test:
    sizes k_1..k_m with sum(1/C(p, k_i)) <= 1.  DP over (sets placed, total
    size) keeping the least LYM mass; infeasible profiles make the whole
    depth impossible, which the capacity prune exploits.
    """
    best: dict[tuple[int, int], float] = {(0, 0): 0.0}
    for _ in range(m):
        nxt: dict[tuple[int, int], float] = {}
        for (count, total), mass in best.items():
            for k in range(1, p + 1):
                key = (count + 1, total + k)
                add = mass + 1.0 / math.comb(p, k)
                if add <= 1.0 + 1e-12 and add < nxt.get(key, math.inf):
                    nxt[key] = add
        best = nxt
        if not best:
            return math.inf
    totals = [total for (count, total) in best if count == m]
    return min(totals) if totals else math.inf


def _automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Brute-force automorphism group for small graphs (n <= 8)."""
    import itertools

    degs = g.degrees
    edge_set = g.edge_set
    autos = []
    for perm in itertools.permutations(range(g.n)):
        if any(degs[v] != degs[perm[v]] for v in range(g.n)):
            continue
        if all(((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in edge_set
               for u, v in edge_set):
            autos.append(perm)
    return autos


class _TimeBudget(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, cfg: OracleConfig):
        self.g = g
        self.cfg = cfg
        self.paths = enumerate_paths(g, cfg)
        self.num = len(self.paths)
        self.m = g.m
        edge_index = {e: i for i, e in enumerate(g.edges)}
        self.path_masks = []
        for path in self.paths:
            mask = 0
            for e in path.edges:
                mask |= 1 << edge_index[e]
            self.path_masks.append(mask)
        self.path_lens = [len(p) for p in self.paths]
        # suffix_maxlen[t]: longest candidate with index >= t.
        self.suffix_maxlen = [0] * (self.num + 1)
        for t in range(self.num - 1, -1, -1):
            self.suffix_maxlen[t] = max(self.path_lens[t], self.suffix_maxlen[t + 1])
        # sep_pairs[idx]: ordered edge pairs (e, f) that candidate idx separates
        # (contains e, avoids f).  last_sep/last_cover give, per pair/edge, the
        # largest candidate index that can still help; sorting by that index
        # lets the feasibility check stop at the first pair that is safe.
        last_sep = [[-1] * self.m for _ in range(self.m)]
        last_cover = [-1] * self.m
        self.sep_pairs: list[list[tuple[int, int]]] = []
        for idx, mask in enumerate(self.path_masks):
            inside = [e for e in range(self.m) if mask >> e & 1]
            outside = [f for f in range(self.m) if not (mask >> f & 1)]
            pairs = [(e, f) for e in inside for f in outside]
            self.sep_pairs.append(pairs)
            for e in inside:
                last_cover[e] = idx
            for e, f in pairs:
                last_sep[e][f] = idx
        self.cover_order = sorted((last_cover[e], e) for e in range(self.m))
        self.sep_order = sorted(
            (last_sep[e][f], e, f)
            for e in range(self.m) for f in range(self.m) if e != f)
        self.incident = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            self.incident[u] |= 1 << i
            self.incident[v] |= 1 << i
        self.nodes = 0
        self.deadline = (time.monotonic() + cfg.time_budget
                         if cfg.time_budget is not None else None)
        self.root_allowed: set[int] | None = None
        if cfg.symmetry_breaking and g.n <= 8:
            index_of = {p.canonical().vertices: i for i, p in enumerate(self.paths)}
            allowed = set()
            for i, p in enumerate(self.paths):
                least = i
                for perm in _automorphisms(g):
                    image = tuple(perm[v] for v in p.vertices)
                    if image[0] > image[-1]:
                        image = tuple(reversed(image))
                    least = min(least, index_of[image])
                if least == i:
                    allowed.add(i)
            self.root_allowed = allowed

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 512 == 0:
            if time.monotonic() > self.deadline:
                raise _TimeBudget

    def solve_depth(self, p: int) -> list[int] | None:
        """First (lexicographically least) feasible index subset of size p."""
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _TimeBudget
        min_total = _min_incidence_total(p, self.m)
        if math.isinf(min_total):
            return None
        # Ordered pairs (e, f) with S(e) currently a subset of S(f); includes
        # every pair at the start since all sets are empty.  A pair leaves the
        # set permanently once some chosen path separates it, because a later
        # path can never re-create a containment.
        unresolved = {(e, f) for e in range(self.m) for f in range(self.m) if e != f}
        chosen: list[int] = []
        uncovered = (1 << self.m) - 1
        total_len = 0
        cover_order, sep_order = self.cover_order, self.sep_order
        incident = self.incident

        def feasible(next_idx: int) -> bool:
            r = p - len(chosen)
            if total_len + r * self.suffix_maxlen[next_idx] < min_total:
                return False
            for last, e in cover_order:
                if last >= next_idx:
                    break
                if uncovered >> e & 1:
                    return False
            for v in range(self.g.n):
                if (uncovered & incident[v]).bit_count() > 2 * r:
                    return False
            for last, e, f in sep_order:
                if last >= next_idx:
                    break
                if (e, f) in unresolved:
                    return False
            return True

        def dfs(next_idx: int) -> bool:
            nonlocal uncovered, total_len
            self._tick()
            if len(chosen) == p:
                return not uncovered and not unresolved
            if self.num - next_idx < p - len(chosen):
                return False
            if not feasible(next_idx):
                return False
            for idx in range(next_idx, self.num):
                if self.root_allowed is not None and not chosen and idx not in self.root_allowed:
                    continue
                chosen.append(idx)
                saved_uncovered = uncovered
                uncovered &= ~self.path_masks[idx]
                total_len += self.path_lens[idx]
                resolved = [pair for pair in self.sep_pairs[idx] if pair in unresolved]
                unresolved.difference_update(resolved)
                if dfs(idx + 1):
                    return True
                unresolved.update(resolved)
                total_len -= self.path_lens[idx]
                uncovered = saved_uncovered
                chosen.pop()
            return False

        if dfs(0):
            return list(chosen)
        return None


def exact_ssp(g: Graph, cfg: OracleConfig = DEFAULT_CONFIG) -> OracleResult:
    """Minimum size of a strongly separating path system, with a witness.

    Inconclusive searches (path budget or time budget exhausted) return the
    best known interval and no witness instead of raising.
    """
    _check_limits(g, cfg)
    if g.m == 0:
        raise UnsupportedGraphError("exact search needs at least one edge")
    start = time.monotonic()
    search = _Search(g, cfg)
    lower = max(max_degree(g), sperner_lower_bound(g.m))
    upper = g.m  # one single-edge path per edge always separates
    p = lower
    while p <= min(upper, cfg.max_path_budget):
        try:
            solution = search.solve_depth(p)
        except _TimeBudget:
            return OracleResult(None, None, p, upper, False,
                                search.nodes, time.monotonic() - start)
        if solution is not None:
            witness = PathSystem(g, tuple(search.paths[i] for i in solution))
            return OracleResult(p, witness, p, p, True,
                                search.nodes, time.monotonic() - start)
        p += 1
    return OracleResult(None, None, p, upper, False,
                        search.nodes, time.monotonic() - start)


@dataclass(frozen=True)
class FormulaCheck:
    """Exact value of K_{a,b} against the closed-form bounds."""

    a: int
    b: int
    exact: int
    expected_exact: int | None   # b in the a < b/2 regime
    lower_bound: float
    consistent: bool
    note: str


def exact_matches_formula(a: int, b: int,
                          cfg: OracleConfig = DEFAULT_CONFIG) -> FormulaCheck:
    """Compare the oracle on K_{a,b} with the closed-form bound report."""
    from .bipartite import bipartite_bounds
    from .generators import complete_bipartite

    g = complete_bipartite(a, b)
    result = exact_ssp(g, cfg)
    if not result.conclusive:
        raise LimitExceededError(
            f"oracle inconclusive on K_{{{a},{b}}}: in [{result.lower}, {result.upper}]")
    bounds = bipartite_bounds(a, b)
    if 2 * a < b:
        consistent = result.value == b
        note = "exact value must equal b below the b/2 threshold"
        expected = b
    else:
        needed = math.ceil(bounds.lower - 1e-9)
        consistent = result.value >= needed
        note = f"exact value must be at least ceil({bounds.lower:.6f}) = {needed}"
        expected = None
    return FormulaCheck(a, b, result.value, expected, bounds.lower, consistent, note)
