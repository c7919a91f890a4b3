"""Paths, path systems, and the strong-separation verification stack.

A collection of paths strongly separates a graph when, for every ordered pair
of distinct edges (e, f), some path contains e but not f.  Writing S(e) for
the set of indices of paths containing e, that is equivalent to the family
{S(e)} being non-empty for every edge and pairwise incomparable under set
inclusion: S(e) a subset of S(f) would mean no path hits e while avoiding f.

Two verifiers live here on purpose.  ``verify_strong_separation`` works on
the incidence bitsets (the fast route); ``verify_by_pair_scan`` is the
literal definition, kept as an independent cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import CertificateError, GraphFormatError, InvalidSystemError, UnsupportedGraphError
from .graphs import Edge, Graph, is_connected, normalize_edge


@dataclass(frozen=True)
class Path:
    """Simple path given by its vertex sequence (at least one edge)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least two vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in path {self.vertices}")

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(normalize_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def ends_at(self, v: int) -> bool:
        return self.vertices[0] == v or self.vertices[-1] == v

    def canonical(self) -> "Path":
        """Orientation with the smaller endpoint first."""
        if self.vertices[0] <= self.vertices[-1]:
            return self
        return Path(tuple(reversed(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices) - 1  # length in edges


@dataclass(frozen=True)
class PathSystem:
    """An ordered collection of paths attached to a host graph.

    Path order matters only for reproducibility; every verdict below is
    invariant under permutation of the paths.
    """

    graph: Graph
    paths: tuple[Path, ...]

    def __post_init__(self) -> None:
        edge_set = self.graph.edge_set
        for i, path in enumerate(self.paths):
            for v in path.vertices:
                if not (0 <= v < self.graph.n):
                    raise InvalidSystemError(
                        f"path {i} uses vertex {v}, out of range for n={self.graph.n}")
            for u, v in path.edges:
                if (u, v) not in edge_set:
                    raise InvalidSystemError(f"path {i} uses non-edge ({u}, {v})")

    def __len__(self) -> int:
        return len(self.paths)

    def canonical_form(self) -> tuple[tuple[int, ...], ...]:
        """Sorted canonical orientations; host-independent comparison key."""
        return tuple(sorted(p.canonical().vertices for p in self.paths))


def system_from_sequences(graph: Graph, seqs) -> PathSystem:
    return PathSystem(graph, tuple(Path(tuple(s)) for s in seqs))


# ---------------------------------------------------------------------------
# Incidence profiles.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncidenceProfile:
    """Per-edge path-membership bitsets plus the multiplicity histogram.

    ``masks[i]`` is the bitset of path indices containing ``edges[i]``;
    ``histogram[k]`` counts edges lying in exactly k paths (k = 0..p).
    """

    num_paths: int
    edges: tuple[Edge, ...]
    masks: tuple[int, ...]
    histogram: tuple[int, ...]

    @property
    def e1(self) -> int:
        return self.histogram[1] if len(self.histogram) > 1 else 0

    @property
    def e2(self) -> int:
        return self.histogram[2] if len(self.histogram) > 2 else 0

    @cached_property
    def _index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def mask_of(self, edge: tuple[int, int]) -> int:
        return self.masks[self._index[normalize_edge(*edge)]]

    def paths_for(self, edge: tuple[int, int]) -> tuple[int, ...]:
        mask = self.mask_of(edge)
        return tuple(i for i in range(self.num_paths) if mask >> i & 1)


def incidence_profile(system: PathSystem) -> IncidenceProfile:
    """Exact S(e) for every edge of the host graph, including uncovered ones."""
    edges = system.graph.edges
    index = {e: i for i, e in enumerate(edges)}
    masks = [0] * len(edges)
    for p_idx, path in enumerate(system.paths):
        bit = 1 << p_idx
        for e in path.edges:
            masks[index[e]] |= bit
    hist = [0] * (len(system.paths) + 1)
    for mask in masks:
        hist[mask.bit_count()] += 1
    return IncidenceProfile(len(system.paths), edges, tuple(masks), tuple(hist))


# ---------------------------------------------------------------------------
# Verdicts and verifiers.
# ---------------------------------------------------------------------------

UNCOVERED = "uncovered"
CONTAINED = "contained"
MULTIPLICITY = "multiplicity"
ENDPOINTS = "endpoints"


@dataclass(frozen=True)
class Verdict:
    """Machine-readable verification outcome with a canonical witness."""

    ok: bool
    kind: str | None = None
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _contained_witness(edges: tuple[Edge, ...], masks: tuple[int, ...]) -> tuple[Edge, Edge]:
    # Smallest lexicographic ordered pair (e, f) with S(e) a subset of S(f).
    for i, e in enumerate(edges):
        me = masks[i]
        for j, f in enumerate(edges):
            if i != j and me | masks[j] == masks[j]:
                return (e, f)
    raise AssertionError("no containment found on rescan")


def verify_strong_separation(system: PathSystem) -> Verdict:
    """PASS iff every S(e) is non-empty and the family is an antichain.

    Failure kinds: ``uncovered`` (an edge on no path, witness is that edge)
    and ``contained`` (witness pair (e, f) with S(e) a subset of S(f), the
    lexicographically smallest such ordered pair).
    """
    profile = incidence_profile(system)
    edges, masks = profile.edges, profile.masks
    for e, mask in zip(edges, masks):
        if mask == 0:
            return Verdict(False, UNCOVERED, (e,), f"edge {e} lies on no path")
    # Group by popcount: sets of equal size are comparable only when equal,
    # so uniform systems (every edge on the same number of paths) are checked
    # in linear time.  Mixed sizes fall back to pairwise subset tests.
    by_count: dict[int, list[int]] = {}
    for i, mask in enumerate(masks):
        by_count.setdefault(mask.bit_count(), []).append(i)
    failed = False
    counts = sorted(by_count)
    for c in counts:
        seen: set[int] = set()
        for i in by_count[c]:
            if masks[i] in seen:
                failed = True
                break
            seen.add(masks[i])
        if failed:
            break
    if not failed:
        for ci_pos, c_small in enumerate(counts):
            if failed:
                break
            for c_large in counts[ci_pos + 1:]:
                if failed:
                    break
                for i in by_count[c_small]:
                    mi = masks[i]
                    for j in by_count[c_large]:
                        if mi & ~masks[j] == 0:
                            failed = True
                            break
                    if failed:
                        break
    if not failed:
        return Verdict(True)
    e, f = _contained_witness(edges, masks)
    return Verdict(False, CONTAINED, (e, f), f"S{e} is contained in S{f}")


def verify_by_pair_scan(system: PathSystem) -> Verdict:
    """Literal quadratic reference verifier; scans paths per ordered edge pair.

    Must agree with :func:`verify_strong_separation` on every input; an edge
    on no path is reported as ``uncovered`` there too (for a single-edge graph
    the pairwise definition alone would be vacuous).
    """
    edges = system.graph.edges
    path_edge_sets = [p.edge_set for p in system.paths]
    for e in edges:
        if not any(e in s for s in path_edge_sets):
            return Verdict(False, UNCOVERED, (e,), f"edge {e} lies on no path")
    for e in edges:
        for f in edges:
            if e == f:
                continue
            if not any(e in s and f not in s for s in path_edge_sets):
                return Verdict(False, CONTAINED, (e, f),
                               f"no path contains {e} and avoids {f}")
    return Verdict(True)


def verify_structural_properties(system: PathSystem) -> Verdict:
    """Check the two structural guarantees of the inductive construction.

    PASS iff every edge lies in exactly two paths and every vertex is an
    endpoint of exactly two paths.  Only meaningful for connected hosts with
    at least 3 vertices; anything else is rejected.
    """
    g = system.graph
    if g.n < 3:
        raise UnsupportedGraphError("structural properties need at least 3 vertices")
    if not is_connected(g):
        raise UnsupportedGraphError("structural properties need a connected host graph")
    profile = incidence_profile(system)
    for e, mask in zip(profile.edges, profile.masks):
        count = mask.bit_count()
        if count != 2:
            return Verdict(False, MULTIPLICITY, (e, count),
                           f"edge {e} lies in {count} paths, expected 2")
    end_count = [0] * g.n
    for path in system.paths:
        a, b = path.ends
        end_count[a] += 1
        end_count[b] += 1
    for v, count in enumerate(end_count):
        if count != 2:
            return Verdict(False, ENDPOINTS, (v, count),
                           f"vertex {v} is an endpoint of {count} paths, expected 2")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Counting certificate for complete bipartite hosts.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertificateReport:
    """Edge-multiplicity counts of a separating system on K_{a,b} and the two
    counting inequalities every such system satisfies:

      eq1:  3ab - 2*e1 - e2 <= 2ap   (paths carry at most 2a edges each)
      eq2:  e2 + 2*e1 <= p^2 / 2     (singleton and pair incidence sets differ)
    """

    a: int
    b: int
    p: int
    e1: int
    e2: int

    @property
    def eq1_lhs(self) -> int:
        return 3 * self.a * self.b - 2 * self.e1 - self.e2

    @property
    def eq1_rhs(self) -> int:
        return 2 * self.a * self.p

    @property
    def eq1_slack(self) -> int:
        return self.eq1_rhs - self.eq1_lhs

    @property
    def eq2_lhs(self) -> int:
        return self.e2 + 2 * self.e1

    @property
    def eq2_rhs(self) -> float:
        return self.p * self.p / 2

    @property
    def eq2_slack(self) -> float:
        return self.eq2_rhs - self.eq2_lhs


def is_complete_bipartite_host(g: Graph, a: int, b: int) -> bool:
    """True iff g is K_{a,b} in the builder numbering (u side 0..a-1, v side a..a+b-1)."""
    if a < 1 or b < 1 or g.n != a + b or g.m != a * b:
        return False
    expected = {(i, a + j) for i in range(a) for j in range(b)}
    return g.edge_set == frozenset(expected)


def counting_certificate(system: PathSystem, a: int, b: int) -> CertificateReport:
    """Certificate of the two counting inequalities for a separating system.

    Raises CertificateError if the system is not strongly separating, or if
    an inequality fails.  The quadratic relaxation eq2 can genuinely fail on
    tiny degenerate systems (p <= 3 covered by single-edge paths); a failure
    there means the input is outside the regime the bound argues about, while
    a failure on any non-trivial system indicates a verifier bug.
    """
    if not is_complete_bipartite_host(system.graph, a, b):
        raise UnsupportedGraphError(f"host graph is not K_{{{a},{b}}} in canonical numbering")
    verdict = verify_strong_separation(system)
    if not verdict.ok:
        raise CertificateError(f"system is not strongly separating: {verdict.detail}")
    profile = incidence_profile(system)
    report = CertificateReport(a=a, b=b, p=len(system), e1=profile.e1, e2=profile.e2)
    if report.eq1_lhs > report.eq1_rhs:
        raise CertificateError(
            f"eq1 violated: {report.eq1_lhs} > {report.eq1_rhs} (e1={report.e1}, e2={report.e2})")
    if report.eq2_lhs > report.eq2_rhs:
        raise CertificateError(
            f"eq2 violated: {report.eq2_lhs} > {report.eq2_rhs} (e1={report.e1}, e2={report.e2})")
    return report


# ---------------------------------------------------------------------------
# Path-system files: text (one path per line) and a JSON alternative.
# ---------------------------------------------------------------------------

def format_paths(system: PathSystem) -> str:
    lines = [" ".join(str(v) for v in p.vertices) for p in system.paths]
    return "\n".join(lines) + ("\n" if lines else "")


def format_paths_json(system: PathSystem) -> str:
    return json.dumps({"n": system.graph.n,
                       "paths": [list(p.vertices) for p in system.paths]})


def parse_paths(text: str, graph: Graph) -> PathSystem:
    """Parse either path-file format (JSON is detected by a leading '{')."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad JSON path file: {exc}") from None
        if not isinstance(obj, dict) or "paths" not in obj:
            raise GraphFormatError("JSON path file needs an object with a 'paths' field")
        if "n" in obj and obj["n"] != graph.n:
            raise GraphFormatError(
                f"path file declares n={obj['n']} but graph has n={graph.n}")
        seqs = obj["paths"]
    else:
        seqs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                seqs.append([int(tok) for tok in line.split()])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad path line {line!r}") from None
    try:
        return system_from_sequences(graph, seqs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def load_paths(path: str, graph: Graph) -> PathSystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_paths(fh.read(), graph)


def save_paths(system: PathSystem, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_paths(system))


__all__ = [
    "Path", "PathSystem", "IncidenceProfile", "Verdict", "CertificateReport",
    "incidence_profile", "verify_strong_separation", "verify_by_pair_scan",
    "verify_structural_properties", "counting_certificate",
    "is_complete_bipartite_host", "system_from_sequences",
    "format_paths", "format_paths_json", "parse_paths", "load_paths", "save_paths",
    "UNCOVERED", "CONTAINED", "MULTIPLICITY", "ENDPOINTS",
]
