import math

import pytest

from pathsep import (
    Graph, LimitExceededError, OracleConfig, UnsupportedGraphError,
    enumerate_paths, exact_matches_formula, exact_ssp, max_degree,
    sperner_lower_bound, verify_strong_separation,
)
from pathsep.generators import (
    complete_bipartite, complete_graph, cube_graph, cycle_graph, path_graph,
    random_2degenerate,
)

from corpus import ORACLE_CORPUS


# ---------------------------------------------------------------------------
# Path enumeration.
# ---------------------------------------------------------------------------

def test_enumerate_triangle():
    paths = enumerate_paths(complete_graph(3))
    assert [p.vertices for p in paths] == [
        (0, 1), (0, 2), (1, 2), (0, 1, 2), (0, 2, 1), (1, 0, 2)]


def test_enumerate_k2():
    assert [p.vertices for p in enumerate_paths(path_graph(2))] == [(0, 1)]


def test_enumerate_p3():
    assert [p.vertices for p in enumerate_paths(path_graph(3))] == [
        (0, 1), (1, 2), (0, 1, 2)]


def test_enumerate_complete_graph_counting_formula():
    # K_n has C(n, k) * k!/2 simple paths on k vertices.
    for n in (3, 4, 5):
        expected = sum(math.comb(n, k) * math.factorial(k) // 2
                       for k in range(2, n + 1))
        assert len(enumerate_paths(complete_graph(n))) == expected


def test_enumerate_canonical_orientation_and_uniqueness():
    paths = enumerate_paths(cycle_graph(5))
    seqs = [p.vertices for p in paths]
    assert len(set(seqs)) == len(seqs)
    for vs in seqs:
        assert vs[0] < vs[-1]
        assert tuple(reversed(vs)) not in set(seqs)


def test_enumerate_respects_limits():
    with pytest.raises(LimitExceededError):
        enumerate_paths(complete_graph(5), OracleConfig(max_vertices=4))
    with pytest.raises(LimitExceededError):
        enumerate_paths(complete_graph(5), OracleConfig(max_edges=6))


# ---------------------------------------------------------------------------
# Lower bounds.
# ---------------------------------------------------------------------------

def test_sperner_bound_values():
    assert sperner_lower_bound(1) == 1
    assert sperner_lower_bound(2) == 2
    assert sperner_lower_bound(3) == 3
    assert sperner_lower_bound(6) == 4
    assert sperner_lower_bound(10) == 5
    assert sperner_lower_bound(11) == 6
    assert sperner_lower_bound(20) == 6


# ---------------------------------------------------------------------------
# Exact values.
# ---------------------------------------------------------------------------

EXPECTED = {
    "K2": 1, "P3": 2, "P4": 3, "P5": 4, "triangle": 3, "paw": 4, "bull": 4,
    "bowtie": 4, "C4": 4, "C5": 5, "C6": 6, "K4": 5, "K13": 3, "K14": 4,
    "K23": 5, "K25": 5,
}


@pytest.mark.parametrize("name,g", [c for c in ORACLE_CORPUS if c[0] in EXPECTED])
def test_exact_values_and_witnesses(name, g):
    result = exact_ssp(g)
    assert result.conclusive
    assert result.value == EXPECTED[name]
    assert len(result.witness) == result.value
    assert verify_strong_separation(result.witness).ok
    assert result.value >= max_degree(g)
    assert result.value >= sperner_lower_bound(g.m)


def test_p3_witness_is_the_two_singletons():
    result = exact_ssp(path_graph(3))
    assert [p.vertices for p in result.witness.paths] == [(0, 1), (1, 2)]


def test_exact_is_deterministic():
    a = exact_ssp(complete_graph(4))
    b = exact_ssp(complete_graph(4))
    assert a.value == b.value
    assert [p.vertices for p in a.witness.paths] == [p.vertices for p in b.witness.paths]


def test_symmetry_breaking_preserves_the_value():
    for g in (complete_graph(4), cycle_graph(5), complete_bipartite(2, 3)):
        plain = exact_ssp(g)
        sym = exact_ssp(g, OracleConfig(symmetry_breaking=True))
        assert plain.value == sym.value


def test_exact_requires_an_edge():
    with pytest.raises(UnsupportedGraphError):
        exact_ssp(Graph(3, ()))


def test_exact_refuses_oversized_graphs():
    with pytest.raises(LimitExceededError):
        exact_ssp(random_2degenerate(30, 0))


def test_time_budget_yields_interval():
    result = exact_ssp(cube_graph(), OracleConfig(time_budget=1e-6))
    assert not result.conclusive
    assert result.value is None and result.witness is None
    assert result.lower == 6          # max(degree 3, antichain bound for 12 edges)
    assert result.upper == 12         # one single-edge path per edge
    assert result.lower <= result.upper


def test_path_budget_yields_interval():
    result = exact_ssp(cycle_graph(6), OracleConfig(max_path_budget=4))
    assert not result.conclusive
    assert result.lower == 5 and result.upper == 6


# ---------------------------------------------------------------------------
# Formula comparisons.
# ---------------------------------------------------------------------------

def test_formula_check_k13():
    check = exact_matches_formula(1, 3)
    assert check.exact == 3 == check.expected_exact and check.consistent


def test_formula_check_k25():
    check = exact_matches_formula(2, 5)
    assert check.exact == 5 == check.expected_exact and check.consistent


def test_formula_check_k22():
    # a = b regime: the counting bound gives (sqrt(10) - 2) * 2, and the
    # 4-cycle actually needs 4 paths.
    check = exact_matches_formula(2, 2)
    assert check.exact == 4
    assert math.isclose(check.lower_bound, (math.sqrt(10) - 2) * 2, abs_tol=1e-9)
    assert check.consistent


def test_formula_check_k24_boundary():
    # a = b/2: the counting bound evaluates to exactly b = 4, while the
    # antichain bound (8 incomparable sets need 5 slots) pushes the true
    # value to 5; the bound is a valid floor, tight only asymptotically.
    check = exact_matches_formula(2, 4)
    assert math.isclose(check.lower_bound, 4.0, abs_tol=1e-9)
    assert check.exact == 5
    assert check.consistent


def test_formula_check_k12():
    check = exact_matches_formula(1, 2)
    assert check.exact == 2 and check.consistent


def test_formula_check_k11_degenerate_point():
    # The one-edge graph needs a single path, but the counting bound
    # evaluates to sqrt(10) - 2 > 1: its quadratic relaxation breaks down
    # on systems this small, so the comparison reports the mismatch.
    check = exact_matches_formula(1, 1)
    assert check.exact == 1
    assert not check.consistent


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(max_vertices=0)
    with pytest.raises(ValueError):
        OracleConfig(time_budget=-1.0)


def test_exact_matches_brute_force_on_tiny_graphs():
    # Independent route: try every subset of candidate paths in increasing
    # size and take the first that verifies.
    from itertools import combinations
    from pathsep import PathSystem
    from corpus import paw

    for g in (path_graph(3), path_graph(4), complete_graph(3),
              complete_bipartite(1, 3), cycle_graph(4), paw()):
        pool = enumerate_paths(g)
        brute = None
        for size in range(1, len(pool) + 1):
            for combo in combinations(pool, size):
                if verify_strong_separation(PathSystem(g, combo)).ok:
                    brute = size
                    break
            if brute is not None:
                break
        assert exact_ssp(g).value == brute
