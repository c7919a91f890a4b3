import json

import pytest

from pathsep.cli import main
from pathsep.generators import complete_graph, petersen_graph
from pathsep.graphs import parse_graph, serialize_graph
from pathsep.systems import load_paths, parse_paths, verify_strong_separation


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "triangle.g"
    p.write_text("3 3\n0 1\n1 2\n0 2\n")
    return str(p)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.g"
    p.write_text(serialize_graph(complete_graph(4)))
    return str(p)


@pytest.fixture
def petersen_file(tmp_path):
    p = tmp_path / "petersen.g"
    p.write_text(serialize_graph(petersen_graph()))
    return str(p)


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------

def test_build_bipartite(tmp_path, capsys):
    out = tmp_path / "k25.paths"
    assert main(["build", "--bipartite", "--a", "2", "--b", "5", "-o", str(out)]) == 0
    captured = capsys.readouterr().out
    assert "paths: 5" in captured
    text = out.read_text()
    assert len(text.strip().splitlines()) == 5


def test_build_cubic_petersen(tmp_path, capsys, petersen_file):
    out = tmp_path / "petersen.paths"
    assert main(["build", "-i", petersen_file, "-m", "cubic", "-o", str(out)]) == 0
    assert "paths: 10" in capsys.readouterr().out
    g = parse_graph(open(petersen_file).read())
    system = load_paths(str(out), g)
    assert verify_strong_separation(system).ok


def test_build_degenerate_rejects_k4(k4_file, capsys):
    assert main(["build", "-i", k4_file, "-m", "degenerate"]) == 3
    assert "not 2-degenerate" in capsys.readouterr().err


def test_build_auto_k4_uses_canned_system(k4_file, capsys):
    assert main(["build", "-i", k4_file, "-m", "auto"]) == 0
    out = capsys.readouterr().out
    assert "paths: 5" in out and "canned-k4" in out


def test_build_auto_refuses_k5(tmp_path, capsys):
    p = tmp_path / "k5.g"
    p.write_text(serialize_graph(complete_graph(5)))
    assert main(["build", "-i", str(p)]) == 3


def test_build_missing_flags(capsys):
    assert main(["build", "--bipartite", "--a", "2"]) == 2
    assert main(["build", "-m", "degenerate"]) == 2


def test_build_bipartite_bad_regime(capsys):
    assert main(["build", "--bipartite", "--a", "3", "--b", "6"]) == 3
    assert "a < b/2" in capsys.readouterr().err


def test_build_is_byte_reproducible(tmp_path, triangle_file):
    out1, out2 = tmp_path / "a.paths", tmp_path / "b.paths"
    assert main(["build", "-i", triangle_file, "-o", str(out1)]) == 0
    assert main(["build", "-i", triangle_file, "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_strict_pass(tmp_path, triangle_file, capsys):
    paths = tmp_path / "tri.paths"
    paths.write_text("0 1 2\n1 2 0\n2 0 1\n")
    assert main(["verify", triangle_file, str(paths), "--strict"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_fail_prints_witness(tmp_path, capsys):
    g = tmp_path / "p3.g"
    g.write_text("3 2\n0 1\n1 2\n")
    paths = tmp_path / "p3.paths"
    paths.write_text("0 1 2\n")
    assert main(["verify", str(g), str(paths)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "(0, 1)" in out


def test_verify_json(tmp_path, triangle_file, capsys):
    paths = tmp_path / "tri.paths"
    paths.write_text("0 1 2\n1 2 0\n2 0 1\n")
    assert main(["verify", triangle_file, str(paths), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"verdict": "PASS", "kind": None, "witness": None}


def test_verify_parse_error_exit_code(tmp_path, triangle_file):
    bad = tmp_path / "bad.paths"
    bad.write_text("0 9 2\n")
    assert main(["verify", triangle_file, str(bad)]) == 2


# ---------------------------------------------------------------------------
# exact
# ---------------------------------------------------------------------------

def test_exact_k4(k4_file, tmp_path, capsys):
    witness = tmp_path / "k4.paths"
    assert main(["exact", k4_file, "-o", str(witness)]) == 0
    assert "ssp = 5" in capsys.readouterr().out
    g = complete_graph(4)
    system = parse_paths(witness.read_text(), g)
    assert verify_strong_separation(system).ok


def test_exact_triangle_json(triangle_file, capsys):
    assert main(["exact", triangle_file, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ssp"] == 3 and payload["conclusive"] is True


def test_exact_limit_refusal(petersen_file, capsys):
    assert main(["exact", petersen_file, "--max-vertices", "4"]) == 4
    assert "limit" in capsys.readouterr().err


def test_exact_time_budget_inconclusive(petersen_file, capsys):
    rc = main(["exact", petersen_file, "--time-budget", "0.000001"])
    assert rc == 4
    out = capsys.readouterr().out
    assert "inconclusive" in out and "[" in out


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def test_bounds_exact(capsys):
    assert main(["bounds", "--a", "3", "--b", "8"]) == 0
    assert "exact = 8" in capsys.readouterr().out


def test_bounds_lower_only(capsys):
    assert main(["bounds", "--a", "8", "--b", "8"]) == 0
    assert "9.29822" in capsys.readouterr().out


def test_bounds_json(capsys):
    assert main(["bounds", "--a", "3", "--b", "8", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"lower": 8.0, "upper": 8.0, "exact": 8}


def test_bounds_table(capsys):
    assert main(["bounds", "--table", "--b", "8"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "a,lower_bound"
    assert len(lines) == 9


def test_bounds_bad_orientation(capsys):
    assert main(["bounds", "--a", "8", "--b", "3"]) == 3


def test_bounds_usage(capsys):
    assert main(["bounds", "--a", "3"]) == 2


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def test_gen_two_degenerate(tmp_path, capsys):
    out = tmp_path / "g.g"
    assert main(["gen", "-f", "two-degenerate", "-n", "50", "-s", "7",
                 "-o", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 50
    from pathsep import is_2_degenerate, is_connected
    assert is_connected(g) and is_2_degenerate(g)[0]


def test_gen_named_petersen(tmp_path):
    out = tmp_path / "p.g"
    assert main(["gen", "-f", "named", "--name", "petersen", "-o", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 10 and g.m == 15 and all(d == 3 for d in g.degrees)


def test_gen_complete_bipartite(tmp_path):
    out = tmp_path / "k.g"
    assert main(["gen", "-f", "complete-bipartite", "--a", "2", "--b", "5",
                 "-o", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 7 and g.m == 10


def test_gen_seed_reproducible(tmp_path):
    a, b = tmp_path / "a.g", tmp_path / "b.g"
    for path in (a, b):
        assert main(["gen", "-f", "two-degenerate", "-n", "30", "-s", "3",
                     "-o", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.g"
    assert main(["gen", "-f", "two-degenerate", "-n", "30", "-s", "4",
                 "-o", str(c)]) == 0
    assert a.read_bytes() != c.read_bytes()


def test_gen_cubic(tmp_path):
    out = tmp_path / "c.g"
    assert main(["gen", "-f", "cubic", "-n", "10", "-s", "1", "-o", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert all(d == 3 for d in g.degrees)


def test_gen_usage_errors(capsys):
    assert main(["gen", "-f", "named"]) == 2
    assert main(["gen", "-f", "two-degenerate"]) == 2
    assert main(["gen", "-f", "named", "--name", "nosuch"]) == 3


# ---------------------------------------------------------------------------
# profile
# ---------------------------------------------------------------------------

def test_profile_histogram(tmp_path, triangle_file, capsys):
    paths = tmp_path / "tri.paths"
    paths.write_text("0 1 2\n1 2 0\n2 0 1\n")
    assert main(["profile", triangle_file, str(paths)]) == 0
    out = capsys.readouterr().out
    assert "e_2=3" in out


def test_profile_with_certificate(tmp_path, capsys):
    g = tmp_path / "k25.g"
    paths = tmp_path / "k25.paths"
    assert main(["gen", "-f", "complete-bipartite", "--a", "2", "--b", "5",
                 "-o", str(g)]) == 0
    assert main(["build", "--bipartite", "--a", "2", "--b", "5",
                 "-o", str(paths)]) == 0
    capsys.readouterr()
    assert main(["profile", str(g), str(paths), "--a", "2", "--b", "5"]) == 0
    out = capsys.readouterr().out
    assert "e_2=10" in out and "slack 0" in out


# ---------------------------------------------------------------------------
# manifest
# ---------------------------------------------------------------------------

def test_manifest_written_and_stable(tmp_path, triangle_file):
    m1, m2 = tmp_path / "m1.json", tmp_path / "m2.json"
    assert main(["exact", triangle_file, "--manifest", str(m1)]) == 0
    assert main(["exact", triangle_file, "--manifest", str(m2)]) == 0
    a = json.loads(m1.read_text())
    b = json.loads(m2.read_text())
    assert a["command"] == "exact" and a["outcome"] == {"exit_code": 0, "ssp": 3}
    a.pop("timestamp"), b.pop("timestamp")
    # Manifests differ only in their input paths (tmp fixtures) and clocks.
    assert a == b


def test_gen_value_errors_map_to_usage(capsys):
    assert main(["gen", "-f", "cubic", "-n", "5"]) == 2
    assert main(["gen", "-f", "two-degenerate", "-n", "2"]) == 2


def test_verify_strict_catches_structural_failure(tmp_path, capsys):
    # Four singleton paths separate the 4-cycle but violate the
    # every-edge-twice property, so --strict flips the verdict.
    g = tmp_path / "c4.g"
    g.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    paths = tmp_path / "c4.paths"
    paths.write_text("0 1\n1 2\n2 3\n0 3\n")
    assert main(["verify", str(g), str(paths)]) == 0
    capsys.readouterr()
    assert main(["verify", str(g), str(paths), "--strict"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_strict_rejects_disconnected_host(tmp_path):
    g = tmp_path / "two.g"
    g.write_text("4 2\n0 1\n2 3\n")
    paths = tmp_path / "two.paths"
    paths.write_text("0 1\n2 3\n")
    assert main(["verify", str(g), str(paths)]) == 0
    assert main(["verify", str(g), str(paths), "--strict"]) == 3


def test_build_auto_handles_edgeless_graphs(tmp_path, capsys):
    g = tmp_path / "iso.g"
    g.write_text("3 0\n")
    out = tmp_path / "iso.paths"
    assert main(["build", "-i", str(g), "-o", str(out)]) == 0
    assert "paths: 0" in capsys.readouterr().out
    assert out.read_text() == ""
