import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import DATA, GRAPH_TEXTS, PENTAGON
from traagkit.cli import main

GRAPHS = Path(__file__).parent.parent / "graphs"


@pytest.fixture()
def tmp_graph(tmp_path):
    def write(text, name="g.g"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_text(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["klein"])
    code, out, _ = run(capsys, "parse", path)
    assert code == 0
    assert out == (
        "vertices: 2\nundirected edges: 0\ndirected edges: 1\norigins: a\norder: a b\n"
    )


def test_parse_delta(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["delta"])
    code, out, _ = run(capsys, "parse", path)
    assert code == 0
    assert "vertices: 3" in out and "directed edges: 3" in out and "origins: a b c" in out


def test_parse_error_exit_2(capsys, tmp_graph):
    path = tmp_graph("vertices: a\nedge a a\n")
    code, out, err = run(capsys, "parse", path)
    assert code == 2
    assert "line 2" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "parse", "/nonexistent/file.g")
    assert code == 2


def test_complete_z2(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["z2"])
    code, out, _ = run(capsys, "complete", path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "status: finite"
    assert "added: 0" in lines
    assert "rules: 8" in lines
    assert "b a -> a b" in lines
    assert "a a^-1 -> 1" in lines


def test_complete_pentagon_budget_exit_3(capsys, tmp_graph):
    path = tmp_graph(PENTAGON)
    code, out, _ = run(capsys, "complete", path, "--max-rules", "60", "--max-steps", "5000")
    assert code == 3
    assert out.startswith("status: budget_exhausted")


def test_reduce_and_geodesic(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["klein"])
    code, out, _ = run(capsys, "reduce", path, "b a", "--geodesic")
    assert code == 0
    assert out == "normal form: a^-1 b\ngeodesic length: 2\n"


def test_wp(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["klein"])
    code, out, _ = run(capsys, "wp", path, "a b a b^-1")
    assert (code, out) == (0, "trivial\n")
    code, out, _ = run(capsys, "wp", path, "a b")
    assert (code, out) == (0, "nontrivial\n")


def test_wp_word_error(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["klein"])
    code, _, err = run(capsys, "wp", path, "q")
    assert code == 2


def test_growth_compare(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["klein"])
    code, out, _ = run(capsys, "growth", path, "--radius", "3", "--compare-raag")
    assert code == 0
    assert "spheres: 1 4 8 12" in out
    assert "equal: true" in out


def test_growth_json_roundtrip(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["z2"])
    code, out, _ = run(capsys, "growth", path, "--radius", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["spheres"] == [1, 4, 8]
    assert json.dumps(payload, sort_keys=True, indent=2) + "\n" == out


def test_torsion_text(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["delta"])
    code, out, _ = run(capsys, "torsion", path)
    assert code == 0
    assert out == "torsion: yes\ncycle: a b c\nelement: a b c\nelement order: 2\n"
    path = tmp_graph(GRAPH_TEXTS["z2"], "z2.g")
    code, out, _ = run(capsys, "torsion", path)
    assert (code, out) == (0, "torsion: no\n")


def test_abel_and_indicable(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["delta"])
    code, out, _ = run(capsys, "abel", path)
    assert (code, out) == (0, "free rank: 0\nz2 rank: 3\n")
    code, out, _ = run(capsys, "indicable", path)
    assert (code, out) == (0, "indicable: false\n")
    path = tmp_graph(GRAPH_TEXTS["klein"], "k.g")
    code, out, _ = run(capsys, "indicable", path)
    assert (code, out) == (0, "indicable: true\nwitness: b\n")


def test_homcheck_certificate(capsys):
    code, out, _ = run(
        capsys,
        "homcheck",
        str(DATA / "gamma1.g"),
        str(DATA / "gamma2.g"),
        str(DATA / "f.map"),
        "--inverse",
        str(DATA / "g.map"),
    )
    assert code == 0
    assert out == (
        "homomorphism: true\ninverse homomorphism: true\nmutually inverse: true\n"
    )


def test_homcheck_failure_exit_4(capsys, tmp_graph, tmp_path):
    delta = tmp_graph(GRAPH_TEXTS["delta"])
    bad = tmp_path / "bad.map"
    bad.write_text("a -> b\nb -> a\nc -> c\n")
    code, out, _ = run(capsys, "homcheck", delta, delta, str(bad))
    assert code == 4
    assert out.startswith("homomorphism: false\nviolated: ")


def test_cayley_dot(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["z2"])
    code, out, _ = run(capsys, "cayley", path, "--radius", "1")
    assert code == 0
    assert out.startswith("graph cayley_ball {")
    assert sum(1 for line in out.splitlines() if " -- " in line) == 4


def test_cayley_check(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["delta"])
    code, out, _ = run(capsys, "cayley", path, "--radius", "3", "--check")
    assert code == 0
    assert out == "bijective: true\nadjacency preserved: true\n"


def test_cayley_json(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["zline"])
    code, out, _ = run(capsys, "cayley", path, "--radius", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["nodes"] == 3 and payload["edges"] == 2
    assert "dot" not in payload
    assert payload["layers"] == [["1"], ["a", "a^-1"]]


def test_order_override(capsys, tmp_graph):
    # Without the override this presentation exhausts any small budget.
    path = tmp_graph("vertices: a b c\nedge a b\nedge b -> c\n")
    code, out, _ = run(capsys, "complete", path, "--order", "a c b")
    assert code == 0
    assert out.startswith("status: finite")
    code, _, _ = run(capsys, "complete", path, "--max-rules", "16", "--max-steps", "2000")
    assert code == 3


def test_outputs_are_deterministic(capsys, tmp_graph):
    path = tmp_graph(GRAPH_TEXTS["k4mixed"])
    outputs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "growth", path, "--radius", "2", "--compare-raag")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "traagkit", "wp", str(GRAPHS / "klein.g"), "a b a b^-1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "trivial\n"
