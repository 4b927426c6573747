import json
import subprocess
import sys

import pytest

from laddergraphs.cli import main
from laddergraphs.exprs import evaluate, parse
from laddergraphs.ladder import NormalPolynomial, multiply_monomials


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normal_order_text(capsys):
    code, out, err = run_cli(capsys, "normal-order", "a ad")
    assert code == 0 and err == ""
    assert out == "ad a + 1\n"


def test_normal_order_json(capsys):
    code, out, _ = run_cli(capsys, "normal-order", "--json", "a ad")
    assert code == 0
    assert json.loads(out) == evaluate(parse("a ad")).to_json()


def test_normal_order_parse_error(capsys):
    code, out, err = run_cli(capsys, "normal-order", "a ^")
    assert code == 1 and out == ""
    assert "syntax error at position 3" in err


def test_commutator(capsys):
    code, out, _ = run_cli(capsys, "commutator", "2", "2")
    assert code == 0
    assert out == "4 ad a + 2\n"
    code, out, _ = run_cli(capsys, "commutator", "--json", "3", "1")
    assert json.loads(out) == NormalPolynomial({(0, 2): 3}).to_json()


def test_commutator_rejects_non_integers():
    with pytest.raises(SystemExit) as excinfo:
        main(["commutator", "x", "2"])
    assert excinfo.value.code == 2


def test_compose_text_golden(capsys):
    code, out, _ = run_cli(capsys, "compose", "2", "2", "2", "1")
    assert code == 0
    assert out == (
        "(2,2) o (2,1): 7 compositions\n"
        "i=0: 1 -> (4,3)\n"
        "i=1: 4 -> (3,2)\n"
        "i=2: 2 -> (2,1)\n"
        "projection: ad^4 a^3 + 4 ad^3 a^2 + 2 ad^2 a\n"
    )


def test_compose_three_by_three(capsys):
    code, out, _ = run_cli(capsys, "compose", "3", "3", "3", "3")
    assert code == 0
    assert out.splitlines()[0] == "(3,3) o (3,3): 34 compositions"


def test_compose_trivial_case(capsys):
    code, out, _ = run_cli(capsys, "compose", "0", "0", "0", "0")
    assert code == 0
    assert out.splitlines()[0] == "(0,0) o (0,0): 1 composition"


def test_compose_json(capsys):
    code, out, _ = run_cli(capsys, "compose", "--json", "2", "2", "2", "1")
    assert code == 0
    blob = json.loads(out)
    assert blob["count"] == 7
    assert blob["classes"] == [
        {"i": 0, "count": 1, "r": 4, "s": 3},
        {"i": 1, "count": 4, "r": 3, "s": 2},
        {"i": 2, "count": 2, "r": 2, "s": 1},
    ]
    assert len(blob["graphs"]) == 7
    assert NormalPolynomial.from_json(blob["projection"]) == multiply_monomials((2, 2), (2, 1))


def test_compose_writes_dot_files(capsys, tmp_path):
    target = tmp_path / "out"
    code, out, _ = run_cli(capsys, "compose", "1", "1", "1", "1", "--dot", str(target))
    assert code == 0
    files = sorted(p.name for p in target.glob("*.dot"))
    assert files == ["composition_0.dot", "composition_1.dot"]
    assert (target / "composition_0.dot").read_text().startswith("digraph composition_0 {")
    assert f"wrote 2 dot files to {target}" in out


def test_project_check(capsys):
    code, out, _ = run_cli(capsys, "project-check", "--bounds", "2,2,2,2")
    assert code == 0
    assert out.startswith("PASS (81 exhaustive products, 0 words, 0 graph pairs, 0 mismatches)")


def test_project_check_rejects_bad_bounds():
    with pytest.raises(SystemExit) as excinfo:
        main(["project-check", "--bounds", "1,2,3"])
    assert excinfo.value.code == 2


def test_oracle_check_passes(capsys):
    code, out, _ = run_cli(
        capsys, "oracle-check", "--bounds", "2,2,2,2", "--words", "25", "--pairs", "6",
    )
    assert code == 0
    assert out == "PASS (81 exhaustive products, 25 words, 6 graph pairs, 0 mismatches)\n"


def test_oracle_check_is_deterministic(capsys):
    args = ("oracle-check", "--bounds", "1,1,1,1", "--words", "15", "--pairs", "4",
            "--seed", "7")
    first = run_cli(capsys, *args)
    second = run_cli(capsys, *args)
    assert first == second


def test_render_golden(capsys, tmp_path):
    target = tmp_path / "dots"
    code, out, _ = run_cli(capsys, "render", "2,1;2,2@2", "--dot", str(target))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph: V:0,1/2;3,4/5,6|E:4>2|I:5,6|O:0,1,3"
    assert lines[1] == "projection: (3, 2)"
    assert (target / "render.dot").read_text().startswith("digraph render {")


def test_render_requires_dot():
    with pytest.raises(SystemExit) as excinfo:
        main(["render", "2,1"])
    assert excinfo.value.code == 2


def test_render_bad_matching_index(capsys, tmp_path):
    code, out, err = run_cli(capsys, "render", "2,1;2,2@9", "--dot", str(tmp_path))
    assert code == 1
    assert "out of range" in err


def test_render_bad_chain_syntax(capsys, tmp_path):
    code, _, err = run_cli(capsys, "render", "2;1", "--dot", str(tmp_path))
    assert code == 1
    assert "bad chain step" in err


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "laddergraphs", "normal-order", "a ad"],
        capture_output=True, text=True, timeout=60,
    )
    assert result.returncode == 0
    assert result.stdout == "ad a + 1\n"
