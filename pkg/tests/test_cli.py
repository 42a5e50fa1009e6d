import io
import json

import jsonschema
import pytest

from cases import B, R, bip, chain, drawn
from planarspace.cli import main
from planarspace.plgr import dumps
from planarspace.report import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, g, name="g.plgr"):
    p = tmp_path / name
    p.write_text(dumps(g))
    return str(p)


@pytest.fixture
def grid3(tmp_path, capsys):
    path = str(tmp_path / "grid.plgr")
    assert main(["gen", "--kind", "grid", "--n", "9", "--output", path]) == 0
    capsys.readouterr()
    return path


@pytest.fixture
def p3(tmp_path):
    return write(tmp_path, bip(3, [(0, 1), (2, 1)], a_side={0, 2}), "p3.plgr")


def test_dist_on_grid_prints_4(capsys, grid3):
    # opposite corners of the unit-weight 3x3 grid
    code, out, _ = run(capsys, "dist", "--input", grid3, "--source", "0", "--target", "8")
    assert code == 0
    assert out.strip() == "4"


def test_match_on_p3_is_negative(capsys, p3):
    code, _, _ = run(capsys, "match", "--input", p3)
    assert code == 1


def test_hall_on_p3(capsys, p3):
    code, out, _ = run(capsys, "hall", "--input", p3)
    assert code == 0
    assert out.split("\n")[:2] == ["S 0 2", "N 1"]


def test_verify_dist_50_seeds(capsys):
    code, out, _ = run(capsys, "verify", "--problem", "dist", "--seeds", "50")
    assert code == 0
    assert "50/50" in out


@pytest.mark.parametrize("problem", ["redblue", "oddcycle", "evenpath", "match", "epm"])
def test_verify_other_problems(capsys, problem):
    code, out, _ = run(capsys, "verify", "--problem", problem, "--seeds", "8")
    assert code == 0
    assert "8/8" in out


def test_unknown_flag_exits_2(capsys):
    code, _, err = run(capsys, "dist", "--bogus")
    assert code == 2
    assert "usage" in err


def test_missing_subcommand_exits_2(capsys):
    assert run(capsys)[0] == 2


def test_bad_eps_exits_2(capsys, grid3):
    code, out, err = run(capsys, "dist", "--input", grid3, "--source", "0", "--target", "1", "--eps", "0.7")
    assert code == 2
    assert "eps" in err


def test_parse_error_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.plgr"
    p.write_text("this is not plgr\n")
    assert run(capsys, "oddcycle", "--input", str(p))[0] == 2


def test_missing_file_exits_2(capsys, tmp_path):
    assert run(capsys, "oddcycle", "--input", str(tmp_path / "nope.plgr"))[0] == 2


# one positive and one negative instance per problem family
def _families(tmp_path):
    line = write(tmp_path, chain(3, weights=[2, 3], colors=[R, B]), "line.plgr")
    neg = write(tmp_path, chain(3, weights=[1, 1, -5], closed=True), "neg.plgr")
    tri = write(tmp_path, chain(3, closed=True), "tri.plgr")
    sq = write(tmp_path, chain(4, closed=True), "sq.plgr")
    k2 = write(tmp_path, bip(2, [(0, 1)], a_side={0}), "k2.plgr")
    p3 = write(tmp_path, bip(3, [(0, 1), (2, 1)], a_side={0, 2}), "p3.plgr")
    dr = write(tmp_path, drawn(4, [(0, 1), (2, 3)], [(0, 1)]), "drawn.plgr")
    st = ["--source", "0", "--target", "2"]
    ts = ["--source", "2", "--target", "0"]
    return [
        (["dist", "--input", line] + st, 0),
        (["dist", "--input", line] + ts, 1),
        (["dist", "--input", neg] + st, 2),
        (["path", "--input", line] + st, 0),
        (["path", "--input", line] + ts, 1),
        (["negcycle", "--input", neg], 0),
        (["negcycle", "--input", line], 1),
        (["reach", "--input", line] + st, 0),
        (["reach", "--input", line] + ts, 1),
        (["redblue", "--input", line] + st, 0),
        (["redblue", "--input", line, "--init", "B"] + st, 1),
        (["redblue", "--input", tri] + st, 2),
        (["sparsereach", "--input", dr, "--source", "0", "--target", "1"], 0),
        (["sparsereach", "--input", dr, "--source", "0", "--target", "3"], 1),
        (["sparsereach", "--input", line] + st, 2),
        (["oddcycle", "--input", tri], 0),
        (["oddcycle", "--input", sq], 1),
        (["evenpath", "--input", line] + st, 0),
        (["evenpath", "--input", line, "--source", "0", "--target", "1"], 1),
        (["evenpath", "--input", tri] + st, 2),
        (["match", "--input", k2], 0),
        (["match", "--input", p3], 1),
        (["match", "--input", line], 2),
        (["hall", "--input", p3], 0),
        (["hall", "--input", k2], 1),
        (["separator", "--input", sq, "--r", "2"], 0),
        (["planarize", "--input", dr], 0),
        (["planarize", "--input", line], 2),
    ]


def test_exit_code_contract(capsys, tmp_path):
    for argv, want in _families(tmp_path):
        code, _, _ = run(capsys, *argv)
        assert code == want, argv


def test_json_reports_validate(capsys, tmp_path):
    for argv, want in _families(tmp_path):
        for extra in ([], ["--stats"]):
            code, out, _ = run(capsys, *argv, "--json", *extra)
            report = json.loads(out)
            jsonschema.validate(report, REPORT_SCHEMA)
            assert report["exit_code"] == code == want
            assert report["problem"] == argv[0]
            assert ("peak_cells" in report) == bool(extra)
            assert ("error" in report) == (want == 2)


def test_global_flags_before_subcommand(capsys, grid3):
    code, out, _ = run(capsys, "--json", "--stats", "--eps", "0.3", "dist",
                       "--input", grid3, "--source", "0", "--target", "8")
    assert code == 0
    report = json.loads(out)
    assert report["answer"] == 4
    assert report["params"]["eps"] == 0.3
    assert "peak_cells" in report


def test_stats_text_line(capsys, grid3):
    _, out, _ = run(capsys, "dist", "--input", grid3, "--source", "0", "--target", "8")
    assert "peak_cells" not in out
    _, out, _ = run(capsys, "dist", "--input", grid3, "--source", "0", "--target", "8", "--stats")
    assert out.split("\n")[1].startswith("peak_cells ")


def test_unreachable_json_answer_is_inf(capsys, tmp_path):
    line = write(tmp_path, chain(3))
    code, out, _ = run(capsys, "dist", "--input", line, "--source", "2", "--target", "0", "--json")
    assert code == 1
    assert json.loads(out)["answer"] == "inf"


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(dumps(chain(3, closed=True))))
    assert run(capsys, "oddcycle")[0] == 0


def test_path_prints_forward_vertices(capsys, tmp_path):
    line = write(tmp_path, chain(4, weights=[1, 2, 3]))
    code, out, _ = run(capsys, "path", "--input", line, "--source", "0", "--target", "3")
    assert code == 0
    assert out.split("\n")[:2] == ["0 1 2 3", "weight 6"]


def test_match_construct_pairs(capsys, tmp_path):
    k22 = write(tmp_path, bip(4, [(0, 1), (1, 2), (2, 3), (0, 3)], a_side={0, 2}))
    code, out, _ = run(capsys, "match", "--input", k22, "--construct")
    assert code == 0
    pairs = [tuple(map(int, ln.split())) for ln in out.strip().split("\n")]
    assert len(pairs) == 2
    assert sorted(v for p in pairs for v in p) == [0, 1, 2, 3]


def test_separator_output_sorted(capsys, grid3):
    code, out, _ = run(capsys, "separator", "--input", grid3, "--r", "3")
    assert code == 0
    members = list(map(int, out.split()))
    assert members == sorted(members) and members


def test_gen_is_seed_deterministic(capsys):
    argv = ["gen", "--kind", "triangulation-thinned", "--n", "30", "--wmin=-3", "--wmax", "9", "--colors", "0.5"]
    a = run(capsys, *argv, "--seed", "7")[1]
    b = run(capsys, *argv, "--seed", "7")[1]
    c = run(capsys, *argv, "--seed", "8")[1]
    assert a == b
    assert a != c


def test_planarize_writes_output_and_map(capsys, tmp_path):
    dr = write(tmp_path, drawn(4, [(0, 1), (2, 3)], [(0, 1)]), "drawn.plgr")
    out_path, map_path = tmp_path / "p.plgr", tmp_path / "map.tsv"
    code, _, _ = run(capsys, "planarize", "--input", dr, "--output", str(out_path), "--map", str(map_path))
    assert code == 0
    assert "rot" in out_path.read_text()
    rows = map_path.read_text().strip().split("\n")
    assert rows[0] == "vertex\tkind\tinfo"
    # planarised vertices: 4 originals plus the gadget vertices
    assert len(rows) - 1 > 4
    code, _, _ = run(capsys, "reach", "--input", str(out_path), "--source", "0", "--target", "1")
    assert code == 0
