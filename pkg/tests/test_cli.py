"""CLI subcommands, exit codes, and output shapes."""

import json
from pathlib import Path

from hyghost import cli

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_writes_leaves(tmp_path, capsys):
    out = tmp_path / "f.txt"
    code, _, _ = run(capsys, "gen", "--cmesh", "tri_unit", "--level", "2",
                     "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2 * 16 and lines[0].startswith("leaf ")


def test_ghost_csv_and_json(tmp_path, capsys):
    csv = tmp_path / "stats.csv"
    js = tmp_path / "run.json"
    code, out, _ = run(capsys, "ghost", "--cmesh", "hex_cube", "--level", "2",
                       "--ranks", "3", "--verify",
                       "--csv", str(csv), "--json", str(js))
    assert code == 0
    assert out.splitlines()[0] == \
        "rank,elements,ghosts,remotes,visited_leaves,pruned,seconds"
    assert csv.read_text().count("\n") == 4  # header + 3 ranks
    blob = json.loads(js.read_text())
    assert blob["totals"]["leaves"] == 64


def test_compare_prints_all_variants(capsys):
    code, out, _ = run(capsys, "compare", "--cmesh", "tet_cube", "--level", "2",
                       "--ranks", "2")
    assert code == 0
    algos = [ln.split(",")[0] for ln in out.splitlines()[1:]]
    assert algos == ["v1", "v2", "v3"]


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--cmesh", "quad_periodic",
                       "--level", "2", "--ranks", "3", "--algo", "v1")
    assert code == 0 and "pass" in out


def test_tables_and_errors(capsys):
    code, out, _ = run(capsys, "tables", "--shape", "tet", "--table",
                       "tree_face")
    assert code == 0 and out.startswith("type=0 f=0 -> g=0")
    code, _, err = run(capsys, "tables", "--shape", "pyramid", "--table",
                       "extrude")
    assert code == 1 and "error" in err


def test_bad_cmesh_is_exit_1(capsys):
    code, _, err = run(capsys, "ghost", "--cmesh", "klein_bottle")
    assert code == 1 and "error" in err


def test_export_matches_golden(tmp_path, capsys):
    out = tmp_path / "mesh.vtk"
    code, _, _ = run(capsys, "export", "--cmesh", "hybrid_cube", "--level",
                     "1", "--out", str(out))
    assert code == 0
    golden = (FIXTURES / "hybrid_cube_l1.vtk").read_bytes()
    assert out.read_bytes() == golden


def test_bench_reports_efficiency(capsys):
    code, out, _ = run(capsys, "bench", "--cmesh", "hex_cube", "--level", "2",
                       "--ranks", "2")
    assert code == 0
    blob = json.loads(out)
    assert blob["efficiency_run2"] > 0
