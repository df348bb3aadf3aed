import json
import subprocess
import sys

import pytest

from owc.cli import main
from owc.graph6 import graph_from_graph6
from owc.graphs import path_graph
from owc.products import strong


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_compute_owcon(capsys):
    rc, out, err = run_cli(capsys, "compute", "--family", "cycle:4")
    assert rc == 0 and err == ""
    assert out == "gamma_wcon=2 witness={0,1}\n"


def test_compute_gamma(capsys):
    rc, out, _ = run_cli(capsys, "compute", "--family", "path:3", "--invariant", "gamma")
    assert rc == 0
    assert out == "gamma=1 witness={1}\n"


def test_compute_ocon(capsys):
    rc, out, _ = run_cli(capsys, "compute", "--family", "complete_bipartite:2,2",
                         "--invariant", "ocon")
    assert rc == 0
    assert out == "gamma_ocon=2 witness={0,2}\n"


def test_compute_script_p(capsys):
    rc, out, _ = run_cli(capsys, "compute", "--family", "star:3", "--invariant", "script-p")
    assert rc == 0 and out == "script_p=0\n"
    rc, out, _ = run_cli(capsys, "compute", "--family", "path:2", "--invariant", "script-p")
    assert out == "script_p=1\n"


def test_compute_bad_family(capsys):
    rc, out, err = run_cli(capsys, "compute", "--family", "moebius:5")
    assert rc == 2 and out == ""
    assert err.startswith("error:")


def test_compute_cap_exceeded(capsys):
    rc, _, err = run_cli(capsys, "compute", "--family", "path:6", "--cap", "5")
    assert rc == 2
    assert "cap" in err


def test_product_stdout(capsys):
    rc, out, _ = run_cli(capsys, "product", "--kind", "cartesian",
                         "--left", "path:2", "--right", "path:2")
    assert rc == 0
    assert out == ("4 4\n0 1\n0 2\n1 3\n2 3\n"
                   "# map: index g h\n0 0 0\n1 0 1\n2 1 0\n3 1 1\n")


def test_product_graph6_and_lex_alias(capsys):
    rc, out, _ = run_cli(capsys, "product", "--kind", "strong",
                         "--left", "path:3", "--right", "complete:2", "--graph6")
    assert rc == 0
    line = out.splitlines()[0]
    assert graph_from_graph6(line) == strong(path_graph(3), path_graph(2)).graph
    rc, out, _ = run_cli(capsys, "product", "--kind", "lex",
                         "--left", "path:2", "--right", "path:2")
    assert rc == 0 and out.startswith("4 6\n")


def test_product_to_files(tmp_path, capsys):
    dest = tmp_path / "prod.edges"
    rc, out, _ = run_cli(capsys, "product", "--kind", "cartesian",
                         "--left", "path:2", "--right", "path:3",
                         "--out", str(dest))
    assert rc == 0 and out == ""
    assert dest.read_text().startswith("6 7\n")
    map_lines = (tmp_path / "prod.edges.map").read_text().splitlines()
    assert map_lines[0] == "0 0 0"
    assert len(map_lines) == 6


def test_check_pass_and_exit_codes(capsys):
    rc, out, _ = run_cli(capsys, "check", "cartesian",
                         "--left", "path:2", "--right", "path:2")
    assert rc == 0
    assert "verdict=PASS" in out

    rc, out, _ = run_cli(capsys, "check", "strong-kn", "--left", "path:3", "--n", "2")
    assert rc == 1
    assert "verdict=FAIL_LOWER" in out and "witness=(1,0)" in out


def test_check_missing_argument(capsys):
    rc, _, err = run_cli(capsys, "check", "strong-kn", "--left", "path:3")
    assert rc == 2 and "--n" in err
    rc, _, err = run_cli(capsys, "check", "cartesian", "--left", "path:2")
    assert rc == 2 and "--right" in err


def test_check_projection_emits_both_rows(capsys):
    rc, out, _ = run_cli(capsys, "check", "projection",
                         "--left", "path:2", "--right", "path:2", "--sample", "3")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("check_cartesian_projection")
    assert lines[1].startswith("check_lexico_projection")


def test_check_rectangle(capsys):
    rc, out, _ = run_cli(capsys, "check", "rectangle",
                         "--left", "path:2", "--right", "path:3")
    assert rc == 0 and "rectangles_checked" in out


def test_check_csv_to_file(tmp_path, capsys):
    dest = tmp_path / "report.csv"
    rc, out, _ = run_cli(capsys, "check", "cartesian", "--left", "path:2",
                         "--right", "path:2", "--format", "csv", "--out", str(dest))
    assert rc == 0 and out == ""
    lines = dest.read_text().splitlines()
    assert lines[0].startswith("check,kind,")
    assert len(lines) == 2


def test_sweep_with_config(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("cap=12\nchecks=cartesian,strong-kn\nfamily=path:2..3\nkn=2\n")
    rc, out, _ = run_cli(capsys, "sweep", "--config", str(cfg), "--format", "jsonl")
    # the P3 strong-kn row falsifies the claimed equality
    assert rc == 1
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 3 + 2
    assert {r["verdict"] for r in rows} == {"PASS", "FAIL_LOWER"}

    rc2, out2, _ = run_cli(capsys, "sweep", "--config", str(cfg), "--format", "jsonl")
    assert (rc, out) == (rc2, out2)


def test_sweep_cap_override_skips(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("checks=cartesian\nfamily=path:2..3\n")
    rc, out, _ = run_cli(capsys, "sweep", "--config", str(cfg), "--cap", "4")
    assert rc == 0
    assert out.count("SKIPPED_TOO_LARGE") == 2


def test_sweep_bad_config(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("cap=x\n")
    rc, _, err = run_cli(capsys, "sweep", "--config", str(cfg))
    assert rc == 2 and "line 1" in err
    rc, _, err = run_cli(capsys, "sweep", "--config", str(tmp_path / "absent.cfg"))
    assert rc == 2


def test_help_and_usage_exits():
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "bogus-name", "--left", "path:2", "--right", "path:2"])
    assert exc.value.code == 2


def test_installed_entry_point():
    proc = subprocess.run(
        ["owc", "compute", "--family", "cycle:4"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "gamma_wcon=2 witness={0,1}\n"


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "owc.cli", "compute", "--family", "path:3"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "gamma_wcon=2 witness={0,1}\n"
