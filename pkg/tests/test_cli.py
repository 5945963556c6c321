import json
import re
import subprocess
import sys

import pytest

from franklin_squares import fixtures
from franklin_squares.cli import main

ERROR_LINE = re.compile(r"^error: code=[A-Z_]+ .+\n$")


def bundled(filename):
    return str(fixtures._BUNDLED_DIR / filename)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_require_satisfied(capsys):
    code, out, err = run(
        capsys, "verify", bundled("f8_1769.csv"), "--require", "franklin"
    )
    assert code == 0
    assert err == ""
    assert "labels: natural, semi-magic, franklin" in out


def test_verify_require_failed(capsys):
    code, out, err = run(
        capsys, "verify", bundled("m6_franklin_1769.csv"), "--require", "franklin"
    )
    assert code == 1
    assert ERROR_LINE.match(err)
    assert "code=REQUIRE_FAILED" in err
    assert "half_lines" in out  # the report still prints the failures


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", bundled("f8_schindel_2574.csv"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["flags"]["pandiagonal_franklin"] is True
    assert report["target_inferred"] is False


def test_verify_explicit_targets(capsys):
    code, out, _ = run(
        capsys, "verify", bundled("f8_1769_q.csv"), "--target", "balanced",
        "--require", "franklin",
    )
    assert code == 0
    code, _, err = run(
        capsys, "verify", bundled("f8_1769_q.csv"), "--target", "260",
        "--require", "semi-magic",
    )
    assert code == 1
    code, _, err = run(
        capsys, "verify", bundled("f8_1769_q.csv"), "--target", "nonsense"
    )
    assert code == 2
    assert "code=USAGE" in err


def test_verify_stdin(capsys, monkeypatch, tmp_path):
    import io

    text = (fixtures._BUNDLED_DIR / "m6_euler.csv").read_text()
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run(capsys, "verify", "-", "--require", "magic")
    assert code == 0


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "/nonexistent/grid.csv")
    assert code == 2
    assert "code=BAD_FILE" in err
    assert ERROR_LINE.match(err)


def test_verify_malformed_csv(capsys, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3\n")
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 2
    assert "code=BAD_FORMAT" in err


def test_verify_json_input(capsys, tmp_path):
    grid = tmp_path / "sq.json"
    grid.write_text('{"order": 2, "cells": [5, 4, 4, 5]}')
    code, out, _ = run(capsys, "verify", str(grid), "--json")
    assert code == 0
    assert json.loads(out)["target_inferred"] is True


def test_usage_error_is_machine_parsable(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    assert err.startswith("error: code=USAGE ")


def test_decompose_compose_roundtrip(capsys, tmp_path):
    q = tmp_path / "q.csv"
    r = tmp_path / "r.csv"
    out_sq = tmp_path / "m.csv"
    code, _, _ = run(
        capsys, "decompose", bundled("f16_1769.csv"),
        "--out-q", str(q), "--out-r", str(r),
    )
    assert code == 0
    assert q.read_bytes() == (fixtures._BUNDLED_DIR / "f16_1769_q.csv").read_bytes()
    assert r.read_bytes() == (fixtures._BUNDLED_DIR / "f16_1769_r.csv").read_bytes()
    code, _, _ = run(
        capsys, "compose", "--q", str(q), "--r", str(r), "--out", str(out_sq)
    )
    assert code == 0
    assert out_sq.read_bytes() == (
        fixtures._BUNDLED_DIR / "f16_1769.csv"
    ).read_bytes()


def test_decompose_stdout_prints_both_grids(capsys):
    code, out, _ = run(capsys, "decompose", bundled("m6_euler.csv"))
    assert code == 0
    assert out.count("\n\n") == 1  # quotient block, blank line, remainder block


def test_decompose_out_flags_must_pair(capsys, tmp_path):
    code, _, err = run(
        capsys, "decompose", bundled("m6_euler.csv"),
        "--out-q", str(tmp_path / "q.csv"),
    )
    assert code == 2
    assert "code=USAGE" in err


def test_decompose_rejects_non_natural_range(capsys, tmp_path):
    bad = tmp_path / "zero.csv"
    bad.write_text("0,1\n2,3\n")
    code, _, err = run(capsys, "decompose", str(bad))
    assert code == 3
    assert "code=PRECONDITION" in err


def test_compose_order_mismatch(capsys):
    code, _, err = run(
        capsys, "compose", "--q", bundled("q24.csv"), "--r", bundled("m6_euler_r.csv")
    )
    assert code == 3
    assert "code=PRECONDITION" in err


def test_generate_preset_matches_fixture(capsys):
    code, out, _ = run(capsys, "generate", "--preset", "f8_1769")
    assert code == 0
    assert out == (fixtures._BUNDLED_DIR / "f8_1769.csv").read_text()


def test_generate_seeded_with_report(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "generate",
        "--order", "8",
        "--q-seed", "6,7,0,1,2,3,4,5",
        "--r-seed", "3,5,4,2,6,0,1,7",
        "--archetypes", "row_alternate,column_alternate",
        "--report", str(report_path),
    )
    assert code == 0
    assert out == (fixtures._BUNDLED_DIR / "f8_1769.csv").read_text()
    report = json.loads(report_path.read_text())
    assert report["flags"]["franklin"] is True


def test_generate_pair_preset(capsys):
    code, out, _ = run(capsys, "generate", "--preset", "q24_r24")
    assert code == 0
    blocks = out.split("\n\n")
    assert len(blocks) == 2
    want = (fixtures._BUNDLED_DIR / "q24.csv").read_text()
    assert blocks[0] + "\n" == want


def test_generate_unknown_preset(capsys):
    code, _, err = run(capsys, "generate", "--preset", "mystery")
    assert code == 3
    assert "code=UNKNOWN_NAME" in err


def test_generate_unknown_archetype(capsys):
    code, _, err = run(
        capsys,
        "generate",
        "--order", "8",
        "--q-seed", "6,7,0,1,2,3,4,5",
        "--r-seed", "3,5,4,2,6,0,1,7",
        "--archetypes", "spiral,column_alternate",
    )
    assert code == 3
    assert "code=UNKNOWN_NAME" in err


def test_generate_rejects_preset_with_seeds(capsys):
    code, _, err = run(
        capsys, "generate", "--preset", "f8_1769", "--order", "8"
    )
    assert code == 2
    assert "code=USAGE" in err


def test_generate_requires_full_seed_group(capsys):
    code, _, err = run(capsys, "generate", "--order", "8")
    assert code == 2
    assert "--q-seed" in err


def test_generate_bad_seed_values(capsys):
    code, _, err = run(
        capsys,
        "generate",
        "--order", "8",
        "--q-seed", "6,7,0,1,2,3,4,5",
        "--r-seed", "3,5,4,2,6,0,1,6",
        "--archetypes", "row_alternate,column_alternate",
    )
    assert code == 3
    assert "code=PRECONDITION" in err


def test_search_order_4_count(capsys):
    code, out, _ = run(capsys, "search", "--order", "4", "--mode", "count")
    assert code == 0
    outcome = json.loads(out)
    assert outcome == {
        "schema_version": 1,
        "count": 0,
        "exhausted": True,
        "nodes_visited": 480,
        "witnesses": [],
    }


def test_search_order_8_needs_long_run_flag(capsys):
    code, _, err = run(capsys, "search", "--order", "8", "--mode", "count")
    assert code == 3
    assert "code=LONG_RUN_REQUIRED" in err
    code, _, err = run(capsys, "search", "--order", "8", "--mode", "stream")
    assert code == 3


def test_search_first_mode_skips_long_run_gate(capsys):
    code, out, _ = run(
        capsys, "search", "--order", "8", "--mode", "first",
        "--budget", "200000",
    )
    assert code == 0
    outcome = json.loads(out)
    assert outcome["count"] == 1
    assert len(outcome["witnesses"][0]["cells"]) == 64


def test_search_order_6_runs_without_flag(capsys):
    code, out, _ = run(capsys, "search", "--order", "6", "--mode", "count")
    assert code == 0
    assert json.loads(out)["nodes_visited"] == 0


def test_search_stream_prints_summary_line(capsys):
    code, out, _ = run(capsys, "search", "--order", "4", "--mode", "stream")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1
    assert json.loads(lines[0])["exhausted"] is True


def test_search_odd_order(capsys):
    code, _, err = run(capsys, "search", "--order", "5")
    assert code == 3
    assert "code=PRECONDITION" in err


def test_search_invalid_mode(capsys):
    code, _, err = run(capsys, "search", "--order", "4", "--mode", "guess")
    assert code == 2
    assert "code=USAGE" in err


def test_fixtures_list(capsys):
    code, out, _ = run(capsys, "fixtures", "list")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 22
    assert any(line.startswith("f8_1769 ") for line in lines)


def test_fixtures_show_square(capsys):
    code, out, _ = run(capsys, "fixtures", "show", "f8_1769")
    assert code == 0
    assert "provenance:" in out
    assert out.endswith((fixtures._BUNDLED_DIR / "f8_1769.csv").read_text())


def test_fixtures_show_pair(capsys):
    code, out, _ = run(capsys, "fixtures", "show", "f16_1769_aux")
    assert code == 0
    assert "reconstructed_quotient_rows:" in out
    assert out.count("\n\n") == 2  # metadata, quotient, remainder


def test_fixtures_show_unknown(capsys):
    code, _, err = run(capsys, "fixtures", "show", "missing")
    assert code == 3
    assert "code=UNKNOWN_NAME" in err


def test_module_entry_point_runs_as_subprocess():
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "franklin_squares.cli",
            "verify",
            bundled("f8_1769.csv"),
            "--require",
            "franklin",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "franklin" in proc.stdout
