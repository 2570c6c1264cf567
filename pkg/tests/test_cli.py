"""Command-line interface: outputs, flags, and exit codes."""

from __future__ import annotations

import io
import json
import pathlib

import pytest

import polymat.cli as cli
from polymat.polynomials import Polynomial
from polymat.verify import CheckResult

from conftest import reference_document


SAMPLES = pathlib.Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def table_file(tmp_path):
    path = tmp_path / "reference.rank-table"
    path.write_text(reference_document())
    return str(path)


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- validate -----------------------------------------------------------------


def test_validate_rank_table(capsys, table_file):
    code, out, err = run(capsys, ["validate", table_file])
    assert code == 0
    assert "valid rank-table" in out
    assert "ground-set 5 full-rank 3" in out
    assert err == ""


def test_validate_machine_json(capsys, table_file):
    code, out, _ = run(capsys, ["validate", "--machine", table_file])
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "validate"
    assert payload["valid"] is True
    assert payload["ground_set"] == 5
    assert payload["full_rank"] == 3


def test_validate_graph_sample(capsys):
    code, out, _ = run(capsys, ["validate", str(SAMPLES / "k4.graph")])
    assert code == 0
    assert "vertices 4 edges 6 connected" in out


def test_validate_axiom_violation_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.rank-table"
    path.write_text(
        "kind rank-table\nn 1\nrank empty 0\nrank 1 2\n".replace("rank 1 2", "rank 1 -1")
    )
    code, out, err = run(capsys, ["validate", str(path)])
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_validate_monotonicity_violation_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.rank-table"
    path.write_text("kind rank-table\nn 2\nrank empty 0\nrank 1 2\nrank 2 1\nrank 1,2 1\n")
    code, _, err = run(capsys, ["validate", str(path)])
    assert code == 2
    assert "error:" in err


# -- bases ---------------------------------------------------------------------


def test_bases_lists_all_seventeen(capsys, table_file):
    code, out, _ = run(capsys, ["bases", table_file])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "bases 17"
    rows = lines[1:]
    assert len(rows) == 17
    assert all(len(row.split()) == 5 for row in rows)
    assert "1 1 0 1 0" in rows


# -- poly ------------------------------------------------------------------------


def test_poly_direct_output(capsys, table_file):
    code, out, _ = run(capsys, ["poly", table_file])
    assert code == 0
    assert "exterior 1 3 5 6 2" in out
    assert "interior 1 5 8 3" in out
    assert "exterior-pretty 1+3y+5y²+6y³+2y⁴" in out


def test_poly_recursion_matches_direct(capsys, table_file):
    code, direct, _ = run(capsys, ["poly", table_file])
    assert code == 0
    for element in (None, 1, 3, 5):
        argv = ["poly", "--method", "recursion"]
        if element is not None:
            argv += ["--element", str(element)]
        code, out, _ = run(capsys, argv + [table_file])
        assert code == 0
        assert "exterior 1 3 5 6 2" in out
        assert "interior 1 5 8 3" in out
    assert "exterior 1 3 5 6 2" in direct


def test_poly_kind_filter(capsys, table_file):
    code, out, _ = run(capsys, ["poly", "--kind", "exterior", table_file])
    assert code == 0
    assert "exterior 1 3 5 6 2" in out
    assert "interior" not in out


def test_element_with_direct_method_warns(capsys, table_file):
    code, _, err = run(capsys, ["poly", "--element", "2", table_file])
    assert code == 0
    assert "--element only affects" in err


def test_poly_machine_payload(capsys, table_file):
    code, out, _ = run(capsys, ["poly", "--machine", table_file])
    assert code == 0
    payload = json.loads(out)
    assert payload["exterior"]["coefficients"] == [1, 3, 5, 6, 2]
    assert payload["interior"]["coefficients"] == [1, 5, 8, 3]


def test_poly_on_graph_matches_library(capsys):
    from polymat.activity import polynomial_pair
    from polymat.graphs import Graph

    code, out, _ = run(capsys, ["poly", str(SAMPLES / "k4.graph")])
    assert code == 0
    interior, exterior = polynomial_pair(
        Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        .cycle_matroid()
        .to_polymatroid()
    )
    assert f"interior {' '.join(map(str, interior.coeffs))}" in out
    assert f"exterior {' '.join(map(str, exterior.coeffs))}" in out


# -- structure ---------------------------------------------------------------------


def test_structure_report_lines(capsys, table_file):
    code, out, _ = run(capsys, ["structure", table_file])
    assert code == 0
    assert "full-rank 3" in out
    assert "full-deficiency 5" in out
    assert "rank-drop-thresholds 0:0 1:2 2:4 3:5" in out
    assert "deficiency-thresholds 0:0 1:2 2:2 3:3 4:4 5:5" in out
    assert "flats 6" in out
    assert "hyperplanes complement-size 2 count 1: 1,2,3" in out
    assert "hyperplanes complement-size 3 count 1: 4,5" in out
    assert "circuits size 2 count 4:" in out
    assert "circuits size 3 count 2:" in out


def test_structure_machine_payload(capsys, table_file):
    code, out, _ = run(capsys, ["structure", "--machine", table_file])
    assert code == 0
    payload = json.loads(out)
    assert payload["rank_drop_thresholds"] == {"0": 0, "1": 2, "2": 4, "3": 5}
    assert payload["full_deficiency"] == 5
    assert payload["flats"] == [[], [1], [3], [4, 5], [1, 2, 3], [1, 2, 3, 4, 5]]


# -- coeffs -----------------------------------------------------------------------


def test_coeffs_flags_out_of_range_rows(capsys, table_file):
    code, out, _ = run(capsys, ["coeffs", table_file])
    assert code == 0
    assert "exterior guaranteed-range 4" in out
    assert "interior guaranteed-range 2" in out
    assert "exterior i=3 formula 6 enumerated 6 in-range match" in out
    assert "exterior i=4 formula 6 enumerated 2 flagged differs" in out
    assert "interior i=2 formula 11 enumerated 8 flagged differs" in out
    assert out.rstrip().endswith("coeffs ok")


def test_coeffs_machine_payload(capsys, table_file):
    code, out, _ = run(capsys, ["coeffs", "--machine", table_file])
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    ext_rows = payload["exterior"]["rows"]
    assert ext_rows[4] == {
        "i": 4,
        "formula": 6,
        "enumerated": 2,
        "in_range": False,
        "match": False,
    }


def test_coeffs_in_range_mismatch_exits_1(capsys, table_file, monkeypatch):
    def broken(P):
        return Polynomial((5,), var="x"), Polynomial((5,))

    monkeypatch.setattr(cli, "polynomial_pair", broken)
    code, out, _ = run(capsys, ["coeffs", table_file])
    assert code == 1
    assert "coeffs FAILED: in-range mismatch" in out


# -- verify -----------------------------------------------------------------------


def test_verify_rank_table_all_pass(capsys, table_file):
    code, out, _ = run(capsys, ["verify", table_file])
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")
    total = lines[-1].split()[1]
    good, count = total.split("/")
    assert good == count


def test_verify_samples_pass(capsys):
    for name in ("k4.graph", "u23.matroid", "parallel-pair.hypergraph",
                 "triangles.hypergraph", "coverage5.rank-table"):
        code, out, _ = run(capsys, ["verify", str(SAMPLES / name)])
        assert code == 0, name
        assert "FAIL" not in out


def test_verify_failure_exits_1(capsys, table_file, monkeypatch):
    def failing(P):
        return (CheckResult("demo-check", False, "forced failure"),)

    monkeypatch.setattr(cli, "verify_polymatroid", failing)
    code, out, _ = run(capsys, ["verify", table_file])
    assert code == 1
    assert "FAIL demo-check — forced failure" in out
    assert "verify 0/1 checks passed" in out


# -- size guards and input handling ----------------------------------------------


def test_size_guard_rejects_without_override(capsys, table_file):
    code, _, err = run(capsys, ["validate", "--max-n", "4", table_file])
    assert code == 2
    assert "exceeds the limit 4" in err
    assert "--max-n" in err


def test_size_guard_raise_warns(capsys, table_file):
    code, _, err = run(capsys, ["validate", "--max-n", "17", table_file])
    assert code == 0
    assert "warning: size limit raised to 17" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, ["validate", "no-such-file.rank-table"])
    assert code == 2
    assert err.startswith("error: cannot read input")


def test_parse_error_reports_position(capsys, tmp_path):
    path = tmp_path / "broken.graph"
    path.write_text("kind graph\nvertices 2\nedge 1 5\n")
    code, _, err = run(capsys, ["validate", str(path)])
    assert code == 2
    assert "error: line 3, column 8:" in err


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(
        cli.sys, "stdin", io.StringIO("kind graph\nvertices 2\nedge 1 2\n")
    )
    code, out, _ = run(capsys, ["validate", "-"])
    assert code == 0
    assert "valid graph" in out


def test_output_is_deterministic(capsys, table_file):
    _, first, _ = run(capsys, ["structure", "--machine", table_file])
    _, second, _ = run(capsys, ["structure", "--machine", table_file])
    assert first == second
