import io
import json
import shutil
import subprocess
import sys
from fractions import Fraction

import pytest

from abvar import census, kunneth, localsys, stats
from abvar.cli import EmitError, emit, parse_document, run
from abvar.motives import L, Motive, parse_motive


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_euler_text():
    code, out, _ = call("euler", "--g", "2", "--n", "3", "--format", "text")
    assert code == 0
    assert out == "L^9+7L^8+27L^7+49L^6+46L^5+3L^4-42L^3-53L^2-24L-7\n"


def test_moment_symbolic_and_numeric():
    assert call("moment", "--g", "1", "--n", "1") == (0, "q+1\n", "")
    assert call("moment", "--g", "1", "--n", "2", "--q", "5")[1] == "204/5\n"
    code, _, err = call("moment", "--g", "1", "--n", "10")
    assert code == 1 and "numeric" in err


def test_mgf_text():
    code, out, _ = call("mgf", "--g", "1", "--max-n", "2")
    assert out == "n=1: q+1\nn=2: q^2+3q+1-1/q\n"


def test_census_compare():
    code, out, _ = call("census", "--p", "5", "--max-n", "2", "--compare")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert all(line.endswith("match=true") for line in lines)
    assert lines[2] == "p=5 n=2 census=204/5 formula=204/5 match=true"


def test_cohomology_latex_column():
    code, out, _ = call("cohomology", "--n", "1", "--format", "latex")
    assert code == 0
    assert r"\(0\) & \(1\)\\" in out.splitlines()
    assert r"\(2\) & \(\mathbb{L}\)\\" in out.splitlines()
    assert call("cohomology", "--g", "2", "--n", "1")[0] == 1


def test_hecke_and_series():
    assert call("hecke", "--p", "5")[1] == "4830\n"
    assert call("hecke", "--k", "18", "--p", "2")[1] == "-528\n"
    assert call("hecke", "--q", "4")[1] == "-3520\n"
    assert call("hecke", "--order", "3")[1] == "0 1 -24 252\n"
    assert call("series", "--kind", "lambda", "--n", "2", "--order", "4")[1] == "1 3 6 10 15\n"
    assert call("series", "--kind", "odd", "--order", "5")[1] == "1 1 1 2 2 3\n"
    assert call("series", "--n", "0", "--order", "6")[1] == "1 0 1 0 1 0 2\n"


@pytest.mark.parametrize("argv", [
    [],
    ["euler", "--g", "4", "--n", "1"],
    ["euler", "--g", "1"],
    ["moment", "--g", "1", "--n", "1", "--q", "x"],
    ["census", "--p", "4"],
    ["euler", "--g", "1", "--n", "1", "--format", "pdf"],
    ["census", "--p", "5", "--compare", "--format", "latex"],
])
def test_flag_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


def test_range_warning_goes_to_stderr():
    code, out, err = call("euler", "--g", "1", "--n", "11")
    assert code == 0 and out
    assert err.startswith("warning: n=11")


def test_verify_suite_pass_and_fail(tmp_path, monkeypatch):
    code, out, _ = call("verify", "--suite", "census")
    assert code == 0
    assert out.splitlines() == [f"PASS census/census_p{p:02d}" for p in (5, 7, 11, 13)]

    # a corrupted fixture must turn the run red with exit status 2
    shutil.copytree(localsys.fixture_dir(), tmp_path, dirs_exist_ok=True)
    data = json.loads((tmp_path / "localsys_g2.json").read_text())
    data["entries"][0]["motive"] = Motive.L(7).to_json()
    (tmp_path / "localsys_g2.json").write_text(json.dumps(data))
    monkeypatch.setenv(localsys.FIXTURE_ENV, str(tmp_path))
    code, out, err = call("verify", "--suite", "fixtures")
    assert code == 2
    assert "FAIL fixtures/localsys_g2" in out
    assert "fixtures/localsys_g2" in err


def test_verify_output_is_sorted():
    _, out, _ = call("verify", "--suite", "invariants")
    ids = [line.split()[1] for line in out.splitlines()]
    assert ids == sorted(ids)
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_emit_motive_formats():
    assert emit(Motive.L(2) + L, "json") == '{"terms":[{"coeff":1,"l":2,"sym":"1"},{"coeff":1,"l":1,"sym":"1"}]}\n'
    assert emit(parse_motive("-S1[12]-1"), "text") == "-S1[12]-1\n"
    assert emit(parse_motive("-S1[12]-1"), "csv") == "sym,l,coeff\nS1[12],0,-1\n1,0,-1\n"
    with pytest.raises(EmitError):
        emit(object(), "text")
    with pytest.raises(EmitError):
        emit(stats.lambda_moment_series(1, 2), "latex")


@pytest.mark.parametrize("value", [
    kunneth.ec_universal(3, 6),
    kunneth.cohomology_table_g1(5),
    stats.mgf_terms(2, 3),
    census.census_moments(7, 4),
    census.census_vs_formula(5, 3),
    stats.hilbert_series(2, 8),
])
def test_json_round_trip(value):
    assert parse_document(emit(value, "json")) == value


def test_single_report_round_trips_as_list():
    r = stats.mgf_terms(1, 2)[1]
    assert parse_document(emit(r, "json")) == [r]


def test_scalar_emit():
    assert emit(Fraction(3, 4), "json") == '"3/4"\n'
    assert emit(7, "text") == "7\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abvar", "moment", "--g", "2", "--n", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q^2+q+1-1/(q^3+q^2)"
