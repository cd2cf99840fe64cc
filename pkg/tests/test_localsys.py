import json
import shutil

import pytest

from abvar import localsys
from abvar.charring import CharacterError
from abvar.localsys import (
    ec_a1,
    ec_a2,
    ec_a3,
    ec_extr_a2,
    ec_local_system,
    h_degrees_a1,
    localsys_fixtures,
)
from abvar.motives import L, Motive, S1, dual, normalize, parse_motive


def test_ec_a1_examples():
    assert ec_a1(0) == L
    assert ec_a1(10) == parse_motive("-S1[12]-1")
    assert ec_a1(3) == Motive()
    # weights 2..10 carry no cusp forms
    for lam in (2, 4, 6, 8):
        assert ec_a1(lam) == Motive.const(-1)


def test_ec_extr_a2_examples():
    assert ec_extr_a2(7, 7) == Motive.L(9) - 1
    assert ec_extr_a2(2, 0) == -L
    assert ec_extr_a2(1, 0) == Motive()


def test_ec_a2_examples():
    assert ec_a2(0, 0) == Motive.L(3) + Motive.L(2)
    assert ec_a2(1, 1) == Motive.const(-1)
    assert ec_a2(7, 7) == parse_motive("-S1[18]-L^8-1")


def test_ec_a3_examples():
    assert ec_a3(0, 0, 0) == parse_motive("L^6+L^5+L^4+L^3+1")
    assert ec_a3(1, 1, 0) == -L
    assert ec_a3(6, 6, 0) == Motive.sym(S1(18)) + parse_motive("L^10+L^9+L^8")


def test_bad_weights():
    with pytest.raises(CharacterError):
        ec_a2(0, 1)
    with pytest.raises(ValueError):
        ec_a1(-2)
    with pytest.raises(ValueError):
        ec_local_system(4, (0, 0, 0, 0))


@pytest.mark.parametrize("g, count", [(2, 20), (3, 44)])
def test_fixture_tables_reproduce(g, count):
    table = localsys_fixtures(g)
    assert len(table) == count
    for lam, (m, source) in table.items():
        assert source
        assert ec_local_system(g, lam) == normalize(m), lam


def _weights(g, total):
    if g == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weights(g - 1, total - first):
            if rest[0] <= first:
                yield (first,) + rest


@pytest.mark.parametrize("g", [1, 2, 3])
def test_odd_weights_vanish(g):
    for total in range(1, 21, 2):
        for lam in _weights(g, total):
            assert ec_local_system(g, lam) == Motive(), lam


def test_h_degrees_examples():
    assert h_degrees_a1(0) == {0: Motive.const(1)}
    assert h_degrees_a1(2) == {1: Motive.L(3)}
    assert h_degrees_a1(10) == {1: Motive.sym(S1(12)) + Motive.L(11)}
    assert h_degrees_a1(5) == {}


@pytest.mark.parametrize("lam", range(0, 31, 2))
def test_h_degrees_dualise_to_ec(lam):
    # compact support cohomology is the dual of ordinary cohomology twisted by 1 + lam
    h = h_degrees_a1(lam)
    ec = Motive()
    for i, m in h.items():
        ec = ec + (-1) ** (2 - i) * dual(m, 1 + lam)
    assert ec == ec_a1(lam)


def test_fixture_directory_override(tmp_path, monkeypatch):
    shutil.copytree(localsys.fixture_dir(), tmp_path, dirs_exist_ok=True)
    data = json.loads((tmp_path / "localsys_g2.json").read_text())
    data["entries"] = data["entries"][:3]
    (tmp_path / "localsys_g2.json").write_text(json.dumps(data))
    monkeypatch.setenv(localsys.FIXTURE_ENV, str(tmp_path))
    assert localsys.fixture_dir() == tmp_path
    assert len(localsys_fixtures(2)) == 3


def test_fixture_genus_mismatch(tmp_path, monkeypatch):
    (tmp_path / "localsys_g3.json").write_text(json.dumps({"g": 2, "entries": []}))
    monkeypatch.setenv(localsys.FIXTURE_ENV, str(tmp_path))
    with pytest.raises(ValueError):
        localsys_fixtures(3)
