from math import gcd

import pytest
import sympy

from abvar.modforms import (
    HeckeEigenvalues,
    QExpansion,
    UnsupportedWeight,
    delta_eisenstein,
    delta_product,
    dim_cusp_sl2,
    eigenform,
    eisenstein,
    frob_trace_power,
    hecke_ap,
    qexp,
)


def test_cusp_dimensions():
    assert dim_cusp_sl2(12) == 1
    assert dim_cusp_sl2(2) == -1
    assert dim_cusp_sl2(16) == dim_cusp_sl2(18) == 1
    for k in (0, 4, 6, 8, 10, 14, 13, -12):
        assert dim_cusp_sl2(k) == 0
    assert dim_cusp_sl2(24) == 2


@pytest.mark.parametrize("k", [16, 24, 26])
def test_cusp_dimension_from_eisenstein_basis(k):
    # oracle: rank of the monomials E4^a E6^b of weight k at order 20, minus the Eisenstein line
    N = 20
    rows = []
    for a in range(k // 4 + 1):
        for b in range(k // 6 + 1):
            if 4 * a + 6 * b == k:
                f = QExpansion((1,) + (0,) * N)
                for _ in range(a):
                    f = f * eisenstein(4, N)
                for _ in range(b):
                    f = f * eisenstein(6, N)
                rows.append(list(f.coeffs))
    assert sympy.Matrix(rows).rank() - 1 == dim_cusp_sl2(k)


def test_qexp_examples():
    assert qexp("Delta", 4).coeffs == (0, 1, -24, 252, -1472)
    assert qexp("F18", 4)[2] == -528
    e4, e6 = eisenstein(4, 3), eisenstein(6, 3)
    assert (e4 * e4 * e4 - e6 * e6).coeffs == tuple(1728 * c for c in delta_product(3).coeffs)


def test_delta_constructions_agree():
    assert delta_product(50) == delta_eisenstein(50)


def test_hecke_examples():
    assert hecke_ap(12, 2) == -24
    assert hecke_ap(12, 3) == 252
    assert hecke_ap(18, 2) == -528
    assert hecke_ap(12, 5) == 4830
    with pytest.raises(UnsupportedWeight):
        hecke_ap(24, 2)
    with pytest.raises(ValueError):
        hecke_ap(12, 4)


def test_frob_trace_power_examples():
    assert frob_trace_power(-24, 12, 2, 1) == -24
    assert frob_trace_power(-24, 12, 2, 0) == 2
    assert frob_trace_power(-24, 12, 2, 2) == -3520
    assert qexp("Delta", 4)[4] == frob_trace_power(-24, 12, 2, 2) + 2**11


@pytest.mark.parametrize("k", [12, 18])
def test_multiplicativity(k):
    f = eigenform(k, 900)
    for m in range(1, 31):
        for n in range(1, 31):
            if gcd(m, n) == 1:
                assert f[m * n] == f[m] * f[n]
    for p in (2, 3, 5):
        assert f[p * p] == f[p] ** 2 - p ** (k - 1)


@pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
def test_eigenforms_normalised(k):
    f = eigenform(k, 10)
    assert f[0] == 0 and f[1] == 1
    assert f.weight == k


def test_eigenvalue_source_caches():
    src = HeckeEigenvalues()
    assert src.ap(12, 7) == qexp("Delta", 10)[7]
    assert src.trace(12, 7, 1) == src.ap(12, 7)
    assert src.trace(12, 2, 2) == -3520


def test_truncation_rules():
    a = qexp("E4", 10)
    assert (a * qexp("E6", 5)).order == 5
    with pytest.raises(ValueError):
        a.truncate(11)
    with pytest.raises(ValueError):
        qexp("E4", 0)
