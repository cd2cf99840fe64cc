"""Named verification checks grouped into suites; used by ``abvar verify``."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Tuple

from . import census, kunneth, localsys, modforms, stats
from .charring import weyl_dim
from .motives import Motive, normalize


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    @property
    def id(self) -> str:
        return f"{self.suite}/{self.name}"


Check = Callable[[], Tuple[bool, str]]


def _fixture_ec(g: int) -> Dict[int, Motive]:
    data = localsys.load_fixture("euler.json")[str(g)]
    return {int(n): Motive.from_json(m) for n, m in data.items()}


def _fixture_tables(g: int) -> Dict[int, kunneth.CohomologyTable]:
    data = localsys.load_fixture(f"cohomology_g{g}.json")
    out = {}
    for n, rows in data.items():
        out[int(n)] = kunneth.CohomologyTable(g, int(n), {int(i): Motive.from_json(m) for i, m in rows.items()})
    return out


def _euler(g: int, n: int) -> Check:
    def run():
        want = normalize(_fixture_ec(g)[n])
        got = kunneth.ec_universal(g, n)
        diff = got - want
        return (not diff, "" if not diff else f"computed - reference = {diff}")

    return run


def _table_g1(n: int) -> Check:
    def run():
        want = _fixture_tables(1)[n]
        got = kunneth.cohomology_table_g1(n)
        bad = [i for i in range(2 * got.dim + 1) if normalize(want[i]) != got[i]]
        return (not bad, f"degrees {bad} differ" if bad else "")

    return run


def _localsys(g: int) -> Check:
    def run():
        bad = []
        for lam, (m, _) in sorted(localsys.localsys_fixtures(g).items()):
            if localsys.ec_local_system(g, lam) != normalize(m):
                bad.append(lam)
        return (not bad, f"weights {bad} differ" if bad else "")

    return run


def _mgf(g: int, max_n: int) -> Check:
    def run():
        data = localsys.load_fixture("mgf.json")[str(g)]
        bad = []
        for r in stats.mgf_terms(g, max_n):
            want = data[str(r.n)]
            quo = {int(k): v for k, v in want["quotient"].items()}
            rem = {int(k): v for k, v in want["remainder"].items()}
            if r.quotient != quo or r.remainder != rem:
                bad.append(r.n)
        return (not bad, f"n in {bad} differ" if bad else "")

    return run


def _census(p: int) -> Check:
    def run():
        rows = census.census_vs_formula(p, 10)
        bad = [r.n for r in rows if not r.match]
        return (not bad, f"n in {bad} differ" if bad else "")

    return run


def _modforms() -> Tuple[bool, str]:
    delta = modforms.qexp("DELTA", 50)
    ok = delta == modforms.delta_eisenstein(50)
    ok &= modforms.hecke_ap(12, 2) == -24 and modforms.hecke_ap(12, 3) == 252
    ok &= all(modforms.hecke_ap(12, p) == delta[p] for p in (2, 3, 5, 7, 11, 13))
    ok &= modforms.hecke_ap(18, 2) == -528
    return ok, ""


def _rank_identity() -> Tuple[bool, str]:
    for g in (1, 2, 3):
        for n in range(7):
            ge = kunneth.graded_exterior_power(g, n)
            for j in range(2 * g * n + 1):
                total = sum(m * weyl_dim(g, lam) for lam, m in ge[j])
                if total != comb(2 * g * n, j):
                    return False, f"g={g} n={n} j={j}: {total}"
    return True, ""


def _parity_symmetry() -> Tuple[bool, str]:
    for g in (1, 2, 3):
        for n in range(7):
            ge = kunneth.graded_exterior_power(g, n)
            top = 2 * g * n
            for j in range(top + 1):
                if ge[j] != ge[top - j]:
                    return False, f"symmetry fails at g={g} n={n} j={j}"
                if any((j - sum(lam)) % 2 or m < 0 for lam, m in ge[j]):
                    return False, f"parity fails at g={g} n={n} j={j}"
    return True, ""


def _duality_g1() -> Tuple[bool, str]:
    bad = [n for n in range(1, 11) if not kunneth.duality_check(kunneth.cohomology_table_g1(n), kunneth.ec_universal(1, n))]
    return not bad, f"n in {bad}" if bad else ""


def _duality_g2() -> Tuple[bool, str]:
    tables = _fixture_tables(2)
    bad = [n for n in range(1, 8) if not kunneth.duality_check(tables[n], kunneth.ec_universal(2, n))]
    return not bad, f"n in {bad}" if bad else ""


def _hilbert() -> Tuple[bool, str]:
    K = 40
    p_odd = [0] * (K + 1)
    for i in range(0, K + 1, 2):
        p_odd[i] = stats.odd_partitions(i // 2)
    for n in range(7):
        hs = stats.hilbert_series(n, K)
        lam = stats.lambda_moment_series(n, K // 2)
        for k in range(K + 1):
            want = sum(lam[i] * p_odd[k - 2 * i] for i in range(k // 2 + 1)) if k % 2 == 0 else 0
            if hs[k] != want:
                return False, f"n={n} z^{k}"
    return True, ""


def _consistency() -> Tuple[bool, str]:
    for g, top in kunneth.VALIDATED_RANGE.items():
        for n in range(1, top + 1):
            c = stats.asymptotic_consistency(g, n)
            if c < g + 1:
                return False, f"g={g} n={n}: {c}"
    return True, ""


def suites() -> Dict[str, Dict[str, Check]]:
    fixtures: Dict[str, Check] = {}
    for g, top in kunneth.VALIDATED_RANGE.items():
        for n in range(1, top + 1):
            fixtures[f"euler_g{g}_n{n:02d}"] = _euler(g, n)
    for n in range(1, 11):
        fixtures[f"table_g1_n{n:02d}"] = _table_g1(n)
    fixtures["localsys_g2"] = _localsys(2)
    fixtures["localsys_g3"] = _localsys(3)
    for g, top in ((1, 9), (2, 6), (3, 5)):
        fixtures[f"mgf_g{g}"] = _mgf(g, top)
    invariants: Dict[str, Check] = {
        "modforms": _modforms,
        "rank_identity": _rank_identity,
        "parity_symmetry": _parity_symmetry,
        "duality_g1": _duality_g1,
        "duality_g2_fixture": _duality_g2,
        "hilbert_series": _hilbert,
        "asymptotic_consistency": _consistency,
    }
    cen = {f"census_p{p:02d}": _census(p) for p in (5, 7, 11, 13)}
    return {"fixtures": fixtures, "invariants": invariants, "census": cen}


def run_suite(name: str = "all") -> List[CheckResult]:
    table = suites()
    names = sorted(table) if name == "all" else [name]
    out = []
    for s in names:
        if s not in table:
            raise KeyError(f"unknown suite {s!r}")
        for check, fn in sorted(table[s].items()):
            try:
                ok, detail = fn()
            except Exception as exc:  # a crashing check is a failing check
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(CheckResult(s, check, bool(ok), detail))
    return out
