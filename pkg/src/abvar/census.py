"""Brute-force moments of #E(F_p) over all elliptic curves over a prime field."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from .modforms import is_prime
from .stats import moment


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusReport:
    p: int
    weighted_class_count: Fraction
    moments: Dict[int, Fraction] = field(default_factory=dict)


def _quadratic_character(p: int) -> List[int]:
    chi = [-1] * p
    chi[0] = 0
    for x in range(1, p):
        chi[x * x % p] = 1
    return chi


def point_counts(p: int) -> Dict[int, int]:
    """{N: number of (a, b) with y^2 = x^3 + ax + b smooth and N points}."""
    if p < 5 or not is_prime(p):
        raise CensusError(f"p must be a prime >= 5, got {p}")
    chi = _quadratic_character(p)
    cubes = [x * x * x % p for x in range(p)]
    hist: Dict[int, int] = {}
    for a in range(p):
        for b in range(p):
            if (4 * a * a * a + 27 * b * b) % p == 0:
                continue
            n = p + 1 + sum(chi[(cubes[x] + a * x + b) % p] for x in range(p))
            # Hasse bound (N - p - 1)^2 <= 4p
            if (n - p - 1) ** 2 > 4 * p:
                raise AssertionError(f"Hasse bound violated for a={a}, b={b}: N={n}")
            hist[n] = hist.get(n, 0) + 1
    return hist


def census_moments(p: int, max_n: int) -> CensusReport:
    hist = point_counts(p)
    # each F_p-isomorphism class appears (p - 1) / #Aut times among the (a, b)
    mass = Fraction(1, p - 1)
    weighted = sum(hist.values()) * mass
    moments = {}
    for n in range(max_n + 1):
        moments[n] = sum(c * Fraction(N) ** n for N, c in hist.items()) * mass / weighted
    return CensusReport(p, weighted, moments)


@dataclass(frozen=True)
class ComparisonRow:
    p: int
    n: int
    census: Fraction
    formula: Fraction

    @property
    def match(self) -> bool:
        return self.census == self.formula


def census_vs_formula(p: int, max_n: int, eig=None) -> List[ComparisonRow]:
    if max_n > 10:
        raise CensusError("comparison is validated for n <= 10")
    report = census_moments(p, max_n)
    return [ComparisonRow(p, n, report.moments[n], Fraction(moment(1, n, p, eig))) for n in range(max_n + 1)]


def rows_csv(rows: List[ComparisonRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "n", "census", "formula", "match"])
    for r in rows:
        w.writerow([r.p, r.n, str(r.census), str(r.formula), str(r.match).lower()])
    return buf.getvalue()
