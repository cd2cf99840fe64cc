"""Point counts, moments and moment generating function terms; stable Hilbert series."""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Union

import sympy
from sympy import Poly, QQ

from . import kunneth
from .motives import Motive, Tate, is_tate, trace

q = sympy.Symbol("q")

QValue = Union[int, str, None]


class NonTateError(ValueError):
    pass


def _poly(coeffs: Dict[int, int] | Poly) -> Poly:
    if isinstance(coeffs, Poly):
        return coeffs.set_domain(QQ)
    expr = sum((sympy.Rational(c) * q**k for k, c in coeffs.items()), sympy.Integer(0))
    return Poly(expr, q, domain=QQ)


def _coeff_dict(p: Poly) -> Dict[int, Fraction]:
    out = {}
    for (k,), c in p.terms():
        c = Fraction(int(c.p), int(c.q))
        if c:
            out[k] = c
    return out


class RationalFunction:
    """Exact quotient of polynomials in q, kept in lowest terms with a monic denominator.

    Laurent polynomials (negative powers of q) are accepted and moved into the
    denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _laurent(num)
        den = _laurent(den if den is not None else {0: 1})
        (n, a), (d, b) = num, den
        # clear negative exponents: multiply both sides by q^shift
        shift = max(-a, -b, 0)
        n = n * Poly(q ** (a + shift), q, domain=QQ) if a + shift else n
        d = d * Poly(q ** (b + shift), q, domain=QQ) if b + shift else d
        if d.is_zero:
            raise ZeroDivisionError("zero denominator")
        g = sympy.gcd(n, d)
        n, d = n.exquo(g), d.exquo(g)
        lc = d.LC()
        self.num, self.den = n.quo_ground(lc), d.quo_ground(lc)

    @classmethod
    def from_motive(cls, m: Motive) -> "RationalFunction":
        if is_tate(m) is not Tate.YES:
            raise NonTateError(f"{m} is not a polynomial in L; evaluate at a numeric q instead")
        return cls(m.tate_coeffs())

    def __eq__(self, other) -> bool:
        other = _rf(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((str(self.num.as_expr()), str(self.den.as_expr())))

    def __add__(self, other) -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _rf(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _rf(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def numerator(self) -> Dict[int, Fraction]:
        return _coeff_dict(self.num)

    def denominator(self) -> Dict[int, Fraction]:
        return _coeff_dict(self.den)

    def __call__(self, value) -> Fraction:
        v = Fraction(value)
        num = sum((c * v**k for k, c in self.numerator().items()), Fraction(0))
        den = sum((c * v**k for k, c in self.denominator().items()), Fraction(0))
        return num / den

    def expand_at_infinity(self, order: int) -> List[Fraction]:
        """Coefficients c_0..c_order of q^-(deg num - deg den) * f as a series in 1/q."""
        n = self.numerator()
        d = self.denominator()
        dn, dd = max(n, default=0), max(d)
        nx = [n.get(dn - i, Fraction(0)) for i in range(order + 1)]
        dx = [d.get(dd - i, Fraction(0)) for i in range(order + 1)]
        return _series_div(nx, dx, order)

    def __str__(self) -> str:
        num = format_poly(self.numerator())
        if self.is_polynomial():
            return num
        return f"({num})/({format_poly(self.denominator())})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _laurent(x):
    """(polynomial, exponent shift) from a Poly, dict {exp: coeff} or scalar."""
    if isinstance(x, Poly):
        return x.set_domain(QQ), 0
    if isinstance(x, (int, Fraction)):
        x = {0: x}
    if isinstance(x, dict):
        low = min((k for k, c in x.items() if c), default=0)
        shifted = {k - low: sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for k, c in x.items()}
        return _poly(shifted), low
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(x)


def _series_div(num: Sequence[Fraction], den: Sequence[Fraction], order: int) -> List[Fraction]:
    if not den or den[0] == 0:
        raise ZeroDivisionError("series with vanishing constant term")
    out: List[Fraction] = []
    for i in range(order + 1):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc / den[0])
    return out


def format_poly(coeffs: Dict[int, Fraction | int], var: str = "q") -> str:
    items = sorted(((k, Fraction(c)) for k, c in coeffs.items() if c), reverse=True)
    if not items:
        return "0"
    out = ""
    for k, c in items:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        a_txt = str(a) if a.denominator == 1 else f"({a})"
        if k == 0:
            body = a_txt
        else:
            mono = var if k == 1 else f"{var}^{k}" if k > 0 else f"{var}^({k})"
            body = mono if a == 1 else a_txt + mono
        out += (sign if out or sign == "-" else "") + body
    return out


def _paren(coeffs) -> str:
    text = format_poly(coeffs)
    return f"({text})" if len([c for c in coeffs.values() if c]) > 1 or "(" in text else text


def _is_symbolic(value: QValue) -> bool:
    return value is None or (isinstance(value, str) and value.lower() == "symbolic")


def class_count(g: int, value: QValue = None):
    """Weighted count of principally polarized g-dimensional abelian varieties over F_q."""
    ec = kunneth.ec_universal(g, 0)
    if _is_symbolic(value):
        return RationalFunction.from_motive(ec)
    return trace(ec, int(value))


def moment(g: int, n: int, value: QValue = None, eig=None):
    """Expected value of (#A(F_q))^n over A in A_g(F_q)."""
    if n < 0:
        raise ValueError(f"moment order must be non-negative, got {n}")
    ec = kunneth.ec_universal(g, n)
    if _is_symbolic(value):
        if is_tate(ec) is not Tate.YES:
            raise NonTateError(
                f"e_c for g={g}, n={n} contains {sorted(str(s) for s in ec.symbols() if not s.is_unit)}; "
                "pass a numeric q"
            )
        return RationalFunction.from_motive(ec) / class_count(g)
    qv = int(value)
    return trace(ec, qv, eig) / class_count(g, qv)


@dataclass(frozen=True)
class MomentReport:
    """Moment written as polynomial + remainder / #A_g(F_q)."""

    g: int
    n: int
    exact: RationalFunction
    quotient: Dict[int, Fraction]
    remainder: Dict[int, Fraction]
    denominator: Dict[int, Fraction]

    def recombine(self) -> RationalFunction:
        return RationalFunction(self.quotient) + RationalFunction(self.remainder, self.denominator)

    def text(self) -> str:
        out = format_poly(self.quotient)
        if not self.remainder:
            return out
        sign, rem = self.signed_remainder()
        return f"{out}{sign}{_paren(rem)}/{_paren(self.denominator)}"

    def signed_remainder(self):
        """(sign, remainder) with the remainder's leading coefficient made positive."""
        if self.remainder[max(self.remainder)] < 0:
            return "-", {k: -c for k, c in self.remainder.items()}
        return "+", self.remainder

    def to_json(self) -> dict:
        enc = lambda d: {str(k): str(v) for k, v in sorted(d.items())}
        return {
            "g": self.g,
            "n": self.n,
            "quotient": enc(self.quotient),
            "remainder": enc(self.remainder),
            "denominator": enc(self.denominator),
        }

    @classmethod
    def from_json(cls, data: dict) -> "MomentReport":
        dec = lambda d: {int(k): Fraction(v) for k, v in d.items()}
        quo, rem, den = dec(data["quotient"]), dec(data["remainder"]), dec(data["denominator"])
        exact = RationalFunction(quo) + RationalFunction(rem, den)
        return cls(int(data["g"]), int(data["n"]), exact, quo, rem, den)


def normal_form(g: int, n: int, exact: RationalFunction) -> MomentReport:
    D = class_count(g)
    if not D.is_polynomial():
        raise AssertionError("class count must be a polynomial")
    # exact = N / D with N a polynomial in q
    N = exact * D
    if not N.is_polynomial():
        raise ValueError(f"moment {exact} is not of the form N/#A_{g}(F_q)")
    quo, rem = sympy.div(N.num, D.num)
    return MomentReport(g, n, exact, _coeff_dict(quo), _coeff_dict(rem), D.numerator())


def mgf_terms(g: int, max_n: int) -> List[MomentReport]:
    """Moments n = 1..max_n in polynomial-plus-proper-fraction form."""
    return [normal_form(g, n, moment(g, n)) for n in range(1, max_n + 1)]


# -- stable cohomology series ------------------------------------------------

@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        k = min(self.order, other.order)
        out = [Fraction(0)] * (k + 1)
        for i in range(k + 1):
            if self.coeffs[i]:
                for j in range(k + 1 - i):
                    out[i + j] += self.coeffs[i] * other.coeffs[j]
        return PowerSeries(tuple(out), k)

    def to_json(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "PowerSeries":
        cs = tuple(Fraction(s) for s in data)
        return cls(cs, len(cs) - 1)


@lru_cache(maxsize=None)
def _odd_partition_table(upto: int) -> tuple:
    table = [1] + [0] * upto
    for part in range(1, upto + 1, 2):
        for i in range(part, upto + 1):
            table[i] += table[i - part]
    return tuple(table)


def odd_partitions(i: int) -> int:
    """Number of partitions of i into odd parts."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return _odd_partition_table(max(i, 64))[i]


def _geometric(step: int, K: int, power: int = 1) -> PowerSeries:
    """(1 - z^step)^(-power) truncated at z^K."""
    base = [Fraction(0)] * (K + 1)
    for i in range(0, K + 1, step):
        base[i] = Fraction(1)
    s = PowerSeries(tuple(base), K)
    out = PowerSeries(tuple([Fraction(1)] + [Fraction(0)] * K), K)
    for _ in range(power):
        out = out * s
    return out


def hilbert_series(n: int, K: int) -> PowerSeries:
    """Hilbert-Poincare series of the stable cohomology of the n-th fiber power, to order K.

    Generators: n + n(n-1)/2 classes in degree 2 and one class in each degree 2i, i odd.
    """
    if n < 0 or K < 0:
        raise ValueError("n and K must be non-negative")
    N = n * (n + 1) // 2
    out = _geometric(2, K, N)
    for i in range(1, K // 2 + 1, 2):
        out = out * _geometric(2 * i, K)
    return out


def lambda_moment_series(n: int, K: int) -> PowerSeries:
    """(1 - x)^(-n(n+1)/2) truncated at x^K."""
    if n < 0 or K < 0:
        raise ValueError("n and K must be non-negative")
    N = n * (n + 1) // 2
    if N == 0:
        cs = [Fraction(1)] + [Fraction(0)] * K
    else:
        cs = [Fraction(comb(N + i - 1, i)) for i in range(K + 1)]
    return PowerSeries(tuple(cs), K)


def asymptotic_consistency(g: int, n: int, order: int = 40) -> int:
    """Length of the common prefix of q^(-ng) E(#A^n) and the lambda series, in powers of 1/q.

    Non-Tate summands of e_c are dropped; the count is capped below the first order
    at which a dropped summand could contribute.
    """
    ec = kunneth.ec_universal(g, n)
    dim = kunneth.dimension(g, n)
    cap = order + 1
    for (sym, l), _ in ec:
        if not sym.is_unit:
            # |trace| of S*L^l is at most dim(S) * q^(l + w/2)
            cap = min(cap, int(dim - l - Fraction(sym.weight, 2)))
    tate = RationalFunction(ec.tate_coeffs()) / class_count(g)
    ours = tate.expand_at_infinity(order)
    ref = lambda_moment_series(n, order)
    count = 0
    while count < min(cap, order + 1) and ours[count] == ref[count]:
        count += 1
    return count


# -- emitters ----------------------------------------------------------------

def reports_csv(reports: Sequence[MomentReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["g", "n", "quotient", "remainder", "denominator"])
    for r in reports:
        w.writerow([r.g, r.n, format_poly(r.quotient), format_poly(r.remainder), format_poly(r.denominator)])
    return buf.getvalue()


def _latex_poly(coeffs) -> str:
    text = format_poly(coeffs)
    return re.sub(r"\^(\d{2,})", r"^{\1}", text)


def reports_latex(reports: Sequence[MomentReport]) -> str:
    lines = [r"\begin{align*}", "\t1"]
    for r in reports:
        quo = _latex_poly(r.quotient)
        frac = ""
        if r.remainder:
            sign, rem = r.signed_remainder()
            frac = sign + r"\frac{%s}{%s}" % (_latex_poly(rem), _latex_poly(r.denominator))
        t = "t" if r.n == 1 else r"\frac{t^{%d}}{%d!}" % (r.n, r.n)
        lines.append("\t&+ (%s%s)%s\\\\" % (quo, frac, t))
    lines[-1] = lines[-1].rstrip("\\")
    lines.append(r"\end{align*}")
    return "\n".join(lines) + "\n"


def reports_json(reports: Sequence[MomentReport]) -> str:
    return json.dumps([r.to_json() for r in reports], sort_keys=True)
