"""Grothendieck group of the Galois representations that occur for g <= 3.

A ``Motive`` is a finite integer combination of terms ``S * L^k`` where ``L`` is
the Lefschetz motive and ``S`` is either the unit or a formal symbol for the
representation attached to a space of (Siegel) cusp forms of level one.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from . import modforms


class MotiveError(ValueError):
    pass


class UnsupportedProduct(MotiveError):
    pass


class EvaluationError(MotiveError):
    pass


@dataclass(frozen=True, order=True)
class Symbol:
    """``kind`` is "1" for the unit, or "S1", "S2", "S3" with their weight parameters."""

    kind: str
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        arity = {"1": 0, "S1": 1, "S2": 2, "S3": 3}
        if self.kind not in arity:
            raise MotiveError(f"unknown symbol kind {self.kind!r}")
        if len(self.params) != arity[self.kind]:
            raise MotiveError(f"{self.kind} takes {arity[self.kind]} parameters, got {self.params}")
        if self.kind == "S1" and self.params[0] < 1:
            raise MotiveError(f"elliptic weight must be positive, got {self.params[0]}")

    @property
    def is_unit(self) -> bool:
        return self.kind == "1"

    @property
    def weight(self) -> int:
        """Motivic weight."""
        p = self.params
        if self.kind == "1":
            return 0
        if self.kind == "S1":
            return p[0] - 1
        if self.kind == "S2":
            return p[0] + 2 * p[1] - 3
        return p[0] + 2 * p[1] + 3 * p[2] - 6

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        return f"{self.kind}[{','.join(str(x) for x in self.params)}]"

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        text = text.strip()
        if text == "1":
            return UNIT
        m = re.fullmatch(r"(S[123])\[(-?\d+(?:,-?\d+)*)\]", text.replace(" ", ""))
        if not m:
            raise MotiveError(f"cannot parse symbol {text!r}")
        return cls(m.group(1), tuple(int(x) for x in m.group(2).split(",")))


UNIT = Symbol("1")


def S1(k: int) -> Symbol:
    return Symbol("S1", (k,))


def S2(j: int, k: int) -> Symbol:
    return Symbol("S2", (j, k))


def S3(a: int, b: int, c: int) -> Symbol:
    return Symbol("S3", (a, b, c))


Key = Tuple[Symbol, int]


class Motive:
    """Element of the Grothendieck group: map (symbol, L-exponent) -> integer."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int] | None = None):
        clean: Dict[Key, int] = {}
        for (sym, l), c in (terms or {}).items():
            if int(l) != l:
                raise MotiveError(f"non-integral L exponent {l}")
            key = (sym, int(l))
            c = clean.get(key, 0) + int(c)
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self._terms = dict(sorted(clean.items(), key=_sort_key, reverse=True))

    @classmethod
    def zero(cls) -> "Motive":
        return cls()

    @classmethod
    def L(cls, k: int = 1, coeff: int = 1) -> "Motive":
        return cls({(UNIT, k): coeff})

    @classmethod
    def const(cls, c: int) -> "Motive":
        return cls({(UNIT, 0): c})

    @classmethod
    def sym(cls, symbol: Symbol, l: int = 0, coeff: int = 1) -> "Motive":
        return cls({(symbol, l): coeff})

    @classmethod
    def tate(cls, coeffs: Mapping[int, int]) -> "Motive":
        """Polynomial in L given as {exponent: coefficient}."""
        return cls({(UNIT, k): c for k, c in coeffs.items()})

    def terms(self) -> Dict[Key, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[Key, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Motive.const(other)
        if not isinstance(other, Motive):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"Motive({format_motive(self)})"

    def __str__(self) -> str:
        return format_motive(self)

    def symbols(self) -> set:
        return {sym for sym, _ in self._terms}

    def is_tate_polynomial(self) -> bool:
        return all(sym.is_unit for sym, _ in self._terms)

    def tate_part(self) -> "Motive":
        return Motive({k: c for k, c in self if k[0].is_unit})

    def tate_coeffs(self) -> Dict[int, int]:
        """{exponent: coefficient} of the unit terms."""
        return {l: c for (sym, l), c in self if sym.is_unit}

    def symbol_part(self, symbol: Symbol) -> Dict[int, int]:
        return {l: c for (sym, l), c in self if sym == symbol}

    def __add__(self, other) -> "Motive":
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other:
            out[k] = out.get(k, 0) + c
        return Motive(out)

    __radd__ = __add__

    def __neg__(self) -> "Motive":
        return Motive({k: -c for k, c in self})

    def __sub__(self, other) -> "Motive":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Motive":
        return _coerce(other) - self

    def __mul__(self, other) -> "Motive":
        other = _coerce(other)
        out: Dict[Key, int] = {}
        for (s1, l1), c1 in self:
            for (s2, l2), c2 in other:
                if not s1.is_unit and not s2.is_unit:
                    raise UnsupportedProduct(f"cannot multiply {s1} by {s2}")
                key = (s2 if s1.is_unit else s1, l1 + l2)
                out[key] = out.get(key, 0) + c1 * c2
        return Motive(out)

    __rmul__ = __mul__

    def twist(self, k: int) -> "Motive":
        """Multiply by L^k."""
        return Motive({(s, l + k): c for (s, l), c in self})

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [{"coeff": c, "l": l, "sym": str(s)} for (s, l), c in self]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "Motive":
        if isinstance(data, str):
            data = json.loads(data)
        out: Dict[Key, int] = {}
        for t in data["terms"]:
            key = (Symbol.parse(t["sym"]), int(t["l"]))
            out[key] = out.get(key, 0) + int(t["coeff"])
        return cls(out)


def _sort_key(item):
    (sym, l), _ = item
    return (str(sym), l)


def _coerce(x) -> Motive:
    if isinstance(x, Motive):
        return x
    if isinstance(x, int):
        return Motive.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a motive")


L = Motive.L()
ONE = Motive.const(1)


# -- text format -----------------------------------------------------------

def _tate_monomial(l: int) -> str:
    if l == 0:
        return ""
    if l == 1:
        return "L"
    return f"L^{l}" if l > 0 else f"L^({l})"


def format_motive(m: Motive) -> str:
    """Render in the usual notation: symbol terms first, then powers of L descending."""
    if not m:
        return "0"
    sym_terms = [(k, c) for k, c in m if not k[0].is_unit]
    unit_terms = sorted(((k, c) for k, c in m if k[0].is_unit), key=lambda t: -t[0][1])
    sym_terms.sort(key=lambda t: (t[0][0], -t[0][1]))
    pieces = []
    for (sym, l), c in sym_terms + unit_terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if sym.is_unit:
            mono = _tate_monomial(l)
            body = (str(a) if a != 1 else "") + mono if mono else str(a)
        else:
            body = (str(a) if a != 1 else "") + str(sym)
            if l:
                body += "*" + _tate_monomial(l)
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += sign + body
    return out


_TERM = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?P<coeff>\d+)?\s*\*?\s*
        (?P<sym>S[123]\[[-\d,\s]+\])?\s*\*?\s*
        (?P<lef>L(?:\^(?:\(?-?\d+\)?|\{-?\d+\}))?)?""",
    re.VERBOSE,
)


def parse_motive(text: str) -> Motive:
    """Inverse of :func:`format_motive` (also accepts spaces and ``L^{k}``)."""
    s = text.strip()
    if s == "0":
        return Motive()
    pos, out = 0, Motive()
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group("coeff") or m.group("sym") or m.group("lef")):
            raise MotiveError(f"cannot parse motive near {s[pos:]!r}")
        if pos > 0 and not m.group("sign"):
            raise MotiveError(f"missing operator near {s[pos:]!r}")
        c = int(m.group("coeff") or 1)
        if m.group("sign") == "-":
            c = -c
        sym = Symbol.parse(m.group("sym")) if m.group("sym") else UNIT
        l = 0
        if m.group("lef"):
            exp = m.group("lef")[1:].lstrip("^").strip("(){}")
            l = int(exp) if exp else 1
        out = out + Motive.sym(sym, l, c)
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return out


# -- dimensions of the cusp form spaces --------------------------------------

class DimensionTable:
    """Known dimensions of level one cusp form spaces, keyed by symbol.

    Elliptic dimensions follow the closed formula; Siegel entries are finite
    tables and anything missing is unknown (``None``), never guessed.
    """

    def __init__(self):
        self.siegel2: Dict[Tuple[int, int], Tuple[int, str]] = {}
        self.siegel3: Dict[Tuple[int, int, int], Tuple[int, str]] = {}
        for l1 in range(8):
            for l2 in range(l1 + 1):
                self.siegel2[(l1 - l2, l2 + 3)] = (0, "S_{j,k} vanishes for lambda_1, lambda_2 <= 7 (Petersen)")
        self.siegel2[(0, 10)] = (1, "Igusa cusp form chi_10, Saito-Kurokawa lift of Delta*E6")
        self.siegel2[(6, 8)] = (1, "chi_{6,8}, general type")
        self.siegel2[(4, 10)] = (1, "chi_{4,10}, general type")
        for l1 in range(7):
            for l2 in range(l1 + 1):
                for l3 in range(l2 + 1):
                    key = (l1 - l2, l2 - l3, l3 + 4)
                    self.siegel3[key] = (0, "S_{a,b,c} vanishes for lambda_i <= 6 (Taibi)")
        self.siegel3[(3, 3, 7)] = (1, "8-dimensional representation with a G2 lift")

    def dimension(self, sym: Symbol) -> Optional[int]:
        if sym.is_unit:
            return 1
        if sym.kind == "S1":
            return modforms.dim_cusp_sl2(sym.params[0])
        table = self.siegel2 if sym.kind == "S2" else self.siegel3
        hit = table.get(sym.params)
        return None if hit is None else hit[0]

    def provenance(self, sym: Symbol) -> Optional[str]:
        if sym.kind == "S1":
            return "dimension formula for SL_2(Z)"
        table = {"S2": self.siegel2, "S3": self.siegel3}.get(sym.kind, {})
        hit = table.get(sym.params)
        return None if hit is None else hit[1]


DIMENSIONS = DimensionTable()

# conventions that make the genus formulas hold for the trivial local system,
# and the Saito-Kurokawa splitting of S2[0,10]
SUBSTITUTIONS: Dict[Symbol, Motive] = {
    S1(2): -L - 1,
    S2(0, 3): Motive.tate({3: -1, 2: -1, 1: -1, 0: -1}),
    S3(0, 0, 4): Motive.tate({6: 1, 5: 1, 4: 1, 3: 2, 2: 1, 1: 1, 0: 1}),
    S2(0, 10): Motive.sym(S1(18)) + Motive.tate({9: 1, 8: 1}),
}


def normalize(m: Motive, table: DimensionTable = DIMENSIONS) -> Motive:
    out = Motive()
    for (sym, l), c in m:
        if sym in SUBSTITUTIONS:
            piece = SUBSTITUTIONS[sym].twist(l) * c
            out = out + normalize(piece, table)
            continue
        if not sym.is_unit and table.dimension(sym) == 0:
            continue
        out = out + Motive.sym(sym, l, c)
    return out


class Tate(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def is_tate(m: Motive, table: DimensionTable = DIMENSIONS) -> Tate:
    dims = [table.dimension(sym) for sym in m.symbols() if not sym.is_unit]
    if not dims:
        return Tate.YES
    if any(d is not None and d > 0 for d in dims):
        return Tate.NO
    return Tate.UNKNOWN


def dual(m: Motive, d: int) -> Motive:
    """Poincare-duality involution: c*S*L^k -> c*S*L^(d - w(S) - k)."""
    return Motive({(sym, d - sym.weight - l): c for (sym, l), c in m})


def factor_prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise EvaluationError(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    r, n = 0, q
    while n % p == 0:
        n //= p
        r += 1
    if n != 1:
        raise EvaluationError(f"{q} is not a prime power")
    return p, r


def trace(m: Motive, q: int, eig=None, table: DimensionTable = DIMENSIONS) -> Fraction:
    """Trace of geometric Frobenius at the prime power ``q``."""
    p, r = factor_prime_power(q)
    eig = eig or _DEFAULT_EIGENVALUES
    total = Fraction(0)
    for (sym, l), c in normalize(m, table):
        qpow = Fraction(q) ** l
        if sym.is_unit:
            total += c * qpow
            continue
        if sym.kind != "S1":
            raise EvaluationError(f"no eigenvalue source for {sym}")
        k = sym.params[0]
        dim = table.dimension(sym)
        if dim == 0:
            continue
        if dim != 1:
            raise EvaluationError(f"no eigenvalue source for {sym} (dimension {dim})")
        total += c * qpow * eig.trace(k, p, r)
    return total


_DEFAULT_EIGENVALUES = modforms.HeckeEigenvalues()
