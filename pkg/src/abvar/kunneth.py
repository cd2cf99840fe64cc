"""Künneth/Leray assembly of e_c for fiber powers of the universal abelian variety."""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Tuple

from .charring import VirtualCharacter, exterior_standard, size, tensor
from .localsys import ec_local_system, h_degrees_a1
from .motives import Motive, dual, format_motive, normalize

# fiber powers for which every symbol that occurs has a known dimension
VALIDATED_RANGE = {1: 10, 2: 7, 3: 6}


class RangeWarning(UserWarning):
    pass


def dimension(g: int, n: int) -> int:
    """Dimension of the n-th fiber power of the universal abelian g-fold."""
    return g * (g + 1) // 2 + n * g


@dataclass(frozen=True)
class GradedCharacter:
    g: int
    n: int
    layers: Tuple[VirtualCharacter, ...]

    def __getitem__(self, j: int) -> VirtualCharacter:
        if 0 <= j < len(self.layers):
            return self.layers[j]
        return VirtualCharacter(self.g)

    def __iter__(self) -> Iterator[Tuple[int, VirtualCharacter]]:
        return iter(enumerate(self.layers))

    @property
    def top(self) -> int:
        return len(self.layers) - 1

    def weights(self) -> set:
        """Every highest weight occurring in some layer."""
        out = set()
        for layer in self.layers:
            out.update(lam for lam, _ in layer)
        return out


@lru_cache(maxsize=None)
def graded_exterior_power(g: int, n: int) -> GradedCharacter:
    """n-fold graded tensor power of the exterior algebra of the standard representation."""
    if n < 0:
        raise ValueError(f"fiber power must be non-negative, got {n}")
    if n == 0:
        return GradedCharacter(g, 0, (VirtualCharacter.trivial(g),))
    prev = graded_exterior_power(g, n - 1)
    ext = [exterior_standard(g, b) for b in range(2 * g + 1)]
    layers = []
    for j in range(2 * g * n + 1):
        acc = VirtualCharacter(g)
        for b in range(max(0, j - prev.top), min(2 * g, j) + 1):
            acc = acc + tensor(prev[j - b], ext[b])
        layers.append(acc)
    return GradedCharacter(g, n, tuple(layers))


def multiplicity(g: int, n: int, j: int, lam) -> int:
    return graded_exterior_power(g, n)[j][tuple(lam)]


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in L, stored as {exponent: coefficient}."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): int(v) for k, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def to_motive(self) -> Motive:
        return Motive.tate(self.coeffs)

    def __str__(self) -> str:
        return format_motive(self.to_motive())


def f_poly(g: int, n: int, lam) -> LaurentPoly:
    """Twist polynomial: sum over j of (-1)^j m^{j,n}_lam L^((j - |lam|)/2)."""
    lam = tuple(lam)
    s = size(lam)
    out: Dict[int, int] = {}
    for j, layer in graded_exterior_power(g, n):
        m = layer[lam]
        if not m:
            continue
        assert (j - s) % 2 == 0, f"parity violation: m^{{{j},{n}}}_{lam} = {m}"
        k = (j - s) // 2
        out[k] = out.get(k, 0) + (-1) ** j * m
    return LaurentPoly(out)


def _check_range(g: int, n: int) -> None:
    if g not in VALIDATED_RANGE:
        raise ValueError(f"genus {g} is not supported")
    if n > VALIDATED_RANGE[g]:
        warnings.warn(
            f"n={n} exceeds the validated range n <= {VALIDATED_RANGE[g]} for g={g}; "
            "cusp form dimensions may be unknown and stay symbolic",
            RangeWarning,
            stacklevel=3,
        )


@lru_cache(maxsize=None)
def ec_universal(g: int, n: int) -> Motive:
    """e_c of the n-th fiber power of the universal abelian g-fold."""
    _check_range(g, n)
    total = Motive()
    for lam in sorted(graded_exterior_power(g, n).weights()):
        ec = ec_local_system(g, lam)
        if ec:
            total = total + f_poly(g, n, lam).to_motive() * ec
    return normalize(total)


@dataclass(frozen=True)
class CohomologyTable:
    g: int
    n: int
    rows: Mapping[int, Motive]

    @property
    def dim(self) -> int:
        return dimension(self.g, self.n)

    def __getitem__(self, i: int) -> Motive:
        return self.rows.get(i, Motive())

    def alternating_sum(self) -> Motive:
        total = Motive()
        for i, m in self.rows.items():
            total = total + (m if i % 2 == 0 else -m)
        return total

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "rows": {str(i): m.to_json() for i, m in sorted(self.rows.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "CohomologyTable":
        rows = {int(i): Motive.from_json(m) for i, m in data["rows"].items()}
        return cls(int(data["g"]), int(data["n"]), rows)


def cohomology_table_g1(n: int) -> CohomologyTable:
    """H^k of the n-th fiber power of the universal elliptic curve, by degree."""
    if n < 0:
        raise ValueError(f"fiber power must be non-negative, got {n}")
    _check_range(1, n)
    rows: Dict[int, Motive] = {}
    for j, layer in graded_exterior_power(1, n):
        for lam, m in layer:
            twist = (j - lam[0]) // 2
            for i, h in h_degrees_a1(lam[0]).items():
                rows[i + j] = rows.get(i + j, Motive()) + (h * m).twist(twist)
    top = 2 * dimension(1, n)
    return CohomologyTable(1, n, {k: rows.get(k, Motive()) for k in range(top + 1)})


def duality_check(table: CohomologyTable, ec: Motive) -> bool:
    """Poincare duality: the alternating sum of H^i, dualized at d = dim, must equal e_c."""
    return dual(normalize(table.alternating_sum()), table.dim) == normalize(ec)


# -- LaTeX -------------------------------------------------------------------

def latex_motive(m: Motive) -> str:
    text = format_motive(m)
    out = []
    for tok in _split_terms(text):
        out.append(_latex_term(tok))
    return "".join(out)


def _split_terms(text: str):
    start = 0
    for i in range(1, len(text)):
        if text[i] in "+-" and text[i - 1] not in "^([,":
            yield text[start:i]
            start = i
    yield text[start:]


_LATEX_TERM = re.compile(r"([+-]?)(\d*)(?:S\d\[([\d,]+)\])?\*?(L(?:\^\(?(-?\d+)\)?)?)?")


def _latex_term(tok: str) -> str:
    sign, coeff, params, lpart, exp = _LATEX_TERM.fullmatch(tok).groups()
    out = sign + coeff
    if params:
        out += r"\mathbb{S}_{\Gamma(1)}[%s]" % params
    if lpart:
        out += r"\mathbb{L}"
        if exp:
            out += "^%s" % (exp if len(exp) == 1 else "{%s}" % exp)
    return out


def latex_table(tables) -> str:
    """Degree-by-fiber-power table of cohomology, one column per table."""
    tables = list(tables)
    if not tables:
        raise ValueError("no tables to render")
    g = tables[0].g
    top = max(max(t.rows) if t.rows else 0 for t in tables)
    cols = "|c|" + "c|" * len(tables)
    head = [r"\(i\)"]
    for t in tables:
        power = "" if t.n == 1 else r"^{\times %d}" % t.n
        head.append(r"\(H^i(\mathcal{X}%s_%d,\mathbb{Q}_\ell)\)" % (power, g))
    lines = [r"\begin{tabular}{%s}" % cols, r"\hline", " & ".join(head) + r"\\", r"\hline"]
    for i in range(top + 1):
        cells = [r"\(%d\)" % i]
        for t in tables:
            # zero cells stay blank except in degree <= 1
            if i > 2 * t.dim or (not t[i] and i > 1):
                cells.append("")
            else:
                cells.append(r"\(%s\)" % latex_motive(t[i]))
        lines.append(" & ".join(cells) + r"\\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"
