"""Representation ring of Sp(2g) for g <= 3.

Highest weights and weights are plain tuples of integers in the epsilon basis
of the maximal torus. Irreducible weight systems come from Freudenthal's
recursion; tensor products are decomposed with the Brauer-Klimyk rule.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import prod
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Weight = Tuple[int, ...]

MAX_RANK = 3


class CharacterError(ValueError):
    pass


def check_weight(g: int, parts: Iterable[int]) -> Weight:
    """Validate a dominant weight for Sp(2g) and return it as a tuple."""
    if not 1 <= g <= MAX_RANK:
        raise CharacterError(f"rank g={g} outside 1..{MAX_RANK}")
    lam = tuple(int(x) for x in parts)
    if len(lam) != g:
        raise CharacterError(f"weight {lam} must have exactly {g} parts")
    if any(x < 0 for x in lam):
        raise CharacterError(f"weight {lam} has negative parts")
    if any(lam[i] < lam[i + 1] for i in range(g - 1)):
        raise CharacterError(f"weight {lam} is not weakly decreasing")
    return lam


def size(lam: Weight) -> int:
    return sum(lam)


def parity(lam: Weight) -> int:
    return sum(lam) % 2


def rho(g: int) -> Weight:
    return tuple(range(g, 0, -1))


@lru_cache(maxsize=None)
def positive_roots(g: int) -> Tuple[Weight, ...]:
    roots = []
    for i in range(g):
        for j in range(i + 1, g):
            r = [0] * g
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            r = [0] * g
            r[i], r[j] = 1, 1
            roots.append(tuple(r))
        r = [0] * g
        r[i] = 2
        roots.append(tuple(r))
    return tuple(roots)


def _dot(u: Weight, v: Weight) -> int:
    return sum(a * b for a, b in zip(u, v))


def dominant_representative(w: Weight) -> Weight:
    return tuple(sorted((abs(x) for x in w), reverse=True))


def weyl_orbit(w: Weight) -> set:
    """All images of ``w`` under signed permutations of coordinates."""
    out = set()
    for perm in set(permutations(w)):
        for signs in product((1, -1), repeat=len(w)):
            out.add(tuple(s * x for s, x in zip(signs, perm)))
    return out


def weyl_dim(g: int, lam: Iterable[int]) -> int:
    lam = check_weight(g, lam)
    shifted = tuple(a + b for a, b in zip(lam, rho(g)))
    num = prod(_dot(shifted, a) for a in positive_roots(g))
    den = prod(_dot(rho(g), a) for a in positive_roots(g))
    d = Fraction(num, den)
    assert d.denominator == 1
    return int(d)


def _dominant_weights_below(lam: Weight) -> list:
    """Dominant weights mu <= lam in the dominance order, sorted by depth below lam."""
    g = len(lam)
    found = []
    for mu in product(range(lam[0] + 1), repeat=g):
        if any(mu[i] < mu[i + 1] for i in range(g - 1)):
            continue
        diff = [a - b for a, b in zip(lam, mu)]
        partial = [sum(diff[: k + 1]) for k in range(g)]
        if any(c < 0 for c in partial) or partial[-1] % 2:
            continue
        depth = sum(partial[:-1]) + partial[-1] // 2
        found.append((depth, mu))
    found.sort(key=lambda t: (t[0], tuple(-x for x in t[1])))
    return [mu for _, mu in found]


@lru_cache(maxsize=None)
def _dominant_multiplicities(lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    g = len(lam)
    r = rho(g)
    roots = positive_roots(g)
    top = lam[0]
    lr = tuple(a + b for a, b in zip(lam, r))
    norm_top = _dot(lr, lr)
    mult: Dict[Weight, int] = {}
    for mu in _dominant_weights_below(lam):
        if mu == lam:
            mult[mu] = 1
            continue
        total = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                if max(abs(x) for x in nu) > top:
                    break
                c = mult.get(dominant_representative(nu), 0)
                if c:
                    total += c * _dot(nu, alpha)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, r))
        denom = norm_top - _dot(mr, mr)
        value, rem = divmod(2 * total, denom)
        assert rem == 0, (lam, mu)
        if value:
            mult[mu] = value
    return tuple(sorted(mult.items(), reverse=True))


@lru_cache(maxsize=None)
def _weights(lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    out = {}
    for mu, m in _dominant_multiplicities(lam):
        for w in weyl_orbit(mu):
            out[w] = m
    return tuple(sorted(out.items(), reverse=True))


def weight_multiplicities(g: int, lam: Iterable[int]) -> Dict[Weight, int]:
    """Full weight system of the irreducible representation of highest weight ``lam``."""
    return dict(_weights(check_weight(g, lam)))


class VirtualCharacter:
    """Integer combination of irreducible Sp(2g) characters."""

    __slots__ = ("g", "_terms")

    def __init__(self, g: int, terms: Mapping[Iterable[int], int] | None = None):
        self.g = g
        clean: Dict[Weight, int] = {}
        for lam, c in (terms or {}).items():
            lam = check_weight(g, lam)
            c = clean.get(lam, 0) + int(c)
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def irreducible(cls, g: int, lam: Iterable[int]) -> "VirtualCharacter":
        return cls(g, {tuple(lam): 1})

    @classmethod
    def trivial(cls, g: int) -> "VirtualCharacter":
        return cls(g, {(0,) * g: 1})

    def __iter__(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, lam: Iterable[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def terms(self) -> Dict[Weight, int]:
        return dict(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.g == other.g and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.g, tuple(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"VirtualCharacter(g={self.g}, 0)"
        body = " + ".join(f"{c}*V{lam}" for lam, c in self._terms.items())
        return f"VirtualCharacter(g={self.g}, {body})"

    def _check(self, other: "VirtualCharacter") -> None:
        if self.g != other.g:
            raise CharacterError(f"rank mismatch: {self.g} vs {other.g}")

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        self._check(other)
        out = dict(self._terms)
        for lam, c in other:
            out[lam] = out.get(lam, 0) + c
        return VirtualCharacter(self.g, out)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter(self.g, {lam: -c for lam, c in self})

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def scale(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter(self.g, {lam: k * c for lam, c in self})

    def __mul__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return tensor(self, other)

    def dim(self) -> int:
        return sum(c * weyl_dim(self.g, lam) for lam, c in self)

    def weights(self) -> Dict[Weight, int]:
        out: Dict[Weight, int] = {}
        for lam, c in self:
            for w, m in _weights(lam):
                out[w] = out.get(w, 0) + c * m
        return {w: m for w, m in out.items() if m}


def _reflect_to_dominant(v: Weight) -> Tuple[int, Weight] | None:
    """Sign and dominant image of ``v - rho`` for a rho-shifted weight ``v``.

    Returns None when ``v`` lies on a wall of the dot action.
    """
    absv = [abs(x) for x in v]
    if 0 in absv or len(set(absv)) != len(absv):
        return None
    sign = -1 if sum(1 for x in v if x < 0) % 2 else 1
    inversions = sum(1 for i in range(len(absv)) for j in range(i + 1, len(absv)) if absv[i] < absv[j])
    if inversions % 2:
        sign = -sign
    srt = sorted(absv, reverse=True)
    g = len(v)
    return sign, tuple(s - r for s, r in zip(srt, rho(g)))


@lru_cache(maxsize=None)
def _tensor_irreducibles(lam: Weight, nu: Weight) -> Tuple[Tuple[Weight, int], ...]:
    g = len(lam)
    # iterate over the weights of the smaller factor
    if weyl_dim(g, nu) > weyl_dim(g, lam):
        lam, nu = nu, lam
    r = rho(g)
    out: Dict[Weight, int] = {}
    for mu, m in _weights(nu):
        hit = _reflect_to_dominant(tuple(a + b + c for a, b, c in zip(lam, mu, r)))
        if hit is None:
            continue
        sign, dom = hit
        out[dom] = out.get(dom, 0) + sign * m
    return tuple(sorted((k, v) for k, v in out.items() if v))


def tensor(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    if a.g != b.g:
        raise CharacterError(f"rank mismatch: {a.g} vs {b.g}")
    out: Dict[Weight, int] = {}
    for lam, c in a:
        for nu, d in b:
            for rho_, m in _tensor_irreducibles(lam, nu):
                out[rho_] = out.get(rho_, 0) + c * d * m
    return VirtualCharacter(a.g, out)


def decompose_weights(g: int, weights: Mapping[Iterable[int], int]) -> VirtualCharacter:
    """Write a Weyl-symmetric weight multiset as a virtual character.

    Repeatedly strips the lexicographically largest dominant weight.
    """
    remaining: Dict[Weight, int] = {}
    for w, m in weights.items():
        w = tuple(int(x) for x in w)
        if len(w) != g:
            raise CharacterError(f"weight {w} does not have {g} coordinates")
        if m:
            remaining[w] = remaining.get(w, 0) + int(m)
    for w, m in remaining.items():
        for image in weyl_orbit(w):
            if remaining.get(image, 0) != m:
                raise CharacterError(
                    f"weight system is not Weyl-symmetric at {image}: "
                    f"multiplicity {remaining.get(image, 0)} but {w} has {m}"
                )
    result: Dict[Weight, int] = {}
    while remaining:
        top = max(w for w in remaining if w == dominant_representative(w))
        c = remaining[top]
        result[top] = c
        for w, m in _weights(top):
            left = remaining.get(w, 0) - c * m
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return VirtualCharacter(g, result)


@lru_cache(maxsize=None)
def _exterior(g: int, j: int) -> VirtualCharacter:
    basis = []
    for i in range(g):
        for s in (1, -1):
            e = [0] * g
            e[i] = s
            basis.append(tuple(e))
    weights: Dict[Weight, int] = {}
    for subset in combinations(basis, j):
        w = tuple(sum(col) for col in zip(*subset)) if subset else (0,) * g
        weights[w] = weights.get(w, 0) + 1
    return decompose_weights(g, weights)


def exterior_standard(g: int, j: int) -> VirtualCharacter:
    """Character of the j-th exterior power of the standard 2g-dimensional representation."""
    if not 1 <= g <= MAX_RANK:
        raise CharacterError(f"rank g={g} outside 1..{MAX_RANK}")
    if not 0 <= j <= 2 * g:
        raise CharacterError(f"exterior degree {j} outside 0..{2 * g}")
    return _exterior(g, j)


def evaluate_weights(weights: Mapping[Weight, int], point: Iterable[int]) -> Fraction:
    """Evaluate a weight multiset as a Laurent polynomial at an integer torus point."""
    pt = tuple(point)
    total = Fraction(0)
    for w, m in weights.items():
        term = Fraction(m)
        for x, e in zip(pt, w):
            term *= Fraction(x) ** e
        total += term
    return total

