"""Level one modular forms: cusp dimensions, q-expansions and Hecke eigenvalues."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

EIGENFORM_WEIGHTS = (12, 16, 18, 20, 22, 26)

# exponents (a, b) with the eigenform equal to Delta * E4^a * E6^b
_EIGENFORM_MONOMIALS = {12: (0, 0), 16: (1, 0), 18: (0, 1), 20: (2, 0), 22: (1, 1), 26: (2, 1)}


class UnsupportedWeight(ValueError):
    pass


def dim_cusp_sl2(k: int) -> int:
    """Dimension of S_k(SL_2(Z)), with the convention that weight 2 gives -1."""
    if k == 2:
        return -1
    if k <= 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12 - 1
    return k // 12


@dataclass(frozen=True)
class QExpansion:
    """Truncated power series a_0 + a_1 q + ... + a_N q^N with integer coefficients."""

    coeffs: Tuple[int, ...]
    weight: int = 0

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def truncate(self, order: int) -> "QExpansion":
        if order > self.order:
            raise ValueError(f"cannot extend expansion of order {self.order} to {order}")
        return QExpansion(self.coeffs[: order + 1], self.weight)

    def __add__(self, other: "QExpansion") -> "QExpansion":
        n = min(self.order, other.order)
        return QExpansion(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])), self.weight)

    def __neg__(self) -> "QExpansion":
        return QExpansion(tuple(-a for a in self.coeffs), self.weight)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return self + (-other)

    def __mul__(self, other) -> "QExpansion":
        if isinstance(other, int):
            return QExpansion(tuple(other * a for a in self.coeffs), self.weight)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return QExpansion(tuple(out), self.weight + other.weight)

    __rmul__ = __mul__

    def exact_div(self, d: int) -> "QExpansion":
        out = []
        for a in self.coeffs:
            q, r = divmod(a, d)
            if r:
                raise ValueError(f"coefficient {a} not divisible by {d}")
            out.append(q)
        return QExpansion(tuple(out), self.weight)


def divisor_sums(power: int, N: int) -> List[int]:
    """sigma_power(n) for 0 <= n <= N by sieve (entry 0 is unused and set to 0)."""
    sig = [0] * (N + 1)
    for d in range(1, N + 1):
        dp = d**power
        for m in range(d, N + 1, d):
            sig[m] += dp
    return sig


def eisenstein(k: int, N: int) -> QExpansion:
    const = {4: 240, 6: -504}[k]
    sig = divisor_sums(k - 1, N)
    return QExpansion(tuple([1] + [const * sig[n] for n in range(1, N + 1)]), k)


def delta_product(N: int) -> QExpansion:
    """q * prod (1 - q^n)^24 truncated at q^N."""
    # prod (1 - q^n) up to q^(N-1), then raise to the 24th power
    m = max(N - 1, 0)
    poly = [1] + [0] * m
    for n in range(1, m + 1):
        for i in range(m, n - 1, -1):
            poly[i] -= poly[i - n]
    base = QExpansion(tuple(poly))
    acc = QExpansion(tuple([1] + [0] * m))
    for _ in range(24):
        acc = acc * base
    return QExpansion((0,) + acc.coeffs, 12)


def delta_eisenstein(N: int) -> QExpansion:
    e4, e6 = eisenstein(4, N), eisenstein(6, N)
    return (e4 * e4 * e4 - e6 * e6).exact_div(1728)


@lru_cache(maxsize=None)
def qexp(series: str, N: int) -> QExpansion:
    """q-expansion of E4, E6, Delta or F18 = Delta * E6 up to q^N."""
    if N < 1:
        raise ValueError("truncation order must be at least 1")
    name = series.upper()
    if name == "E4":
        return eisenstein(4, N)
    if name == "E6":
        return eisenstein(6, N)
    if name == "DELTA":
        return delta_product(N)
    if name == "F18":
        return qexp("DELTA", N) * qexp("E6", N)
    raise ValueError(f"unknown series {series!r}")


@lru_cache(maxsize=None)
def eigenform(k: int, N: int) -> QExpansion:
    """Normalised eigenform spanning the one-dimensional space S_k."""
    if k not in _EIGENFORM_MONOMIALS or dim_cusp_sl2(k) != 1:
        raise UnsupportedWeight(f"S_{k} is not one-dimensional; no eigenvalue source")
    a, b = _EIGENFORM_MONOMIALS[k]
    f = qexp("DELTA", N)
    for _ in range(a):
        f = f * qexp("E4", N)
    for _ in range(b):
        f = f * qexp("E6", N)
    assert f[1] == 1
    return f


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def hecke_ap(k: int, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return eigenform(k, _expansion_order(p))[p]


def _expansion_order(p: int) -> int:
    # round up so that nearby primes share one cached expansion
    n = 32
    while n < p:
        n *= 2
    return n


def frob_trace_power(a_p: int, k: int, p: int, r: int) -> int:
    """Trace of Frob_{p^r} on the 2-dimensional representation of a weight k eigenform."""
    if r < 0:
        raise ValueError("r must be non-negative")
    prev, cur = 2, a_p
    if r == 0:
        return prev
    pk = p ** (k - 1)
    for _ in range(r - 1):
        prev, cur = cur, a_p * cur - pk * prev
    return cur


class HeckeEigenvalues:
    """Default eigenvalue source: a_p from q-expansions, cached per (k, p)."""

    def __init__(self):
        self._cache = {}
        self._lock = threading.Lock()

    def ap(self, k: int, p: int) -> int:
        key = (k, p)
        val = self._cache.get(key)
        if val is None:
            val = hecke_ap(k, p)
            with self._lock:
                self._cache.setdefault(key, val)
        return val

    def trace(self, k: int, p: int, r: int) -> int:
        return frob_trace_power(self.ap(k, p), k, p, r)

