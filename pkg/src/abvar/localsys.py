"""Euler characteristics e_c(A_g, V_lambda) for g <= 3 as motives."""
from __future__ import annotations

import json
import os
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, Tuple

from .charring import check_weight
from .modforms import dim_cusp_sl2
from .motives import Motive, S1, S2, S3, normalize

FIXTURE_ENV = "ABVAR_FIXTURES"


def _s(k: int) -> int:
    # odd weights carry no cusp forms; weight 2 follows the s[2] = -1 convention
    return dim_cusp_sl2(k)


def _S1(k: int) -> Motive:
    return normalize(Motive.sym(S1(k)))


@lru_cache(maxsize=None)
def ec_a1(lam: int) -> Motive:
    if lam < 0:
        raise ValueError(f"weight must be non-negative, got {lam}")
    if lam % 2:
        return Motive()
    return normalize(-Motive.sym(S1(lam + 2)) - 1)


def h_degrees_a1(lam: int) -> Dict[int, Motive]:
    """Ordinary cohomology H^i(A_1, V_lam) by degree (nonzero degrees only)."""
    if lam < 0:
        raise ValueError(f"weight must be non-negative, got {lam}")
    if lam == 0:
        return {0: Motive.const(1)}
    if lam % 2:
        return {}
    return {1: normalize(Motive.sym(S1(lam + 2)) + Motive.L(lam + 1))}


@lru_cache(maxsize=None)
def ec_extr_a2(l1: int, l2: int) -> Motive:
    check_weight(2, (l1, l2))
    if (l1 + l2) % 2:
        return Motive()
    out = (
        -_s(l1 + l2 + 4) * _S1(l1 - l2 + 2).twist(l2 + 1)
        + _s(l1 - l2 + 2)
        - _s(l1 + l2 + 4) * Motive.L(l2 + 1)
    )
    if l1 % 2 == 0:
        out = out + _S1(l2 + 2) + 1
    else:
        out = out - _S1(l1 + 3)
    return normalize(out)


@lru_cache(maxsize=None)
def ec_a2(l1: int, l2: int) -> Motive:
    check_weight(2, (l1, l2))
    if (l1 + l2) % 2:
        return Motive()
    return normalize(-Motive.sym(S2(l1 - l2, l2 + 3)) + ec_extr_a2(l1, l2))


@lru_cache(maxsize=None)
def ec_extr_a3(l1: int, l2: int, l3: int) -> Motive:
    check_weight(3, (l1, l2, l3))
    if (l1 + l2 + l3) % 2:
        return Motive()
    out = (
        -ec_a2(l1 + 1, l2 + 1)
        - ec_extr_a2(l1 + 1, l2 + 1) * _S1(l3 + 2)
        + ec_a2(l1 + 1, l3)
        + ec_extr_a2(l1 + 1, l3) * _S1(l2 + 3)
        - ec_a2(l2, l3)
        - ec_extr_a2(l2, l3) * _S1(l1 + 4)
    )
    return normalize(out)


@lru_cache(maxsize=None)
def ec_a3(l1: int, l2: int, l3: int) -> Motive:
    check_weight(3, (l1, l2, l3))
    if (l1 + l2 + l3) % 2:
        return Motive()
    return normalize(Motive.sym(S3(l1 - l2, l2 - l3, l3 + 4)) + ec_extr_a3(l1, l2, l3))


def ec_local_system(g: int, lam: Tuple[int, ...]) -> Motive:
    lam = tuple(lam)
    if g == 1:
        check_weight(1, lam)
        return ec_a1(lam[0])
    if g == 2:
        return ec_a2(*lam)
    if g == 3:
        return ec_a3(*lam)
    raise ValueError(f"genus {g} is not supported")


# -- fixtures ----------------------------------------------------------------

def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("abvar") / "fixtures"))


def load_fixture(name: str):
    path = fixture_dir() / name
    with open(path) as f:
        return json.load(f)


def localsys_fixtures(g: int) -> Dict[Tuple[int, ...], Tuple[Motive, str]]:
    """{lambda: (reference motive, unnormalized, source)} for the shipped g = 2, 3 tables."""
    data = load_fixture(f"localsys_g{g}.json")
    if data["g"] != g:
        raise ValueError(f"fixture file for genus {g} declares genus {data['g']}")
    return {
        tuple(e["lambda"]): (Motive.from_json(e["motive"]), e["source"]) for e in data["entries"]
    }
