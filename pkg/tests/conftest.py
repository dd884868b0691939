import json
from dataclasses import replace
from pathlib import Path

import pytest

from algebras import build_from_spec
from config import DEFAULT_SETTINGS

SPECS = Path(__file__).resolve().parent.parent / "specs"


def load_spec(name: str) -> dict:
    with open(SPECS / f"{name}.json", "r") as infile:
        return json.load(infile)


def _negate(value):
    if isinstance(value, str):
        return value[1:] if value.startswith("-") else "-" + value
    return -value


def paired_spec(entries, pairs, label=""):
    """Spectral document with one J-operator; each (i, j, b) sets J e_i = b e_j"""
    m = sum(mult for _, mult in entries)
    J = [[0] * m for _ in range(m)]
    for i, j, b in pairs:
        J[j][i] = b
        J[i][j] = _negate(b)
    return {
        "kind": "spectral",
        "label": label,
        "entries": [{"alpha": alpha, "multiplicity": mult} for alpha, mult in entries],
        "j_operators": [J],
    }


VIOLATORS = {
    "band": paired_spec([("1/4", 1), ("3/4", 1), (1, 1)], [(0, 1, "1/2")], "band"),
    "pairing": paired_spec([("2/5", 1), ("3/5", 1), (1, 1)], [(0, 1, "1/2")], "pairing"),
    "heber": paired_spec(
        [("9/20", 11), ("11/20", 9), (1, 1)], [(i, 11 + i, "sqrt(11/10)") for i in range(9)], "heber"
    ),
    "half_band": paired_spec(
        [("1/2", 4), (1, 1)], [(0, 1, "sqrt(9/10)"), (2, 3, "sqrt(11/10)")], "half band"
    ),
}


@pytest.fixture(scope="session")
def settings():
    return replace(DEFAULT_SETTINGS, random_planes=2000)


@pytest.fixture(scope="session")
def dr_1_2():
    return build_from_spec(load_spec("dr_1_2"))


@pytest.fixture(scope="session")
def hyperbolic_plane():
    return build_from_spec(load_spec("hyperbolic_plane"))


@pytest.fixture(scope="session")
def abelian():
    return build_from_spec(load_spec("abelian"))


@pytest.fixture(scope="session")
def thirds():
    return build_from_spec(load_spec("thirds"))


@pytest.fixture(scope="session", params=sorted(VIOLATORS))
def violator(request):
    return request.param, build_from_spec(VIOLATORS[request.param])
