import json
import math
from fractions import Fraction

import numpy as np
import pytest

from core import AlgebraSpecError
from core import InexactBlockData
from utils.experiment import experiment
from utils.numbers import parse_number
from utils.numbers import recognize_rational
from utils.numbers import to_jsonable
from utils.random import Random


@pytest.mark.parametrize(
    "value, expected",
    [(3, 3), ("2/6", Fraction(1, 3)), (" -4 / 3 ", Fraction(-4, 3)), ("7", Fraction(7)), (0.25, 0.25)],
)
def test_parse_rationals(value, expected):
    assert parse_number(value) == expected


def test_parse_roots():
    assert parse_number("sqrt(4/3)") == pytest.approx(math.sqrt(4.0 / 3.0))
    assert parse_number("-sqrt(2)") == pytest.approx(-math.sqrt(2.0))


@pytest.mark.parametrize("value", [True, "1/0", "sqrt(1/0)", "pi", None, [1]])
def test_parse_rejections(value):
    with pytest.raises(AlgebraSpecError):
        parse_number(value)


def test_recognize_rational():
    assert recognize_rational(1.0 / 3.0) == Fraction(1, 3)
    assert recognize_rational(Fraction(2, 7)) == Fraction(2, 7)
    with pytest.raises(InexactBlockData):
        recognize_rational(math.sqrt(2.0), max_denominator=100)


def test_to_jsonable():
    doc = to_jsonable({"r": Fraction(3, 4), "n": np.int64(2), "a": np.array([0.5, 1.0]), "t": (1, None), 3: float("inf")})
    assert doc == {"r": "3/4", "n": 2, "a": [0.5, 1.0], "t": [1, None], "3": "inf"}
    assert json.loads(json.dumps(doc)) == doc
    assert to_jsonable(0.1) == 0.1
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_random_is_deterministic():
    first, again = Random(5), Random(5)
    assert np.array_equal(first.normal((3,)), again.normal((3,)))
    assert not np.array_equal(first.normal((3,)), Random(6).normal((3,)))


def test_random_orthogonal():
    Q = Random().orthogonal(5)
    assert Q.dtype == np.float64
    assert np.allclose(Q.T @ Q, np.eye(5))
    assert Random().orthogonal(0).shape == (0, 0)


def _power(base, exponent, offset=0):
    return base ** exponent + offset


def test_experiment_grid_order():
    runs = experiment("base, exponent", [[2, 3], [1, 2, 3]])(_power)
    assert runs.shape == (2, 3)
    assert runs.run() == [2, 4, 8, 3, 9, 27]
    assert runs.bind(offset=1).run() == [3, 5, 9, 4, 10, 28]


def test_experiment_validation():
    with pytest.raises(ValueError):
        experiment("base", [[1], [2]])
    with pytest.raises(ValueError, match="without defaults"):
        experiment("base", [[1]])(_power).run()
    with pytest.raises(ValueError, match="unused"):
        experiment(["base", "exponent", "scale"], [[1], [1], [1]])(_power).run()
    with pytest.raises(ValueError, match="also bound"):
        experiment("base, exponent", [[1], [1]])(_power).bind(base=2).run()
