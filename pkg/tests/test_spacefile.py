import glob
import os

import pytest

from asymspace.exact import Subspace
from asymspace.gauge import GaugeError
from asymspace.spacefile import (
    SpaceFileError,
    SpaceFileSyntaxError,
    SpaceFileValidationError,
    format_rational,
    load_space_file,
    parse_space_file,
    serialize,
)

ROOT = os.path.dirname(os.path.dirname(__file__))
SPACES = sorted(glob.glob(os.path.join(ROOT, "spaces", "*.json")))


def test_hrep_file():
    sf = parse_space_file('{"hrep": [["1", "0"], [0, 1], ["0", "-1"]], "subspaces": {"Y": [[0, "1/2"]]}}')
    assert sf.dimension == 2 and sf.kind == "hrep"
    assert sf.gauge.functionals == ((1, 0), (0, 1), (0, -1))
    assert sf.subspace("Y") == Subspace.span([(0, 1)], 2)
    with pytest.raises(KeyError):
        sf.subspace("Z")


def test_vrep_and_builtin_files():
    sf = parse_space_file('{"vrep": {"points": [[1, 1], [1, -1]], "rays": [[-1, 0]]}}')
    assert sf.kind == "vrep" and sf.gauge.dim == 2
    b = parse_space_file('{"builtin": "orthant-m", "params": {"m": 3}}')
    assert b.dimension == 3 and b.fixture.name == "orthant-m"


def test_float_literal_has_path():
    with pytest.raises(SpaceFileValidationError) as e:
        parse_space_file('{"hrep": [[1, 0], [0, 2.5]]}')
    assert e.value.path == "$.hrep[1][1]"
    assert "floating-point" in str(e.value)


def test_syntax_error_has_position():
    with pytest.raises(SpaceFileSyntaxError) as e:
        parse_space_file('{"hrep": [[1, 0],\n  [0 1]]}')
    assert e.value.line == 2


@pytest.mark.parametrize(
    "text, path",
    [
        ("[]", "$"),
        ('{"hrep": [[1]], "colour": 1}', "$"),
        ('{"hrep": [[1]], "vrep": {"points": [[0]]}}', "$"),
        ('{"hrep": [[1, 0], [1]]}', "$.hrep[1]"),
        ('{"dimension": 3, "hrep": [[1, 0]]}', "$.hrep[0]"),
        ('{"hrep": [["x"]]}', "$.hrep[0][0]"),
        ('{"hrep": [[true]]}', "$.hrep[0][0]"),
        ('{"builtin": "nope"}', "$.builtin"),
        ('{"builtin": "linf-n", "params": {"n": 0}}', "$.params"),
        ('{"builtin": "linf-n", "dimension": 4}', "$.dimension"),
        ('{"hrep": [[1], [0]], "params": {}}', "$.params"),
        ('{"hrep": [[1], [0]], "subspaces": {"A": [[1, 2]]}}', "$.subspaces.A[0]"),
    ],
)
def test_validation_errors(text, path):
    with pytest.raises(SpaceFileValidationError) as e:
        parse_space_file(text)
    assert e.value.path == path


def test_gauge_errors_propagate():
    with pytest.raises(GaugeError):
        parse_space_file('{"hrep": [[1, 0], [0, 1]]}')
    assert issubclass(SpaceFileSyntaxError, SpaceFileError)


def test_format_rational():
    assert format_rational(3) == "3"
    assert format_rational("-6/4") == "-3/2"


@pytest.mark.parametrize("path", SPACES, ids=os.path.basename)
def test_round_trip(path):
    sf = load_space_file(path)
    text = serialize(sf)
    again = parse_space_file(text)
    assert again == sf
    assert serialize(again) == text
