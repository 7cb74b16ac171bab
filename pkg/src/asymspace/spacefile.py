"""Space files: a small JSON format describing one gauge.

    {"dimension": 2, "hrep": [["1", "0"], [0, 1], [0, -1]],
     "subspaces": {"Y": [["1", "0"]]}}

    {"vrep": {"points": [["1", "1"], ["1", "-1"]], "rays": [["-1", "0"]]}}

    {"builtin": "orthant-m", "params": {"m": 3}}

Scalars are JSON integers or strings "p/q".  Floating-point literals are
rejected with the JSON path of the offending value.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exact import Subspace, as_rational
from .fixtures import Fixture, builtin, fixture_names
from .gauge import AsymmetricGauge, validate_gauge
from .polyhedra import VRep

__all__ = [
    "SpaceFileError",
    "SpaceFileSyntaxError",
    "SpaceFileValidationError",
    "SpaceFile",
    "parse_space_file",
    "load_space_file",
    "serialize",
    "format_rational",
]


class SpaceFileError(ValueError):
    pass


class SpaceFileSyntaxError(SpaceFileError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class SpaceFileValidationError(SpaceFileError):
    def __init__(self, msg: str, path: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


class _FloatLiteral(str):
    pass


_TOP_KEYS = {"dimension", "hrep", "vrep", "builtin", "params", "subspaces", "name"}


@dataclass(frozen=True)
class SpaceFile:
    dimension: int
    kind: str  # "hrep" | "vrep" | "builtin"
    data: object
    subspaces: Mapping[str, tuple] = field(default_factory=dict)
    name: str | None = None
    _gauge: list = field(default_factory=list, compare=False, repr=False)

    @property
    def fixture(self) -> Fixture | None:
        if self.kind != "builtin":
            return None
        name, params = self.data
        return builtin(name, **dict(params))

    @property
    def gauge(self) -> AsymmetricGauge:
        if not self._gauge:
            if self.kind == "hrep":
                g = validate_gauge({"hrep": self.data, "dimension": self.dimension})
            elif self.kind == "vrep":
                g = validate_gauge(
                    {"vrep": {"points": self.data.points, "rays": self.data.rays},
                     "dimension": self.dimension}
                )
            else:
                g = self.fixture.gauge
            self._gauge.append(g)
        return self._gauge[0]

    def subspace(self, name: str) -> Subspace:
        try:
            basis = self.subspaces[name]
        except KeyError:
            raise KeyError(f"no subspace named {name!r} in the space file") from None
        return Subspace.span(basis, self.dimension)


def _scalar(v, path: str) -> Fraction:
    if isinstance(v, _FloatLiteral):
        raise SpaceFileValidationError(f"floating-point literal {v} is not allowed; use \"p/q\"", path)
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise SpaceFileValidationError(f"expected an integer or a \"p/q\" string, got {v!r}", path)
    try:
        return as_rational(v)
    except (ValueError, ZeroDivisionError):
        raise SpaceFileValidationError(f"not a rational literal: {v!r}", path) from None


def _vector(v, path: str, dim: int | None) -> tuple:
    if not isinstance(v, list):
        raise SpaceFileValidationError("expected a list of scalars", path)
    out = tuple(_scalar(c, f"{path}[{i}]") for i, c in enumerate(v))
    if dim is not None and len(out) != dim:
        raise SpaceFileValidationError(f"expected {dim} coordinates, got {len(out)}", path)
    if not out:
        raise SpaceFileValidationError("empty vector", path)
    return out


def _vectors(v, path: str, dim: int | None) -> tuple:
    if not isinstance(v, list):
        raise SpaceFileValidationError("expected a list of vectors", path)
    out = []
    for i, row in enumerate(v):
        vec = _vector(row, f"{path}[{i}]", dim)
        dim = len(vec)
        out.append(vec)
    return tuple(out)


def _int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpaceFileValidationError("expected an integer", path)
    return v


def parse_space_file(text: str) -> SpaceFile:
    """Parse and validate; the described gauge is built eagerly."""
    try:
        doc = json.loads(text, parse_float=_FloatLiteral)
    except json.JSONDecodeError as e:
        raise SpaceFileSyntaxError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise SpaceFileValidationError("top level must be an object", "$")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise SpaceFileValidationError(f"unknown keys: {', '.join(sorted(extra))}", "$")
    kinds = [k for k in ("hrep", "vrep", "builtin") if k in doc]
    if len(kinds) != 1:
        raise SpaceFileValidationError("exactly one of hrep, vrep, builtin is required", "$")
    kind = kinds[0]
    dim = _int(doc["dimension"], "$.dimension") if "dimension" in doc else None
    if dim is not None and dim < 1:
        raise SpaceFileValidationError("dimension must be positive", "$.dimension")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SpaceFileValidationError("expected a string", "$.name")

    if kind == "hrep":
        data = _vectors(doc["hrep"], "$.hrep", dim)
        if not data:
            raise SpaceFileValidationError("at least one functional is required", "$.hrep")
        dim = len(data[0])
    elif kind == "vrep":
        v = doc["vrep"]
        if not isinstance(v, dict) or set(v) - {"points", "rays"}:
            raise SpaceFileValidationError("expected {\"points\": [...], \"rays\": [...]}", "$.vrep")
        points = _vectors(v.get("points", []), "$.vrep.points", dim)
        if not points:
            raise SpaceFileValidationError("at least one point is required", "$.vrep.points")
        dim = len(points[0])
        rays = _vectors(v.get("rays", []), "$.vrep.rays", dim)
        data = VRep(points, rays)
    else:
        bname = doc["builtin"]
        if bname not in fixture_names():
            raise SpaceFileValidationError(
                f"unknown builtin {bname!r}; known: {', '.join(fixture_names())}", "$.builtin"
            )
        params = doc.get("params", {})
        if not isinstance(params, dict):
            raise SpaceFileValidationError("expected an object", "$.params")
        params = {k: _int(val, f"$.params.{k}") for k, val in sorted(params.items())}
        try:
            fx = builtin(bname, **params)
        except ValueError as e:
            raise SpaceFileValidationError(str(e), "$.params") from None
        data = (bname, tuple(sorted(fx.params.items())))
        if dim is not None and dim != fx.gauge.dim:
            raise SpaceFileValidationError(
                f"builtin {bname} lives in dimension {fx.gauge.dim}", "$.dimension"
            )
        dim = fx.gauge.dim
    if "params" in doc and kind != "builtin":
        raise SpaceFileValidationError("params only apply to builtins", "$.params")

    subs = {}
    raw_subs = doc.get("subspaces", {})
    if not isinstance(raw_subs, dict):
        raise SpaceFileValidationError("expected an object", "$.subspaces")
    for key, basis in raw_subs.items():
        subs[key] = _vectors(basis, f"$.subspaces.{key}", dim)

    sf = SpaceFile(dim, kind, data, subs, name)
    sf.gauge  # validate now; gauge errors propagate unchanged
    return sf


def load_space_file(path) -> SpaceFile:
    with open(path, encoding="utf-8") as fh:
        return parse_space_file(fh.read())


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_vectors(vs) -> list:
    return [[format_rational(c) for c in v] for v in vs]


def serialize(sf: SpaceFile) -> str:
    """Canonical JSON text; parsing it gives back an equal SpaceFile."""
    doc: dict = {}
    if sf.name is not None:
        doc["name"] = sf.name
    doc["dimension"] = sf.dimension
    if sf.kind == "hrep":
        doc["hrep"] = _fmt_vectors(sf.data)
    elif sf.kind == "vrep":
        doc["vrep"] = {"points": _fmt_vectors(sf.data.points), "rays": _fmt_vectors(sf.data.rays)}
    else:
        name, params = sf.data
        doc["builtin"] = name
        if params:
            doc["params"] = dict(params)
    if sf.subspaces:
        doc["subspaces"] = {k: _fmt_vectors(v) for k, v in sf.subspaces.items()}
    return json.dumps(doc, indent=2) + "\n"
