"""Asymmetric norms on Q^n.

Three representations are supported:

* ``hrep``: a finite set A of functionals, q(x) = max_{a in A} <a, x>;
* ``vrep``: q is the Minkowski gauge of B = conv(points) + cone(rays);
* ``analytic``: a closed-form float evaluator plus a metadata record of
  exact facts (theta generators, registered flags).  Analytic gauges are
  evaluated approximately and never feed an exact predicate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Mapping, Sequence

from .exact import (
    DimensionMismatch,
    Subspace,
    Vector,
    dot,
    neg,
    null_space,
    vector,
)
from .lp import LpStatus, maximize, minimize
from .polyhedra import Polyhedron, VRep, dd_convert, in_hull, remove_redundant

__all__ = [
    "GaugeError",
    "NotNonnegative",
    "DegenerateLineality",
    "GaugeInfinite",
    "NotPolyhedral",
    "ANALYTIC_TOLERANCE",
    "Mode",
    "Fact",
    "AnalyticMetadata",
    "AsymmetricGauge",
    "validate_gauge",
    "hrep_gauge",
    "vrep_gauge",
    "analytic_gauge",
    "evaluate",
    "product_gauge",
    "gauges_equivalent",
    "ball_sym_bounded",
    "as_hrep",
]

ANALYTIC_TOLERANCE = 1e-9


class GaugeError(ValueError):
    """The data does not define an asymmetric norm."""


class NotNonnegative(GaugeError):
    pass


class DegenerateLineality(GaugeError):
    pass


class GaugeInfinite(GaugeError):
    pass


class NotPolyhedral(TypeError):
    """An exact operation was asked of an analytic gauge."""


class Mode(str, enum.Enum):
    Q = "q"
    Q_MINUS = "q-minus"
    Q_SYM = "q-sym"


@dataclass(frozen=True)
class Fact:
    value: object
    citation: str


@dataclass(frozen=True)
class AnalyticMetadata:
    name: str
    evaluator: Callable[[Sequence[float]], float]
    theta_generators: tuple
    theta_span: Subspace
    facts: Mapping[str, Fact] = field(default_factory=dict)

    def check(self) -> None:
        """Evaluator must vanish on the registered theta generators."""
        for g in self.theta_generators:
            val = self.evaluator([float(a) for a in g])
            if abs(val) >= ANALYTIC_TOLERANCE:
                raise GaugeError(
                    f"{self.name}: evaluator gives {val} on theta generator {g}"
                )
        if Subspace.span(self.theta_generators, self.theta_span.ambient) != self.theta_span:
            raise GaugeError(f"{self.name}: theta span does not match generators")


@dataclass(frozen=True, eq=False)
class AsymmetricGauge:
    """A validated asymmetric norm; construct through :func:`validate_gauge`."""

    dim: int
    functionals: tuple | None = None
    generators: VRep | None = None
    analytic: AnalyticMetadata | None = None

    @property
    def kind(self) -> str:
        if self.functionals is not None:
            return "hrep"
        if self.generators is not None:
            return "vrep"
        return "analytic"

    @property
    def exact(self) -> bool:
        return self.analytic is None

    def __call__(self, x):
        return evaluate(self, x)

    def ball(self, center: Sequence | None = None, radius=1) -> Polyhedron:
        """Closed ball B_q[center, radius] as a polyhedron."""
        if not self.exact:
            raise NotPolyhedral("analytic gauges have no polyhedral ball")
        radius = Fraction(radius)
        c = vector(center) if center is not None else (Fraction(0),) * self.dim
        if self.functionals is not None:
            return Polyhedron.from_hrep(
                [(a, radius + dot(a, c)) for a in self.functionals], self.dim
            )
        pts = tuple(tuple(ci + radius * pi for ci, pi in zip(c, p)) for p in self.generators.points)
        return Polyhedron(self.dim, vrep=VRep(pts, self.generators.rays))

    @cached_property
    def unit_ball(self) -> Polyhedron:
        """B_q[0,1] with both representations."""
        return dd_convert(self.ball())


def _hrep_checks(dim: int, funcs: tuple) -> None:
    k = len(funcs)
    if k == 0:
        raise NotNonnegative("no functionals: q would be -infinity")
    # 0 in conv(A): lambda >= 0, sum lambda = 1, sum lambda a = 0
    eqs = [(tuple(a[i] for a in funcs), 0) for i in range(dim)]
    eqs.append(((1,) * k, 1))
    out = minimize([0] * k, equalities=eqs, nonnegative=range(k))
    if not out.optimal:
        raise NotNonnegative("0 is not in the convex hull of the functionals")
    lin = null_space(funcs, dim)
    if not lin.is_zero():
        raise DegenerateLineality(
            "q(x) = q(-x) = 0 for x = (" + ",".join(str(c) for c in lin.basis[0]) + ")"
        )


def _vrep_checks(dim: int, points: tuple, rays: tuple) -> None:
    zero = (Fraction(0),) * dim
    if not in_hull(zero, points, rays):
        raise NotNonnegative("0 is not in the generated set")
    gens = list(points) + list(rays)
    for i in range(dim):
        for s in (1, -1):
            e = tuple(Fraction(s * int(i == j)) for j in range(dim))
            if not in_hull(e, [zero], gens):
                raise GaugeInfinite(f"the gauge is infinite at {e}")
    if rays:
        l = len(rays)
        eqs = [(tuple(r[i] for r in rays), 0) for i in range(dim)]
        eqs.append(((1,) * l, 1))
        out = minimize([0] * l, equalities=eqs, nonnegative=range(l))
        if out.optimal:
            raise DegenerateLineality("cone(rays) contains a line")


def validate_gauge(raw: Mapping) -> AsymmetricGauge:
    """Build a gauge from ``{"hrep": [...]}`` or ``{"vrep": {"points": .., "rays": ..}}``."""
    if "hrep" in raw:
        funcs = tuple(dict.fromkeys(vector(a) for a in raw["hrep"]))
        dims = {len(a) for a in funcs}
        dim = raw.get("dimension", next(iter(dims), None))
        if dim is None or dims - {dim}:
            raise DimensionMismatch("functionals have inconsistent lengths")
        _hrep_checks(dim, funcs)
        return AsymmetricGauge(dim, functionals=funcs)
    if "vrep" in raw:
        v = raw["vrep"]
        points = tuple(vector(p) for p in v.get("points", ()))
        rays = tuple(vector(r) for r in v.get("rays", ()))
        dims = {len(p) for p in points + rays}
        dim = raw.get("dimension", next(iter(dims), None))
        if dim is None or dims - {dim}:
            raise DimensionMismatch("generators have inconsistent lengths")
        _vrep_checks(dim, points, rays)
        return AsymmetricGauge(dim, generators=remove_redundant(points, rays))
    raise ValueError("raw gauge needs an 'hrep' or 'vrep' entry")


def hrep_gauge(functionals) -> AsymmetricGauge:
    return validate_gauge({"hrep": functionals})


def vrep_gauge(points, rays=()) -> AsymmetricGauge:
    return validate_gauge({"vrep": {"points": points, "rays": rays}})


def analytic_gauge(meta: AnalyticMetadata) -> AsymmetricGauge:
    meta.check()
    return AsymmetricGauge(meta.theta_span.ambient, analytic=meta)


def _q(g: AsymmetricGauge, x: Vector):
    if g.functionals is not None:
        return max(dot(a, x) for a in g.functionals)
    if g.generators is not None:
        pts, rays = g.generators
        k, l = len(pts), len(rays)
        eqs = [(tuple(p[i] for p in pts) + tuple(r[i] for r in rays), x[i]) for i in range(g.dim)]
        out = minimize([1] * k + [0] * l, equalities=eqs, nonnegative=range(k + l))
        return out.value
    return g.analytic.evaluator([float(a) for a in x])


def evaluate(g: AsymmetricGauge, x: Sequence, mode: Mode | str = Mode.Q):
    """q(x), q(-x) or max of both; exact unless ``g`` is analytic."""
    mode = Mode(mode)
    if g.exact:
        x = vector(x)
    else:
        x = tuple(x)
    if len(x) != g.dim:
        raise DimensionMismatch(f"point of length {len(x)} for a gauge on Q^{g.dim}")
    if mode is Mode.Q:
        return _q(g, x)
    minus = _q(g, tuple(-a for a in x))
    if mode is Mode.Q_MINUS:
        return minus
    return max(_q(g, x), minus)


def as_hrep(g: AsymmetricGauge) -> AsymmetricGauge:
    """Equivalent functional representation of an exact gauge.

    For a V-rep gauge the unit ball has rows <h, x> <= b with b > 0 (0 is
    interior), so q(x) = max(0, max <h/b, x>).
    """
    if g.functionals is not None:
        return g
    if g.generators is None:
        raise NotPolyhedral("analytic gauges have no functional representation")
    rows = g.unit_ball.hrep
    funcs = [tuple(a / b for a in h) for h, b in rows]
    zero = (Fraction(0),) * g.dim
    if not in_hull(zero, funcs):
        funcs.append(zero)
    return AsymmetricGauge(g.dim, functionals=tuple(dict.fromkeys(funcs)))


def _functionals(g: AsymmetricGauge) -> tuple:
    return as_hrep(g).functionals


def product_gauge(g1: AsymmetricGauge, g2: AsymmetricGauge) -> AsymmetricGauge:
    """q*(x, y) = max{q1(x), q2(y)} on Q^(n1+n2)."""
    a1, a2 = _functionals(g1), _functionals(g2)
    z1, z2 = (Fraction(0),) * g1.dim, (Fraction(0),) * g2.dim
    funcs = [tuple(a) + z2 for a in a1] + [z1 + tuple(a) for a in a2]
    return AsymmetricGauge(g1.dim + g2.dim, functionals=tuple(dict.fromkeys(funcs)))


def _sup_over_ball(funcs_ball: tuple, funcs_obj: tuple, dim: int) -> Fraction | None:
    """sup of max_{b in funcs_obj} <b, x> over {x : <a, x> <= 1, a in funcs_ball}."""
    rows = [(a, 1) for a in funcs_ball]
    best = None
    for b in funcs_obj:
        out = maximize(b, rows)
        if out.status is LpStatus.UNBOUNDED:
            return None
        best = out.value if best is None else max(best, out.value)
    return best


def gauges_equivalent(g1: AsymmetricGauge, g2: AsymmetricGauge):
    """Tight (M, N) with M*g2 <= g1 <= N*g2, or None if no such constants exist."""
    if g1.dim != g2.dim:
        raise DimensionMismatch("gauges on different spaces")
    a1, a2 = _functionals(g1), _functionals(g2)
    n = _sup_over_ball(a2, a1, g1.dim)
    if n is None:
        return None
    m_inv = _sup_over_ball(a1, a2, g1.dim)
    if m_inv is None:
        return None
    return (1 / m_inv, n)


def ball_sym_bounded(g: AsymmetricGauge) -> Fraction | None:
    """sup of q^s over B_q[0,1]; None when the ball is q^s-unbounded."""
    a = _functionals(g)
    return _sup_over_ball(a, a + tuple(neg(f) for f in a), g.dim)

