"""The zero cone theta_q = {x : q(x) = 0} and its linear span."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .exact import Subspace, orthogonal_complement, vector
from .gauge import AsymmetricGauge, NotPolyhedral, evaluate
from .lp import maximize
from .polyhedra import Polyhedron, VRep, dd_convert

__all__ = ["ThetaCone", "theta_cone", "span_theta", "span_by_probing", "is_t1", "ray_in_ball"]


@dataclass(frozen=True, eq=False)
class ThetaCone:
    gauge: AsymmetricGauge
    cone: Polyhedron | None
    generators: tuple

    def __contains__(self, x) -> bool:
        if not self.gauge.exact:
            raise NotPolyhedral("membership in an analytic theta cone is not exact")
        return evaluate(self.gauge, x) == 0

    def is_trivial(self) -> bool:
        return not self.generators


@lru_cache(maxsize=1024)
def theta_cone(g: AsymmetricGauge) -> ThetaCone:
    """theta_q with an irredundant generator list.

    For a functional gauge this is {x : <a, x> <= 0 for all a}; for a
    generator gauge it is cone(rays), the recession cone of the ball.
    """
    if g.functionals is not None:
        cone = dd_convert(Polyhedron.from_hrep([(a, 0) for a in g.functionals], g.dim))
        return ThetaCone(g, cone, cone.vrep.rays)
    if g.generators is not None:
        zero = (Fraction(0),) * g.dim
        cone = dd_convert(Polyhedron(g.dim, vrep=VRep((zero,), g.generators.rays)))
        return ThetaCone(g, cone, cone.vrep.rays)
    return ThetaCone(g, None, g.analytic.theta_generators)


def span_by_probing(constraints: Sequence, dim: int, extra_vars: int = 0) -> Subspace:
    """Span of the x-part of the cone {(x, s) : <c, (x, s)> <= 0 for c in constraints}.

    Repeatedly asks an LP for a cone vector with a nonzero component
    orthogonal to the span found so far; stops after at most ``dim`` finds.
    """
    found: list = []
    span = Subspace.zero(dim)
    while not span.is_full():
        witness = None
        for c in orthogonal_complement(span).basis:
            for sign in (1, -1):
                obj = tuple(sign * a for a in c) + (0,) * extra_vars
                rows = list(constraints) + [(obj, 1)]
                out = maximize(obj, rows)
                if out.optimal and out.value > 0:
                    witness = out.witness[:dim]
                    break
            if witness is not None:
                break
        if witness is None:
            break
        found.append(witness)
        span = Subspace.span(found, dim)
    return span


@lru_cache(maxsize=1024)
def span_theta(g: AsymmetricGauge) -> Subspace:
    """Y = <theta_q>, the smallest subspace containing theta_q."""
    if g.analytic is not None:
        return g.analytic.theta_span
    if g.generators is not None:
        return Subspace.span(g.generators.rays, g.dim)
    return span_by_probing([(a, 0) for a in g.functionals], g.dim)


def is_t1(g: AsymmetricGauge) -> bool:
    """T1 exactly when theta_q = {0}."""
    return span_theta(g).is_zero()


def ray_in_ball(g: AsymmetricGauge, center, radius, base, direction) -> bool:
    """Is {base + t*direction : t >= 0} inside B_q[center, radius]?

    The ray stays in the ball iff its start does and q(direction) = 0: for
    q(direction) > 0 the reverse triangle inequality pushes q past any bound.
    """
    if not g.exact:
        raise NotPolyhedral("ray containment needs an exact gauge")
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    center, base, direction = vector(center), vector(base), vector(direction)
    start = tuple(b - c for b, c in zip(base, center))
    return evaluate(g, start) <= radius and evaluate(g, direction) == 0
