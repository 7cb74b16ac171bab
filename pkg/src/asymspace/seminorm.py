"""The greatest symmetric seminorm below q, its kernel and the T2 test.

For a functional gauge q = max_{a in A} <a, .> the seminorm

    ||x|| = inf_y q(y) + q(y - x)

is computed by a primal LP.  Independently, ||.|| is the support function
of the symmetric polytope C = conv(A) ∩ -conv(A): a linear functional f is
dominated by q iff f ∈ conv(A), so the symmetric seminorms below q are
exactly support functions of symmetric subsets of conv(A).  The dual route
needs double description and serves as an oracle for the LP.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cones import span_by_probing
from .exact import DimensionMismatch, Subspace, dot, null_space, vector
from .gauge import AsymmetricGauge, NotPolyhedral, as_hrep
from .lp import minimize
from .polyhedra import Polyhedron, dd_convert

__all__ = [
    "DualSymmetricBody",
    "dual_symmetric_body",
    "seminorm_value",
    "seminorm_dual",
    "seminorm_kernel",
    "seminorm_kernel_primal",
    "is_t2",
]


@dataclass(frozen=True, eq=False)
class DualSymmetricBody:
    """C = conv(A) ∩ -conv(A) with both representations."""

    polytope: Polyhedron

    @property
    def vertices(self) -> tuple:
        return self.polytope.vrep.points

    def __contains__(self, f) -> bool:
        return vector(f) in self.polytope

    def support(self, x: Sequence) -> Fraction:
        x = vector(x)
        return max(dot(f, x) for f in self.vertices)


def _functionals(g: AsymmetricGauge) -> tuple:
    if not g.exact:
        raise NotPolyhedral("the seminorm is only computed for exact gauges")
    return as_hrep(g).functionals


def _check_dim(g: AsymmetricGauge, x) -> tuple:
    x = vector(x)
    if len(x) != g.dim:
        raise DimensionMismatch(f"point of length {len(x)} for a gauge on Q^{g.dim}")
    return x


@lru_cache(maxsize=512)
def dual_symmetric_body(g: AsymmetricGauge) -> DualSymmetricBody:
    funcs = _functionals(g)
    hull = dd_convert(Polyhedron.from_vrep(funcs, dim=g.dim))
    rows = list(hull.hrep)
    rows += [(tuple(-a for a in h), b) for h, b in hull.hrep]
    return DualSymmetricBody(dd_convert(Polyhedron.from_hrep(rows, g.dim)))


def seminorm_value(g: AsymmetricGauge, x: Sequence) -> Fraction:
    """inf_y q(y) + q(y - x), solved as an LP in (y, t1, t2)."""
    x = _check_dim(g, x)
    funcs = _functionals(g)
    n = g.dim
    rows = []
    for a in funcs:
        rows.append((tuple(a) + (-1, 0), 0))
        rows.append((tuple(a) + (0, -1), dot(a, x)))
    out = minimize((0,) * n + (1, 1), rows)
    return out.value


def seminorm_dual(g: AsymmetricGauge, x: Sequence) -> Fraction:
    """Support function of conv(A) ∩ -conv(A) at x."""
    x = _check_dim(g, x)
    return dual_symmetric_body(g).support(x)


def seminorm_kernel(g: AsymmetricGauge) -> Subspace:
    """{x : ||x|| = 0}, the annihilator of span(C)."""
    if g.analytic is not None:
        raise NotPolyhedral("the seminorm kernel is only computed for exact gauges")
    return null_space(dual_symmetric_body(g).vertices, g.dim)


def seminorm_kernel_primal(g: AsymmetricGauge) -> Subspace:
    """Kernel by LP probing: x with some y, q(y) = 0 and q(y - x) = 0."""
    funcs = _functionals(g)
    zero = (0,) * g.dim
    cons = []
    for a in funcs:
        cons.append((zero + tuple(a), 0))
        cons.append((tuple(-c for c in a) + tuple(a), 0))
    return span_by_probing(cons, g.dim, extra_vars=g.dim)


def is_t2(g: AsymmetricGauge) -> bool:
    """Hausdorff exactly when the seminorm kernel is {0}.

    Analytic gauges answer from registered facts; failing that, a
    nontrivial theta cone already rules out T2.
    """
    if g.analytic is not None:
        fact = g.analytic.facts.get("T2")
        if fact is not None:
            return bool(fact.value)
        if g.analytic.theta_generators:
            return False
        raise NotPolyhedral(f"{g.analytic.name}: no registered T2 fact")
    return seminorm_kernel(g).is_zero()
