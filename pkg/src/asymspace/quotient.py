"""Quotients X/Y of a functional gauge by a linear subspace Y.

w_Y(x + Y) = inf_{y in Y} q(x + y) is an asymmetric seminorm on X/Y.  For
polyhedral q every infimum below is attained, so closure questions reduce
to cone containments:

* the q-closure of Y is Y - theta_q, hence Y is q-closed iff theta_q ⊆ Y;
* w_Y is definite iff (theta_q + Y) ∩ (-theta_q + Y) ⊆ Y.

The cone identities are cross-checked against direct LP probing in tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import span_by_probing, span_theta, theta_cone
from .exact import DimensionMismatch, Subspace, Vector, dot, vector
from .gauge import AsymmetricGauge, NotPolyhedral, as_hrep
from .lp import minimize
from .polyhedra import Polyhedron, VRep
from .seminorm import seminorm_kernel

__all__ = [
    "QuotientSpace",
    "quotient_seminorm",
    "quotient_symmetric_seminorm",
    "subspace_q_closure",
    "in_q_closure",
    "closure_span_by_lp",
    "is_q_closed_lp",
    "is_quotient_t1",
    "is_quotient_norm",
    "quotient_t2_lower_bound",
]


def _functionals(g: AsymmetricGauge) -> tuple:
    if not g.exact:
        raise NotPolyhedral("quotients are only computed for exact gauges")
    return as_hrep(g).functionals


def _check(g: AsymmetricGauge, y: Subspace) -> None:
    if y.ambient != g.dim:
        raise DimensionMismatch(f"subspace of Q^{y.ambient} for a gauge on Q^{g.dim}")


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """X/Y with canonical coordinates on the unit vectors off Y's pivots."""

    gauge: AsymmetricGauge
    divisor: Subspace

    def __post_init__(self):
        _check(self.gauge, self.divisor)

    @property
    def complement_basis(self) -> tuple:
        return self.divisor.complement_basis()

    @property
    def dim(self) -> int:
        return self.gauge.dim - self.divisor.dim

    def reduce(self, x: Sequence) -> Vector:
        """The representative of x + Y supported off the pivot columns."""
        r = list(vector(x))
        if len(r) != self.gauge.dim:
            raise DimensionMismatch("point and quotient live in different spaces")
        for b, p in zip(self.divisor.basis, self.divisor.pivots):
            c = r[p]
            if c:
                r = [u - c * v for u, v in zip(r, b)]
        return tuple(r)

    def coordinates(self, x: Sequence) -> Vector:
        piv = set(self.divisor.pivots)
        r = self.reduce(x)
        return tuple(r[j] for j in range(self.gauge.dim) if j not in piv)

    def __call__(self, x: Sequence) -> Fraction:
        return quotient_seminorm(self, x)


def _inf_over_divisor(funcs, y: Subspace, x: Vector) -> Fraction:
    # min t  s.t.  <a, x + B s> <= t
    k = y.dim
    rows = []
    for a in funcs:
        coeffs = tuple(dot(a, b) for b in y.basis)
        rows.append((coeffs + (-1,), -dot(a, x)))
    return minimize((0,) * k + (1,), rows).value


def quotient_seminorm(qs: QuotientSpace, x: Sequence) -> Fraction:
    """w_Y(x + Y) = min over y in Y of q(x + y)."""
    x = vector(x)
    if len(x) != qs.gauge.dim:
        raise DimensionMismatch("point and quotient live in different spaces")
    return _inf_over_divisor(_functionals(qs.gauge), qs.divisor, x)


def quotient_symmetric_seminorm(qs: QuotientSpace, x: Sequence) -> Fraction:
    """inf_z w(z) + w(z - x): the greatest symmetric seminorm below w_Y."""
    x = vector(x)
    funcs = _functionals(qs.gauge)
    n, k = qs.gauge.dim, qs.divisor.dim
    # variables: z (n), s1 (k), s2 (k), t1, t2
    rows = []
    for a in funcs:
        ab = tuple(dot(a, b) for b in qs.divisor.basis)
        zero = (0,) * k
        rows.append((tuple(a) + ab + zero + (-1, 0), 0))
        rows.append((tuple(a) + zero + ab + (0, -1), dot(a, x)))
    return minimize((0,) * (n + 2 * k) + (1, 1), rows).value


def subspace_q_closure(g: AsymmetricGauge, y: Subspace) -> Polyhedron:
    """The q-closure of Y, namely the cone Y - theta_q."""
    _check(g, y)
    zero = (Fraction(0),) * g.dim
    rays = list(y.basis) + [tuple(-c for c in b) for b in y.basis]
    rays += [tuple(-c for c in t) for t in theta_cone(g).generators]
    return Polyhedron(g.dim, vrep=VRep((zero,), tuple(rays)))


def in_q_closure(g: AsymmetricGauge, y: Subspace, x: Sequence) -> bool:
    """Is inf_{v in Y} q(v - x) zero?"""
    _check(g, y)
    x = vector(x)
    return _inf_over_divisor(_functionals(g), y, tuple(-c for c in x)) == 0


def closure_span_by_lp(g: AsymmetricGauge, y: Subspace) -> Subspace:
    """Span of {x : q(Bs - x) = 0 for some s}, found without theta_q."""
    _check(g, y)
    cons = []
    for a in _functionals(g):
        cons.append((tuple(-c for c in a) + tuple(dot(a, b) for b in y.basis), 0))
    return span_by_probing(cons, g.dim, extra_vars=y.dim)


def is_q_closed_lp(g: AsymmetricGauge, y: Subspace) -> bool:
    """Y is q-closed iff its LP closure cone spans nothing beyond Y."""
    return closure_span_by_lp(g, y) == y


def is_quotient_t1(g: AsymmetricGauge, y: Subspace) -> bool:
    """X/Y is T1 iff Y is q-closed iff theta_q ⊆ Y (polyhedral case)."""
    _check(g, y)
    if not g.exact:
        raise NotPolyhedral("quotients are only computed for exact gauges")
    return y.contains_subspace(span_theta(g))


def is_quotient_norm(g: AsymmetricGauge, y: Subspace) -> bool:
    """No coset xi + Y other than Y has w(xi) = w(-xi) = 0."""
    _check(g, y)
    k = y.dim
    zero = (0,) * k
    cons = []
    for a in _functionals(g):
        ab = tuple(dot(a, b) for b in y.basis)
        cons.append((tuple(a) + ab + zero, 0))
        cons.append((tuple(-c for c in a) + zero + ab, 0))
    return span_by_probing(cons, g.dim, extra_vars=2 * k) == y


def quotient_t2_lower_bound(g: AsymmetricGauge, y: Subspace) -> bool:
    """Necessary condition for a Hausdorff quotient: ker ||.||_q ⊆ Y."""
    _check(g, y)
    return y.contains_subspace(seminorm_kernel(g))
