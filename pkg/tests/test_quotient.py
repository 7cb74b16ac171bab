import random

import pytest

import gen
from asymspace.cones import span_theta
from asymspace.exact import DimensionMismatch, Subspace
from asymspace.fixtures import builtin
from asymspace.gauge import NotPolyhedral, evaluate, hrep_gauge
from asymspace.polyhedra import Polyhedron, polyhedron_contains
from asymspace.quotient import (
    QuotientSpace,
    closure_span_by_lp,
    in_q_closure,
    is_q_closed_lp,
    is_quotient_norm,
    is_quotient_t1,
    quotient_seminorm,
    quotient_symmetric_seminorm,
    quotient_t2_lower_bound,
    subspace_q_closure,
)
from asymspace.seminorm import seminorm_value

Q = hrep_gauge([(1, 0), (0, 1), (0, -1)])
X_AXIS = Subspace.span([(1, 0)], 2)
Y_AXIS = Subspace.span([(0, 1)], 2)
ZERO = Subspace.zero(2)
FULL = Subspace.full(2)


def test_quotient_values():
    assert quotient_seminorm(QuotientSpace(Q, X_AXIS), (0, 3)) == 3
    assert QuotientSpace(Q, X_AXIS)((5, 0)) == 0
    assert QuotientSpace(Q, Y_AXIS)((5, 0)) == 5
    assert QuotientSpace(Q, Y_AXIS)((-5, 7)) == 0


def test_quotient_coordinates():
    qs = QuotientSpace(Q, Subspace.span([(1, 1)], 2))
    assert qs.dim == 1
    assert qs.coordinates((3, 5)) == (2,)
    assert qs.coordinates((3, 3)) == (0,)
    with pytest.raises(DimensionMismatch):
        QuotientSpace(Q, Subspace.zero(3))


def test_closure_examples():
    assert polyhedron_contains(Polyhedron.from_hrep([((0, 1), 0), ((0, -1), 0)]), subspace_q_closure(Q, X_AXIS))
    half = Polyhedron.from_hrep([((-1, 0), 0)])
    closure = subspace_q_closure(Q, Y_AXIS)
    assert polyhedron_contains(half, closure) and polyhedron_contains(closure, half)
    assert subspace_q_closure(Q, FULL).v().rays
    assert in_q_closure(Q, Y_AXIS, (3, -1)) and not in_q_closure(Q, Y_AXIS, (-3, 0))


def test_t1_and_norm_examples():
    assert is_quotient_t1(Q, X_AXIS)
    assert not is_quotient_t1(Q, Y_AXIS)
    assert is_quotient_t1(Q, FULL)
    assert is_quotient_norm(Q, Y_AXIS)
    assert is_quotient_norm(Q, X_AXIS)
    assert is_quotient_norm(Q, ZERO)
    orth = builtin("orthant-m", m=2).gauge
    assert is_quotient_norm(orth, Subspace.span([(1, -1)], 2))
    # theta + Y is the whole plane when Y is the diagonal
    assert not is_quotient_norm(orth, Subspace.span([(1, 1)], 2))


def test_t2_lower_bound_examples():
    assert quotient_t2_lower_bound(Q, X_AXIS)
    assert not quotient_t2_lower_bound(Q, Y_AXIS)
    assert quotient_t2_lower_bound(Q, FULL)


def test_analytic_rejected():
    with pytest.raises(NotPolyhedral):
        is_quotient_norm(builtin("parabola").gauge, Y_AXIS)


def test_random_quotient_properties():
    rng = random.Random(51)
    for g in gen.gauges(52, 40):
        y = gen.subspace(rng, g.dim)
        qs = QuotientSpace(g, y)
        closed = is_quotient_t1(g, y)
        assert closed == is_q_closed_lp(g, y)
        if closed:
            assert y.contains_subspace(span_theta(g))
        closure = subspace_q_closure(g, y)
        assert Subspace.span(closure.v().rays, g.dim) == closure_span_by_lp(g, y)
        for _ in range(3):
            x = gen.point(rng, g.dim)
            w = qs(x)
            assert w <= evaluate(g, x)
            if y.basis:
                coef = [gen.rational(rng) for _ in y.basis]
                shift = tuple(sum(c * b[i] for c, b in zip(coef, y.basis)) for i in range(g.dim))
                shifted = tuple(a + s for a, s in zip(x, shift))
                assert qs(shifted) == w
            assert quotient_symmetric_seminorm(qs, x) <= seminorm_value(g, x)
            assert (x in closure) == in_q_closure(g, y, x)
