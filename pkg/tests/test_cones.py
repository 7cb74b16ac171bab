import random
from fractions import Fraction

import pytest

import gen
from asymspace.cones import is_t1, ray_in_ball, span_by_probing, span_theta, theta_cone
from asymspace.exact import Subspace
from asymspace.fixtures import builtin
from asymspace.gauge import NotPolyhedral, evaluate, hrep_gauge, vrep_gauge

Q = [(1, 0), (0, 1), (0, -1)]


def linf(n):
    return builtin("linf-n", n=n).gauge


def test_theta_examples():
    assert theta_cone(hrep_gauge(Q)).generators == ((-1, 0),)
    assert theta_cone(linf(3)).is_trivial()
    assert theta_cone(builtin("parabola").gauge).generators == ((0, 1),)


def test_span_examples():
    assert span_theta(hrep_gauge(Q)) == Subspace.span([(1, 0)], 2)
    for m in (1, 2, 3):
        assert span_theta(builtin("orthant-m", m=m).gauge).is_full()
    assert span_theta(linf(2)).is_zero()


def test_t1_examples():
    assert is_t1(linf(2))
    assert not is_t1(builtin("parabola").gauge)
    assert not is_t1(hrep_gauge(Q))


def test_ray_examples():
    xp = hrep_gauge([(1,), (0,)])
    assert ray_in_ball(xp, (0,), 1, (0,), (-1,))
    assert not ray_in_ball(linf(2), (0, 0), 1, (0, 0), (1, 1))
    q = hrep_gauge(Q)
    assert ray_in_ball(q, (0, 0), 1, (0, 0), (-1, 0))
    assert evaluate(q, (-1, 0)) == 0
    with pytest.raises(ValueError):
        ray_in_ball(q, (0, 0), 0, (0, 0), (-1, 0))
    with pytest.raises(NotPolyhedral):
        ray_in_ball(builtin("parabola").gauge, (0, 0), 1, (0, 0), (0, 1))


def test_vrep_theta():
    v = vrep_gauge([(1, 1), (1, -1)], [(-1, 0)])
    assert theta_cone(v).generators == ((-1, 0),)
    assert (-5, 0) in theta_cone(v) and (5, 0) not in theta_cone(v)


def test_cone_properties_on_random_gauges():
    rng = random.Random(31)
    for g in gen.gauges(32, 40):
        th = theta_cone(g)
        gens = th.generators
        span = span_theta(g)
        assert Subspace.span(gens, g.dim) == span
        for r in gens:
            assert evaluate(g, r) == 0 and r in span
        if not gens:
            continue
        for _ in range(5):
            w = [Fraction(rng.randint(0, 4)) for _ in gens]
            if not any(w):
                continue
            u = tuple(sum(wi * r[i] for wi, r in zip(w, gens)) for i in range(g.dim))
            a = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert u in th and tuple(a * c for c in u) in th
            # pointed cone: a nonzero sum of members is never zero
            assert any(u)
            assert ray_in_ball(g, (0,) * g.dim, 1, (0,) * g.dim, u)
        # a base outside theta gives no ray
        for _ in range(3):
            d = gen.point(rng, g.dim)
            if ray_in_ball(g, (0,) * g.dim, 1, (0,) * g.dim, d):
                assert evaluate(g, d) == 0


def test_probe_stops_within_dimension():
    cons = [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, -1, 0), 0)]
    assert span_by_probing(cons, 3) == Subspace.span([(1, 0, 0), (0, 0, 1)], 3)
