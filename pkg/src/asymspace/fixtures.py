"""Named gauges with registered facts.

Each fixture carries a gauge plus facts the computed pipeline can be
checked against.  Analytic fixtures rely on their facts for every exact
answer; for polyhedral fixtures the facts are redundant and any
disagreement with the computation is a bug.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .exact import Subspace
from .gauge import AnalyticMetadata, AsymmetricGauge, Fact, analytic_gauge, hrep_gauge

__all__ = ["Fixture", "FIXTURES", "builtin", "fixture_names", "DEFAULT_VIEWPORT"]

DEFAULT_VIEWPORT = (-3, 3, -3, 3)


@dataclass(frozen=True)
class Fixture:
    name: str
    params: Mapping[str, int]
    gauge: AsymmetricGauge
    facts: Mapping[str, Fact] = field(default_factory=dict)
    viewport: tuple = DEFAULT_VIEWPORT
    description: str = ""


def _parabola_eval(v) -> float:
    x, y = v
    return 0.5 * (-y + math.sqrt(4 * x * x + y * y))


def _p_eval(v) -> float:
    x, y = v
    return max(abs(x), max(-y, 0.0))


def _piecewise_eval(v) -> float:
    return _p_eval(v) if v[0] <= 0 else _parabola_eval(v)


_UP = ((Fraction(0), Fraction(1)),)
_Y_AXIS = Subspace.span(_UP, 2)


def _parabola(params) -> Fixture:
    facts = {
        "right_bounded": Fact(False, "parabola: not right-bounded"),
        "T2": Fact(False, "parabola: not Hausdorff"),
        "ballQClosed": Fact(False, "parabola: unit ball is q-dense in the plane"),
        "ball_open_region": Fact("y > x^2 - 1", "parabola: open unit ball lies above y = x^2 - 1"),
    }
    meta = AnalyticMetadata("parabola", _parabola_eval, _UP, _Y_AXIS, facts)
    return Fixture(
        "parabola",
        params,
        analytic_gauge(meta),
        facts,
        viewport=(-3, 3, -2, 6),
        description="q(x,y) = (-y + sqrt(4x^2 + y^2))/2",
    )


def _piecewise(params) -> Fixture:
    facts = {
        "span_theta_q_closure": Fact(
            "x <= 0", "piecewise-r: closure of span theta is the half-plane x <= 0, not a subspace"
        ),
    }
    meta = AnalyticMetadata("piecewise-r", _piecewise_eval, _UP, _Y_AXIS, facts)
    return Fixture(
        "piecewise-r",
        params,
        analytic_gauge(meta),
        facts,
        viewport=(-3, 3, -2, 6),
        description="max{|x|, y^-} for x <= 0, the parabola gauge for x >= 0",
    )


def _p_max_abs_yminus(params) -> Fixture:
    facts = {
        "right_bounded": Fact(True, "p-max-abs-yminus: ball equals symmetric ball plus theta"),
        "right_bounded_radius": Fact(Fraction(1), "p-max-abs-yminus: ball equals symmetric ball plus theta"),
        "ballQClosed": Fact(False, "p-max-abs-yminus: ball closure is a vertical strip"),
        "ball_closure_hrep": Fact(
            ((("-1", "0"), "1"), (("1", "0"), "1")),
            "p-max-abs-yminus: ball closure is the strip -1 <= x <= 1",
        ),
    }
    g = hrep_gauge([(1, 0), (-1, 0), (0, -1)])
    return Fixture("p-max-abs-yminus", params, g, facts, description="max{|x|, y^-}")


def _q_xplus_absy(params) -> Fixture:
    cite = "q-xplus-absy: registered T3 = false and T4 = false"
    facts = {
        "T3": Fact(False, cite),
        "T4": Fact(False, cite),
    }
    g = hrep_gauge([(1, 0), (0, 1), (0, -1)])
    return Fixture("q-xplus-absy", params, g, facts, description="max{x^+, |y|}")


def _orthant(params) -> Fixture:
    m = int(params.get("m", 2))
    if m < 1:
        raise ValueError("orthant-m needs m >= 1")
    funcs = [tuple(0 for _ in range(m))]
    funcs += [tuple(int(i == j) for j in range(m)) for i in range(m)]
    facts = {
        "covering_dimension": Fact(0, "orthant-m: covering dimension zero"),
        "T4": Fact(True, "orthant-m: theta has nonempty symmetric interior, hence T4"),
    }
    return Fixture(
        "orthant-m", {"m": m}, hrep_gauge(funcs), facts, description=f"max of x_i^+ on Q^{m}"
    )


def _xplus_line(params) -> Fixture:
    facts = {
        "ballQCompact": Fact(True, "xplus-line: ball (-inf, 1] is q-compact"),
        "ball_sym_bounded": Fact(False, "xplus-line: ball is not q^s-bounded"),
    }
    return Fixture(
        "xplus-line", params, hrep_gauge([(1,), (0,)]), facts, viewport=(-3, 3, -1, 1),
        description="x^+ on Q",
    )


def _linf(params) -> Fixture:
    n = int(params.get("n", 2))
    if n < 1:
        raise ValueError("linf-n needs n >= 1")
    funcs = []
    for i in range(n):
        e = tuple(int(i == j) for j in range(n))
        funcs.append(e)
        funcs.append(tuple(-c for c in e))
    facts = {"covering_dimension": Fact(n, "linf-n: normed space of algebraic dimension n")}
    return Fixture("linf-n", {"n": n}, hrep_gauge(funcs), facts, description=f"max |x_i| on Q^{n}")


FIXTURES: dict[str, Callable[[Mapping], Fixture]] = {
    "parabola": _parabola,
    "piecewise-r": _piecewise,
    "p-max-abs-yminus": _p_max_abs_yminus,
    "q-xplus-absy": _q_xplus_absy,
    "orthant-m": _orthant,
    "xplus-line": _xplus_line,
    "linf-n": _linf,
}


def fixture_names() -> list:
    return list(FIXTURES)


@lru_cache(maxsize=None)
def _build(name: str, params: tuple) -> Fixture:
    return FIXTURES[name](dict(params))


def builtin(name: str, **params) -> Fixture:
    """The registered fixture ``name``; equal arguments give the same object."""
    if name not in FIXTURES:
        raise KeyError(f"unknown builtin {name!r}; known: {', '.join(FIXTURES)}")
    return _build(name, tuple(sorted(params.items())))
