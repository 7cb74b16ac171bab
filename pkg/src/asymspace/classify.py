"""Continuity constants, the Y x Z decomposition, ball properties, covering
dimension and the three-valued separation report.

Several suprema below are taken over the unit ball B = conv(V) + theta_q of
a polyhedral gauge.  A sublinear functional that is nonpositive on theta_q
attains its supremum over B at a vertex in V, so only the vertices need to
be evaluated once the recession rays have been checked.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence

from .cones import span_by_probing, span_theta, theta_cone
from .exact import (
    DimensionMismatch,
    Subspace,
    identity,
    inverse,
    matmul,
    matvec,
    orthogonal_complement,
    transpose,
    vector,
)
from .gauge import (
    AsymmetricGauge,
    Fact,
    Mode,
    NotPolyhedral,
    as_hrep,
    ball_sym_bounded,
    evaluate,
)
from .lp import minimize
from .polyhedra import Polyhedron, VRep, dd_convert, polyhedron_contains
from .seminorm import is_t2

__all__ = [
    "InconsistentReport",
    "continuity_constant",
    "Decomposition",
    "decompose",
    "orthogonal_projection",
    "right_bounded",
    "distance_to_theta",
    "ball_q_closure",
    "ball_q_closed",
    "ball_closure_q_bounded",
    "Compactness",
    "ball_q_compact",
    "covering_dimension",
    "FLAG_NAMES",
    "Flag",
    "SeparationReport",
    "separation_report",
    "report_violations",
]


class InconsistentReport(ValueError):
    """Two sources of truth disagree on a separation flag."""


def _exact(g: AsymmetricGauge, what: str) -> None:
    if not g.exact:
        raise NotPolyhedral(f"{what} needs an exact gauge")


def _ball_vrep(g: AsymmetricGauge) -> VRep:
    return g.unit_ball.vrep


# ---------------------------------------------------------------------------
# continuity and decomposition


def continuity_constant(f: Sequence[Sequence], source: AsymmetricGauge, target: AsymmetricGauge):
    """Least K with p(f x) <= K q(x) for all x, or None if f is not continuous.

    ``f`` is a target.dim x source.dim matrix, q the source gauge and p the
    target gauge.
    """
    _exact(source, "a continuity constant")
    _exact(target, "a continuity constant")
    f = tuple(vector(row) for row in f)
    if len(f) != target.dim or any(len(row) != source.dim for row in f):
        raise DimensionMismatch("matrix shape does not match the gauges")
    funcs = as_hrep(target).functionals
    pts, rays = _ball_vrep(source)
    for r in rays:
        fr = matvec(f, r)
        if any(sum(a * b for a, b in zip(row, fr)) > 0 for row in funcs):
            return None
    return max(evaluate(target, matvec(f, v)) for v in pts)


def orthogonal_projection(y: Subspace) -> tuple:
    """Matrix of the orthogonal projection onto Y (standard inner product)."""
    n = y.ambient
    if y.is_zero():
        return tuple((Fraction(0),) * n for _ in range(n))
    b = transpose(y.basis)  # n x k
    gram = matmul(y.basis, b)
    return matmul(matmul(b, inverse(gram)), y.basis)


@dataclass(frozen=True)
class Decomposition:
    """X = Y ⊕ Z with Y = span theta_q and Z its orthogonal complement.

    ``projection`` is P_Y; ``psi`` is I - P_Y, which induces the linear
    homeomorphism X/Y -> Z.  ``k_p`` and ``k_i_minus_p`` are the continuity
    constants of P_Y and I - P_Y on (X, q).
    """

    y: Subspace
    z: Subspace
    projection: tuple
    psi: tuple
    k_p: Fraction | None
    k_i_minus_p: Fraction | None
    z_is_t1: bool

    def split(self, x: Sequence) -> tuple:
        x = vector(x)
        return matvec(self.projection, x), matvec(self.psi, x)


def _cone_meets_subspace(g: AsymmetricGauge, s: Subspace) -> bool:
    """Does theta_q ∩ S contain a nonzero vector?"""
    if s.is_zero():
        return False
    cols = s.basis
    cons = []
    for a in as_hrep(g).functionals:
        cons.append((tuple(sum(ai * ci for ai, ci in zip(a, c)) for c in cols), 0))
    return not span_by_probing(cons, s.dim).is_zero()


def decompose(g: AsymmetricGauge) -> Decomposition:
    _exact(g, "the decomposition")
    y = span_theta(g)
    z = orthogonal_complement(y)
    p = orthogonal_projection(y)
    eye = identity(g.dim)
    psi = tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(eye, p))
    return Decomposition(
        y=y,
        z=z,
        projection=p,
        psi=psi,
        k_p=continuity_constant(p, g, g),
        k_i_minus_p=continuity_constant(psi, g, g),
        z_is_t1=not _cone_meets_subspace(g, z),
    )


# ---------------------------------------------------------------------------
# right-boundedness, closure and compactness of the unit ball


def distance_to_theta(g: AsymmetricGauge, x: Sequence) -> Fraction:
    """min over t in theta_q of q^s(x - t), solved as one LP in (t, s)."""
    _exact(g, "a distance to theta")
    x = vector(x)
    funcs = as_hrep(g).functionals
    n = g.dim
    rows = []
    for a in funcs:
        ax = sum(ai * xi for ai, xi in zip(a, x))
        rows.append((tuple(a) + (0,), 0))
        rows.append((tuple(-c for c in a) + (-1,), -ax))
        rows.append((tuple(a) + (-1,), ax))
    return minimize((0,) * n + (1,), rows).value


def right_bounded(g: AsymmetricGauge) -> tuple:
    """(flag, r) with r the least radius such that B_q ⊆ B_{q^s}(0, r) + theta_q.

    Every polyhedral gauge is right-bounded; r is the largest distance from
    a ball vertex to theta_q in q^s.  Analytic gauges answer from metadata.
    """
    if g.analytic is not None:
        fact = g.analytic.facts.get("right_bounded")
        if fact is None:
            return None, None
        radius = g.analytic.facts.get("right_bounded_radius")
        return bool(fact.value), (radius.value if radius is not None else None)
    pts = _ball_vrep(g).points
    if not theta_cone(g).generators:
        return True, max(evaluate(g, v, Mode.Q_SYM) for v in pts)
    return True, max(distance_to_theta(g, v) for v in pts)


@lru_cache(maxsize=1024)
def ball_q_closure(g: AsymmetricGauge) -> Polyhedron:
    """The q-closure B_q[0,1] - theta_q, with both representations."""
    _exact(g, "the ball closure")
    pts, rays = _ball_vrep(g)
    theta = theta_cone(g).generators
    if not theta:
        return g.unit_ball
    extra = tuple(tuple(-c for c in t) for t in theta)
    return dd_convert(Polyhedron(g.dim, vrep=VRep(pts, tuple(rays) + extra)))


def ball_q_closed(g: AsymmetricGauge) -> bool | None:
    """Is B_q[0,1] q-closed, i.e. B - theta_q ⊆ B?  None if not registered."""
    if g.analytic is not None:
        fact = g.analytic.facts.get("ballQClosed")
        return None if fact is None else bool(fact.value)
    return polyhedron_contains(g.unit_ball, ball_q_closure(g))


def ball_closure_q_bounded(g: AsymmetricGauge) -> bool:
    """Is the q-closure of the ball q-bounded?  Its rays must all lie in theta_q."""
    closure = ball_q_closure(g)
    return all(evaluate(g, r) == 0 for r in closure.vrep.rays)


class Compactness(str, enum.Enum):
    COMPACT = "compact"
    NOT_COMPACT = "not-compact"
    UNKNOWN = "unknown"


def _single_orbit_cover(g: AsymmetricGauge):
    """A point c of B with B ⊆ c + theta_q, or None.

    Needs <a, c> <= 1 and <a, c> >= <a, w> for every functional a and ball
    vertex w; then every vertex lies in c + theta_q and so does B.
    """
    funcs = as_hrep(g).functionals
    pts = _ball_vrep(g).points
    rows = []
    for a in funcs:
        top = max(sum(ai * wi for ai, wi in zip(a, w)) for w in pts)
        rows.append((a, 1))
        rows.append((tuple(-c for c in a), -top))
    out = minimize((0,) * g.dim, rows)
    return out.witness if out.optimal else None


def ball_q_compact(g: AsymmetricGauge, use_hull_lemma: bool = False) -> tuple:
    """(verdict, witness) for q-compactness of B_q[0,1].

    Sufficient tests only: theta_q = {0} (the ball is a polytope in a
    normed topology) or a single translate c + theta_q covering the ball.
    With ``use_hull_lemma`` every polyhedral ball is reported compact: conv
    of the vertices is q^s-compact and any q-open set holding a vertex v
    already holds v + theta_q.
    """
    if g.analytic is not None:
        fact = g.analytic.facts.get("ballQCompact")
        if fact is None:
            return Compactness.UNKNOWN, None
        verdict = Compactness.COMPACT if fact.value else Compactness.NOT_COMPACT
        return verdict, ("metadata", fact.citation)
    if not theta_cone(g).generators:
        return Compactness.COMPACT, ("polytope", None)
    c = _single_orbit_cover(g)
    if c is not None:
        return Compactness.COMPACT, ("cone-cover", c)
    if use_hull_lemma:
        return Compactness.COMPACT, ("vertex-hull", _ball_vrep(g).points)
    return Compactness.UNKNOWN, None


def covering_dimension(g: AsymmetricGauge):
    """0 if span theta_q = X, the algebraic dimension if theta_q = {0}, else inf."""
    y = span_theta(g)
    if y.is_full():
        return 0
    if y.is_zero():
        return g.dim
    return math.inf


# ---------------------------------------------------------------------------
# separation report

FLAG_NAMES = ("T0", "T1/4", "T1", "T2", "ballQClosed", "T3", "T3.5", "T4")


@dataclass(frozen=True)
class Flag:
    value: bool | None
    provenance: str

    @property
    def known(self) -> bool:
        return self.value is not None


UNKNOWN = "undetermined"

# (premise flag, premise value, conclusion flag, conclusion value, rule name)
_RULES = (
    ("T1/4", True, "T1", True, "T1/4 => T1"),
    ("T1", True, "T1/4", True, "T1 => T1/4"),
    ("T1/4", False, "T1", False, "not T1/4 => not T1"),
    ("T1", False, "T1/4", False, "not T1 => not T1/4"),
    ("ballQClosed", True, "T3", True, "closed ball => T3"),
    ("ballQClosed", True, "T3.5", True, "closed ball => T3.5"),
    ("ballQClosed", True, "T2", True, "closed ball => T2"),
    ("T3", False, "ballQClosed", False, "not T3 => ball not closed"),
    ("T3", True, "T3.5", True, "T3 => T3.5"),
    ("T3.5", True, "T3", True, "T3.5 => T3"),
    ("T3", False, "T3.5", False, "not T3 => not T3.5"),
    ("T3.5", False, "T3", False, "not T3.5 => not T3"),
    ("T3", True, "T2", True, "T3 => T2"),
    ("T2", False, "T3", False, "not T2 => not T3"),
    ("T2", True, "T1", True, "T2 => T1"),
    ("T1", False, "T2", False, "not T1 => not T2"),
    ("T1", True, "T2", True, "finite-dimensional T1 => normable"),
    ("T1", True, "T3", True, "finite-dimensional T1 => normable"),
    ("T1", True, "T4", True, "finite-dimensional T1 => normable"),
    ("T1", True, "ballQClosed", True, "finite-dimensional T1 => normable"),
)


@dataclass(frozen=True)
class SeparationReport:
    flags: Mapping[str, Flag]
    dimension: object  # int or math.inf
    right_bounded: Flag
    right_bounded_radius: Fraction | None
    theta_generators: tuple
    constants: Mapping[str, object] = field(default_factory=dict)
    closure_q_bounded: bool | None = None

    def __getitem__(self, name: str) -> bool | None:
        return self.flags[name].value

    def unknown_flags(self) -> list:
        return [k for k in FLAG_NAMES if self.flags[k].value is None]


def _set(flags: dict, name: str, value: bool, provenance: str) -> bool:
    cur = flags[name]
    if cur.value is None:
        flags[name] = Flag(value, provenance)
        return True
    if cur.value != value:
        raise InconsistentReport(
            f"{name}: {provenance} gives {value} but {cur.provenance} gives {cur.value}"
        )
    return False


def _infer(flags: dict, dimension) -> None:
    changed = True
    while changed:
        changed = False
        for pre, pv, con, cv, rule in _RULES:
            if flags[pre].value is pv:
                changed |= _set(flags, con, cv, f"inferred({rule})")
        if dimension == 0:
            changed |= _set(flags, "T4", True, "inferred(covering dimension 0 => T4)")


def separation_report(g: AsymmetricGauge, facts: Mapping[str, Fact] | None = None) -> SeparationReport:
    """Three-valued T0..T4 flags with the source of each value.

    Computed values come first and are closed under the implication rules;
    registered facts then fill what is still unknown (a disagreement
    raises :class:`InconsistentReport`) and the rules run once more.
    """
    if facts is None:
        facts = g.analytic.facts if g.analytic is not None else {}
    flags = {k: Flag(None, UNKNOWN) for k in FLAG_NAMES}
    flags["T0"] = Flag(True, "axiom(every asymmetric normed space is T0)")
    theta = theta_cone(g).generators
    dimension = covering_dimension(g)
    constants: dict = {}

    if g.exact:
        flags["T1"] = Flag(not theta, "computed(theta cone)")
        flags["T2"] = Flag(is_t2(g), "computed(seminorm kernel)")
        flags["ballQClosed"] = Flag(ball_q_closed(g), "computed(ball minus theta inside ball)")
        rb, radius = right_bounded(g)
        rb_flag = Flag(rb, "computed(vertex distance to theta)")
        dec = decompose(g)
        constants["K_P"] = dec.k_p
        constants["K_I_minus_P"] = dec.k_i_minus_p
        constants["ball_sym_bound"] = ball_sym_bounded(g)
        closure_bounded = ball_closure_q_bounded(g)
    else:
        flags["T1"] = Flag(not theta, f"metadata({g.analytic.name}: registered theta cone)")
        rb, radius = right_bounded(g)
        rb_fact = facts.get("right_bounded")
        rb_flag = Flag(rb, f"metadata({rb_fact.citation})" if rb_fact else UNKNOWN)
        closure_bounded = None
    constants["right_bounded_radius"] = radius

    _infer(flags, dimension)
    for name in FLAG_NAMES:
        fact = facts.get(name)
        if fact is not None:
            _set(flags, name, bool(fact.value), f"metadata({fact.citation})")
    _infer(flags, dimension)
    return SeparationReport(
        flags=MappingProxyType(flags),
        dimension=dimension,
        right_bounded=rb_flag,
        right_bounded_radius=radius,
        theta_generators=tuple(theta),
        constants=MappingProxyType(constants),
        closure_q_bounded=closure_bounded,
    )


def report_violations(report: SeparationReport) -> list:
    """Every implication rule whose premise holds but whose conclusion does not."""
    out = []
    f = report.flags
    if f["T0"].value is not True:
        out.append("T0 must always hold")
    for pre, pv, con, cv, rule in _RULES:
        if f[pre].value is pv and f[con].value is not cv:
            out.append(f"{rule}: {con} is {f[con].value}")
    if report.dimension == 0 and f["T4"].value is not True:
        out.append("covering dimension 0 => T4")
    if report.closure_q_bounded is False and f["T3"].value is True:
        out.append("q-unbounded ball closure with T3 asserted")
    return out
