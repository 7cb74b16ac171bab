"""Polyhedra in H- and V-representation over the rationals.

An H-representation is a tuple of rows ``(a, b)`` meaning ``<a, x> <= b``.
A V-representation is ``VRep(points, rays)`` meaning
``conv(points) + cone(rays)``; a lineality direction ``l`` shows up as the
two rays ``l`` and ``-l``.

Conversion between the two uses the double description method on the
homogenized cone, with exact integer generators.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exact import (
    DimensionMismatch,
    as_rational,
    dot,
    primitive_integer,
    rank,
    solve,
    vector,
)
from .lp import LpStatus, maximize, minimize

__all__ = [
    "DEFAULT_DD_BUDGET",
    "DDBudgetExceeded",
    "EmptyPolyhedron",
    "VRep",
    "Polyhedron",
    "dd_budget",
    "dd_convert",
    "recession_cone",
    "polyhedron_contains",
    "support",
    "in_hull",
    "remove_redundant",
    "enumerate_vertices",
    "lp_min_by_enumeration",
]

DEFAULT_DD_BUDGET = 10_000


class DDBudgetExceeded(RuntimeError):
    """Raised when double description produces more generators than allowed."""


class EmptyPolyhedron(ValueError):
    pass


def dd_budget() -> int:
    raw = os.environ.get("ASYMSPACE_DD_BUDGET")
    return int(raw) if raw else DEFAULT_DD_BUDGET


class VRep(NamedTuple):
    points: tuple
    rays: tuple


# ---------------------------------------------------------------------------
# double description on cones {z : <h, z> <= 0 for h in H}


def _int_row(row: Sequence) -> tuple:
    return primitive_integer(row) if any(row) else tuple(0 for _ in row)


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _cone_generators(constraints: Sequence[Sequence], d: int, budget: int):
    """Generators of {z in Q^d : <h, z> <= 0 for all h}.

    Returns (lineality basis, extreme rays of the pointed part), all as
    primitive integer tuples.  Constraint rows must already be integers.
    """
    lin = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays: list[tuple] = []
    zeros: list[frozenset] = []  # indices of processed constraints tight at each ray
    processed: list[int] = []
    for k, h in enumerate(constraints):
        if not any(h):
            continue
        hit = next((l for l in lin if _idot(h, l) != 0), None)
        if hit is not None:
            hl = _idot(h, hit)
            if hl > 0:
                hit = tuple(-a for a in hit)
                hl = -hl
            new_lin = []
            for l in lin:
                if l is hit or l == tuple(-a for a in hit):
                    continue
                v = _idot(h, l)
                if v:
                    l = tuple(a * hl - v * b for a, b in zip(l, hit))
                if any(l):
                    new_lin.append(primitive_integer(l))
            new_rays = []
            for r in rays:
                v = _idot(h, r)
                if v:
                    # project onto the hyperplane along the lineality direction
                    r = tuple(a * -hl + v * b for a, b in zip(r, hit))
                new_rays.append(primitive_integer(r))
            zeros = [z | {k} for z in zeros]
            rays = new_rays + [primitive_integer(hit)]
            zeros.append(frozenset(processed))
            lin = new_lin
            processed.append(k)
            continue

        pos, neg, zer = [], [], []
        vals = []
        for idx, r in enumerate(rays):
            v = _idot(h, r)
            vals.append(v)
            if v > 0:
                pos.append(idx)
            elif v < 0:
                neg.append(idx)
            else:
                zer.append(idx)
        if not pos:
            zeros = [z | {k} if vals[i] == 0 else z for i, z in enumerate(zeros)]
            processed.append(k)
            continue
        need = d - len(lin) - 2
        new_rays = [rays[i] for i in neg] + [rays[i] for i in zer]
        new_zeros = [zeros[i] for i in neg] + [zeros[i] | {k} for i in zer]
        for i in pos:
            zi = zeros[i]
            for j in neg:
                common = zi & zeros[j]
                if len(common) < need:
                    continue
                adjacent = True
                for t in range(len(rays)):
                    if t != i and t != j and common <= zeros[t]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                a, b = vals[i], -vals[j]
                r = tuple(b * x + a * y for x, y in zip(rays[i], rays[j]))
                new_rays.append(primitive_integer(r))
                new_zeros.append(common | {k})
                if len(new_rays) > budget:
                    raise DDBudgetExceeded(
                        f"double description exceeded {budget} generators"
                    )
        rays, zeros = new_rays, new_zeros
        processed.append(k)
    return lin, rays


def _hrep_to_vrep(dim: int, hrep, budget: int) -> VRep:
    cons = []
    for a, b in hrep:
        cons.append(_int_row(tuple(a) + (-Fraction(b),)))
    cons.append(tuple([0] * dim + [-1]))
    lin, rays = _cone_generators(cons, dim + 1, budget)
    points, out_rays = [], []
    for r in rays:
        t = r[-1]
        if t > 0:
            points.append(tuple(Fraction(a, t) for a in r[:-1]))
        else:
            out_rays.append(tuple(Fraction(a) for a in r[:-1]))
    for l in lin:
        v = tuple(Fraction(a) for a in l[:-1])
        out_rays.append(v)
        out_rays.append(tuple(-a for a in v))
    if not points:
        return VRep((), ())
    return VRep(tuple(sorted(points)), tuple(sorted(out_rays)))


def _vrep_to_hrep(dim: int, vrep: VRep, budget: int) -> tuple:
    cons = []
    for p in vrep.points:
        cons.append(_int_row(tuple(p) + (Fraction(-1),)))
    for r in vrep.rays:
        cons.append(_int_row(tuple(r) + (Fraction(0),)))
    lin, rays = _cone_generators(cons, dim + 1, budget)
    rows = set()
    for r in rays:
        a, b = r[:-1], r[-1]
        if not any(a):
            if b < 0:
                rows.add((tuple([0] * dim), -1))  # empty set
            continue
        rows.add((a, b))
    for l in lin:
        a, b = l[:-1], l[-1]
        rows.add((a, b))
        rows.add((tuple(-x for x in a), -b))
    return tuple(
        (tuple(Fraction(x) for x in a), Fraction(b)) for a, b in sorted(rows)
    )


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """Polyhedron in Q^dim holding an H-rep, a V-rep, or both.

    Build with :meth:`from_hrep` / :meth:`from_vrep`; :func:`dd_convert`
    fills in the missing representation.
    """

    dim: int
    hrep: tuple | None = None
    vrep: VRep | None = None

    def __post_init__(self):
        if self.hrep is None and self.vrep is None:
            raise ValueError("a polyhedron needs at least one representation")
        for a, _ in self.hrep or ():
            if len(a) != self.dim:
                raise DimensionMismatch("H-rep row of wrong length")
        if self.vrep is not None:
            for v in self.vrep.points + self.vrep.rays:
                if len(v) != self.dim:
                    raise DimensionMismatch("V-rep generator of wrong length")

    @classmethod
    def from_hrep(cls, rows, dim: int | None = None) -> "Polyhedron":
        rows = tuple((vector(a), as_rational(b)) for a, b in rows)
        if dim is None:
            if not rows:
                raise ValueError("dim is required for an empty H-rep")
            dim = len(rows[0][0])
        return cls(dim, hrep=rows)

    @classmethod
    def from_vrep(cls, points, rays=(), dim: int | None = None) -> "Polyhedron":
        points = tuple(vector(p) for p in points)
        rays = tuple(vector(r) for r in rays)
        if dim is None:
            if not points:
                raise ValueError("dim is required for an empty V-rep")
            dim = len(points[0])
        return cls(dim, vrep=VRep(points, rays))

    @classmethod
    def with_both(cls, dim: int, hrep, vrep: VRep, check: bool = True) -> "Polyhedron":
        p = cls(dim, hrep=tuple(hrep), vrep=vrep)
        if check:
            h = cls(dim, hrep=p.hrep)
            v = cls(dim, vrep=vrep)
            if not (polyhedron_contains(h, v) and polyhedron_contains(v, h)):
                raise ValueError("H-rep and V-rep describe different sets")
        return p

    def __contains__(self, x) -> bool:
        x = vector(x)
        if self.hrep is not None:
            return all(dot(a, x) <= b for a, b in self.hrep)
        return in_hull(x, self.vrep.points, self.vrep.rays)

    def is_empty(self) -> bool:
        if self.vrep is not None:
            return not self.vrep.points
        out = minimize([0] * self.dim, self.hrep)
        return out.status is LpStatus.INFEASIBLE

    def h(self) -> tuple:
        return self.hrep if self.hrep is not None else dd_convert(self).hrep

    def v(self) -> VRep:
        return self.vrep if self.vrep is not None else dd_convert(self).vrep


def dd_convert(p: Polyhedron, budget: int | None = None) -> Polyhedron:
    """Return ``p`` with both representations filled in.

    Guaranteed for dim <= 4 within the generator budget; larger inputs are
    attempted and raise :class:`DDBudgetExceeded` when they blow up.
    """
    if p.hrep is not None and p.vrep is not None:
        return p
    budget = dd_budget() if budget is None else budget
    if p.vrep is None:
        return Polyhedron(p.dim, hrep=p.hrep, vrep=_hrep_to_vrep(p.dim, p.hrep, budget))
    v = remove_redundant(p.vrep.points, p.vrep.rays)
    return Polyhedron(p.dim, hrep=_vrep_to_hrep(p.dim, v, budget), vrep=v)


def recession_cone(p: Polyhedron) -> Polyhedron:
    """{d : x + t d in p for all x in p, t >= 0}."""
    if p.hrep is not None:
        if p.is_empty():
            raise EmptyPolyhedron("recession cone of an empty polyhedron")
        return Polyhedron.from_hrep([(a, 0) for a, _ in p.hrep], p.dim)
    if not p.vrep.points:
        raise EmptyPolyhedron("recession cone of an empty polyhedron")
    zero = tuple(Fraction(0) for _ in range(p.dim))
    return Polyhedron(p.dim, vrep=VRep((zero,), p.vrep.rays))


def support(p: Polyhedron, direction: Sequence) -> Fraction | None:
    """sup of <direction, x> over p; None when unbounded."""
    direction = vector(direction)
    if p.vrep is not None:
        if any(dot(direction, r) > 0 for r in p.vrep.rays):
            return None
        if not p.vrep.points:
            raise EmptyPolyhedron("support of an empty polyhedron")
        return max(dot(direction, v) for v in p.vrep.points)
    out = maximize(direction, p.hrep)
    if out.status is LpStatus.UNBOUNDED:
        return None
    if out.status is LpStatus.INFEASIBLE:
        raise EmptyPolyhedron("support of an empty polyhedron")
    return out.value


def polyhedron_contains(outer: Polyhedron, inner: Polyhedron) -> bool:
    """True iff inner is a subset of outer.

    Each outer row is maximized over inner; an unbounded or too-large
    maximum means some point of inner escapes.
    """
    if outer.dim != inner.dim:
        raise DimensionMismatch("polyhedra live in different spaces")
    rows = outer.h()
    if inner.vrep is None and inner.is_empty():
        return True
    if inner.vrep is not None and not inner.vrep.points:
        return True
    for a, b in rows:
        s = support(inner, a)
        if s is None or s > b:
            return False
    return True


def in_hull(x: Sequence, points: Sequence, rays: Sequence = ()) -> bool:
    """Is x in conv(points) + cone(rays)?  Decided by an LP feasibility check."""
    x = vector(x)
    k, l = len(points), len(rays)
    if k == 0:
        return False
    n = len(x)
    eqs = []
    for i in range(n):
        eqs.append((tuple(p[i] for p in points) + tuple(r[i] for r in rays), x[i]))
    eqs.append((tuple([1] * k + [0] * l), 1))
    out = minimize([0] * (k + l), equalities=eqs, nonnegative=range(k + l))
    return out.optimal


def remove_redundant(points: Sequence, rays: Sequence = ()) -> VRep:
    """Drop generators that are combinations of the others (LP test each)."""
    pts = list(dict.fromkeys(tuple(vector(p)) for p in points))
    rs = []
    for r in rays:
        r = vector(r)
        if any(r):
            key = primitive_integer(r)
            rs.append((key, r))
    seen = {}
    for key, r in rs:
        seen.setdefault(key, r)
    rays_u = list(seen.values())
    i = 0
    while i < len(rays_u):
        others = rays_u[:i] + rays_u[i + 1:]
        zero = tuple(Fraction(0) for _ in rays_u[i])
        if others and in_hull(rays_u[i], [zero], others):
            rays_u.pop(i)
        else:
            i += 1
    i = 0
    while i < len(pts):
        others = pts[:i] + pts[i + 1:]
        if others and in_hull(pts[i], others, rays_u):
            pts.pop(i)
        else:
            i += 1
    return VRep(tuple(sorted(pts)), tuple(sorted(rays_u)))


# ---------------------------------------------------------------------------
# brute-force oracles (independent of the simplex and of double description)


def enumerate_vertices(rows: Sequence, dim: int) -> list:
    """All vertices of {x : <a,x> <= b} by solving every dim-subset of rows."""
    rows = [(vector(a), as_rational(b)) for a, b in rows]
    found = set()
    for combo in itertools.combinations(range(len(rows)), dim):
        a = [rows[i][0] for i in combo]
        if rank(a, dim) < dim:
            continue
        x = solve(a, [rows[i][1] for i in combo])
        if x is not None and all(dot(r, x) <= b for r, b in rows):
            found.add(x)
    return sorted(found)


def lp_min_by_enumeration(objective: Sequence, rows: Sequence, dim: int) -> Fraction | None:
    """Minimum of a linear objective over a bounded polyhedron via its vertices."""
    verts = enumerate_vertices(rows, dim)
    if not verts:
        return None
    c = vector(objective)
    return min(dot(c, v) for v in verts)
