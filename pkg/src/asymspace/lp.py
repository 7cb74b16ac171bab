"""Exact linear programming.

Two-phase primal simplex with Bland's anti-cycling rule.  The tableau is
kept fraction free: every entry is an integer and the true tableau is the
integer tableau divided by a common positive denominator ``det``
(Edmonds/Bareiss pivoting).  All divisions in a pivot are exact.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exact import Vector, as_rational, vector

__all__ = [
    "MalformedProgram",
    "LinearProgram",
    "LpStatus",
    "LpOutcome",
    "solve_lp",
    "minimize",
    "maximize",
]


class MalformedProgram(ValueError):
    pass


@dataclass(frozen=True)
class LinearProgram:
    """minimize <objective, x> s.t. <a, x> <= b (inequalities), <a, x> = b.

    Variables are free unless their index is listed in ``nonnegative``.
    """

    objective: Vector
    inequalities: tuple = ()
    equalities: tuple = ()
    nonnegative: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = len(self.objective)
        if n < 1:
            raise MalformedProgram("a program needs at least one variable")
        for kind in (self.inequalities, self.equalities):
            for row in kind:
                if len(row) != 2 or len(row[0]) != n:
                    raise MalformedProgram(
                        f"constraint row does not match {n} variables: {row!r}"
                    )
        if any(not 0 <= j < n for j in self.nonnegative):
            raise MalformedProgram("nonnegative index out of range")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


class LpStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    value: Fraction | None = None
    witness: Vector | None = None

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


def _lcm_den(values: Iterable[Fraction]) -> int:
    den = 1
    for v in values:
        d = v.denominator
        den = den * d // gcd(den, d)
    return den


def _pivot(rows: list[list[int]], r: int, s: int, det: int) -> int:
    prow = rows[r]
    p = prow[s]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[s]
        if f:
            rows[i] = [(a * p - f * b) // det for a, b in zip(row, prow)]
        else:
            rows[i] = [a * p // det for a in row]
    if p < 0:
        # keep the common denominator positive; T/det is unchanged
        for i, row in enumerate(rows):
            rows[i] = [-a for a in row]
        p = -p
    return p


def _simplex(rows, obj, basis, det, allowed):
    """Run Bland's rule on ``rows`` (constraints) with objective row ``obj``.

    ``rows`` and ``obj`` are stored together in one list so a pivot updates
    both: constraints are rows[0:len(basis)], the objective sits at index
    ``obj`` (and any further rows are carried along).  Returns
    (status, det) with status 'optimal' or 'unbounded'.
    """
    m = len(basis)
    while True:
        orow = rows[obj]
        entering = next((j for j in allowed if orow[j] < 0), None)
        if entering is None:
            return "optimal", det
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                rhs = rows[i][-1]
                if best is None:
                    best = (i, rhs, a)
                    continue
                _, brhs, ba = best
                lhs, rhs_cmp = rhs * ba, brhs * a
                if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i] < basis[best[0]]):
                    best = (i, rhs, a)
        if best is None:
            return "unbounded", det
        r = best[0]
        det = _pivot(rows, r, entering, det)
        basis[r] = entering


def solve_lp(p: LinearProgram) -> LpOutcome:
    """Solve ``p`` exactly.

    OPTIMAL comes with a witness meeting every constraint exactly and the
    exact optimum; INFEASIBLE and UNBOUNDED carry no data.
    """
    n = p.num_vars
    cols_of: list[tuple[int, ...]] = []
    ncol = 0
    for j in range(n):
        if j in p.nonnegative:
            cols_of.append((ncol,))
            ncol += 1
        else:
            cols_of.append((ncol, ncol + 1))
            ncol += 2
    n_ub = len(p.inequalities)
    slack0 = ncol
    art0 = slack0 + n_ub

    raw = []
    for a, b in p.inequalities:
        raw.append((vector(a), as_rational(b), True))
    for a, b in p.equalities:
        raw.append((vector(a), as_rational(b), False))

    # decide which rows need an artificial variable
    needs_art = []
    for a, b, is_ub in raw:
        needs_art.append((not is_ub) or b < 0)
    n_art = sum(needs_art)
    width = art0 + n_art + 1

    rows: list[list[int]] = []
    basis: list[int] = []
    art_rows: list[int] = []
    k_art = 0
    for i, (a, b, is_ub) in enumerate(raw):
        den = _lcm_den(list(a) + [b])
        row = [0] * width
        for j, aj in enumerate(a):
            v = int(aj * den)
            cs = cols_of[j]
            row[cs[0]] = v
            if len(cs) == 2:
                row[cs[1]] = -v
        rhs = int(b * den)
        if is_ub:
            row[slack0 + i] = 1
        if needs_art[i]:
            if rhs < 0:
                row = [-v for v in row]
                rhs = -rhs
            row[art0 + k_art] = 1
            basis.append(art0 + k_art)
            art_rows.append(i)
            k_art += 1
        else:
            basis.append(slack0 + i)
        row[-1] = rhs
        rows.append(row)
    m = len(rows)

    cden = _lcm_den(vector(p.objective))
    obj2 = [0] * width
    for j, cj in enumerate(p.objective):
        v = int(Fraction(cj) * cden)
        cs = cols_of[j]
        obj2[cs[0]] = v
        if len(cs) == 2:
            obj2[cs[1]] = -v
    rows.append(obj2)
    det = 1

    if n_art:
        obj1 = [0] * width
        for i in art_rows:
            obj1 = [x - y for x, y in zip(obj1, rows[i])]
        for k in range(n_art):
            obj1[art0 + k] = 0
        rows.append(obj1)
        status, det = _simplex(rows, m + 1, basis, det, range(width - 1))
        if rows[m + 1][-1] != 0:
            return LpOutcome(LpStatus.INFEASIBLE)
        rows.pop()  # phase-one objective
        # drive remaining (zero-level) artificials out of the basis
        i = 0
        while i < len(basis):
            if basis[i] >= art0:
                row = rows[i]
                s = next((j for j in range(art0) if row[j] != 0), None)
                if s is None:
                    del rows[i]
                    del basis[i]
                    continue
                det = _pivot(rows, i, s, det)
                basis[i] = s
            i += 1
        rows = [row[:art0] + [row[-1]] for row in rows]
        m = len(basis)

    status, det = _simplex(rows, m, basis, det, range(art0))
    if status == "unbounded":
        return LpOutcome(LpStatus.UNBOUNDED)

    values = [Fraction(0)] * art0
    for i, b in enumerate(basis):
        values[b] = Fraction(rows[i][-1], det)
    x = []
    for cs in cols_of:
        v = values[cs[0]]
        if len(cs) == 2:
            v -= values[cs[1]]
        x.append(v)
    x = tuple(x)
    value = sum((Fraction(c) * xi for c, xi in zip(p.objective, x)), Fraction(0))
    return LpOutcome(LpStatus.OPTIMAL, value, x)


def minimize(objective: Sequence, inequalities=(), equalities=(), nonnegative=()) -> LpOutcome:
    return solve_lp(
        LinearProgram(
            vector(objective),
            tuple(inequalities),
            tuple(equalities),
            frozenset(nonnegative),
        )
    )


def maximize(objective: Sequence, inequalities=(), equalities=(), nonnegative=()) -> LpOutcome:
    """Maximize by minimizing the negated objective; value is reported as the max."""
    out = minimize(tuple(-as_rational(c) for c in objective), inequalities, equalities, nonnegative)
    if out.optimal:
        return LpOutcome(out.status, -out.value, out.witness)
    return out
