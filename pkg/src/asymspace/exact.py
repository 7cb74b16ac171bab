"""Exact rational vectors, matrices and canonical subspaces.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions.  Nothing in here ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

__all__ = [
    "Rational",
    "Vector",
    "DimensionMismatch",
    "as_rational",
    "vector",
    "matrix",
    "dot",
    "add",
    "sub",
    "scale",
    "neg",
    "is_zero",
    "zero_vector",
    "rref",
    "rank",
    "solve",
    "primitive_integer",
    "matvec",
    "matmul",
    "transpose",
    "identity",
    "inverse",
    "Subspace",
    "null_space",
    "orthogonal_complement",
    "subspace_membership",
]


class DimensionMismatch(ValueError):
    pass


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Integers, Fractions and strings such as ``"3/4"`` or ``"-2"`` are
    accepted.  Floats are rejected because they silently carry binary
    rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational literals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def vector(values: Iterable) -> Vector:
    return tuple(as_rational(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> tuple:
    return tuple(vector(r) for r in rows)


def _check(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension {len(u)} vs {len(v)}")


def dot(u: Sequence, v: Sequence) -> Fraction:
    _check(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    _check(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def primitive_integer(v: Sequence) -> tuple:
    """Positive multiple of ``v`` with coprime integer entries."""
    den = 1
    for a in v:
        a = Fraction(a)
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(Fraction(a) * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(a) for a in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatch("inconsistent row lengths")
    pivots: list[int] = []
    lead = 0
    for col in range(ncols):
        piv = next((i for i in range(lead, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        p = m[lead][col]
        if p != 1:
            m[lead] = [a / p for a in m[lead]]
        prow = m[lead]
        for i in range(len(m)):
            if i != lead:
                f = m[i][col]
                if f != 0:
                    m[i] = [a - f * b for a, b in zip(m[i], prow)]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    return m[:lead], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """Unique solution of the square system ``a x = b``, or None if singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, piv = rref(aug, n + 1)
    if piv != list(range(n)):
        return None
    return tuple(red[i][n] for i in range(n))


def matvec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def identity(n: int) -> tuple:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def inverse(m: Sequence[Sequence]) -> tuple:
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(n))]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n stored by its reduced row echelon basis.

    Two spanning sets of the same subspace always produce the same
    ``basis``, so ``==`` is subspace equality.
    """

    ambient: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vs = [vector(v) for v in vectors]
        for v in vs:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient}")
        if not vs:
            return cls(ambient, ())
        red, _ = rref(vs, ambient)
        return cls(ambient, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, a in enumerate(b) if a != 0) for b in self.basis]

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def __contains__(self, x) -> bool:
        return subspace_membership(self, x)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(b in self for b in other.basis)

    def coordinates(self, x: Sequence) -> Vector:
        """Coefficients of ``x`` in ``basis``; x must lie in the subspace."""
        x = vector(x)
        coeffs = tuple(x[p] for p in self.pivots)
        residual = x
        for c, b in zip(coeffs, self.basis):
            residual = sub(residual, scale(c, b))
        if not is_zero(residual):
            raise ValueError("vector is not in the subspace")
        return coeffs

    def complement_basis(self) -> tuple:
        """Standard unit vectors on the non-pivot columns."""
        piv = set(self.pivots)
        out = []
        for j in range(self.ambient):
            if j not in piv:
                out.append(tuple(Fraction(int(i == j)) for i in range(self.ambient)))
        return tuple(out)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.basis + other.basis, self.ambient)

    def __str__(self) -> str:
        if not self.basis:
            return "{0}"
        inner = ", ".join("(" + ",".join(str(a) for a in b) + ")" for b in self.basis)
        return "span{" + inner + "}"


def null_space(m: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """The subspace {x : m x = 0}.

    An empty matrix needs ``ncols``; its null space is the whole space.
    """
    rows = [vector(r) for r in m]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    red, piv = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return Subspace.span(basis, ncols)


def orthogonal_complement(s: Subspace) -> Subspace:
    return null_space(s.basis, s.ambient)


def subspace_membership(s: Subspace, x: Sequence) -> bool:
    x = vector(x)
    if len(x) != s.ambient:
        raise DimensionMismatch(f"vector of length {len(x)} in Q^{s.ambient}")
    residual = list(x)
    for b, p in zip(s.basis, s.pivots):
        c = residual[p]
        if c != 0:
            residual = [r - c * bb for r, bb in zip(residual, b)]
    return all(r == 0 for r in residual)
