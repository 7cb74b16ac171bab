from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asymspace.exact import (
    DimensionMismatch,
    Subspace,
    as_rational,
    matvec,
    null_space,
    orthogonal_complement,
    primitive_integer,
    rank,
    subspace_membership,
)

F = Fraction


def test_null_space_examples():
    assert null_space([[1, 0]]) == Subspace.span([(0, 1)], 2)
    assert null_space([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).is_zero()
    assert null_space([[1, 1], [2, 2]]) == Subspace.span([(1, -1)], 2)


def test_empty_matrix_gives_full_space():
    assert null_space([], 3).is_full()
    with pytest.raises(ValueError):
        null_space([])


def test_orthogonal_complement_examples():
    x_axis = Subspace.span([(1, 0)], 2)
    assert orthogonal_complement(x_axis) == Subspace.span([(0, 1)], 2)
    assert orthogonal_complement(Subspace.zero(3)).is_full()
    assert orthogonal_complement(Subspace.span([(1, 1)], 2)) == Subspace.span([(1, -1)], 2)


def test_membership_examples():
    x_axis = Subspace.span([(1, 0)], 2)
    assert subspace_membership(x_axis, (3, 0))
    assert not subspace_membership(x_axis, (3, 1))
    assert subspace_membership(Subspace.span([(1, 2)], 2), (2, 4))
    with pytest.raises(DimensionMismatch):
        subspace_membership(x_axis, (1, 2, 3))


def test_as_rational_rejects_floats():
    assert as_rational("3/4") == F(3, 4)
    assert as_rational(-2) == F(-2)
    for bad in (0.5, "0.5", "1e3", True):
        with pytest.raises((TypeError, ValueError)):
            as_rational(bad)


def test_primitive_integer():
    assert primitive_integer((F(2, 3), F(-4, 3))) == (1, -2)
    assert primitive_integer((0, 0)) == (0, 0)


def test_coordinates_and_complement():
    s = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
    x = (2, 5, 7)
    c = s.coordinates(x)
    assert tuple(sum(ci * b[j] for ci, b in zip(c, s.basis)) for j in range(3)) == x
    comp = s.complement_basis()
    assert Subspace.span(list(s.basis) + list(comp), 3).is_full()
    with pytest.raises(ValueError):
        s.coordinates((1, 0, 0))


small = st.fractions(min_value=-10, max_value=10, max_denominator=10)


def matrices(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=max_dim).map(
            lambda rows: (rows, n)
        )
    )


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_null_space_is_exact_kernel(data):
    rows, n = data
    ns = null_space(rows, n)
    for b in ns.basis:
        assert all(v == 0 for v in matvec(rows, b)) if rows else True
    assert rank(rows, n) + ns.dim == n


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_complement_is_involution(data):
    rows, n = data
    s = Subspace.span(rows, n)
    comp = orthogonal_complement(s)
    assert s.dim + comp.dim == n
    for a in s.basis:
        for b in comp.basis:
            assert sum(x * y for x, y in zip(a, b)) == 0
    assert orthogonal_complement(comp) == s


@settings(max_examples=60, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_canonical_basis_ignores_order(data, rnd):
    rows, n = data
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    scaled = [[2 * c for c in r] for r in shuffled]
    assert Subspace.span(rows, n).basis == Subspace.span(scaled, n).basis
