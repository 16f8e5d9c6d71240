from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from stringlinks.errors import DomainError
from stringlinks.linalg import (
    Echelon,
    SparseMatrix,
    Subspace,
    kernel_basis,
    member_of_span,
    quotient_dim,
    rank,
    rref,
    row_space,
)


def M(rows):
    return SparseMatrix.from_dense(rows)


@st.composite
def matrices(draw, max_size=12):
    r = draw(st.integers(1, max_size))
    c = draw(st.integers(1, max_size))
    cells = draw(st.lists(st.sampled_from([0, 0, 0, 1, -1, 2, -2]), min_size=r * c, max_size=r * c))
    return M([cells[i * c : (i + 1) * c] for i in range(r)])


def test_rref_examples():
    I3 = SparseMatrix.identity(3)
    assert rref(I3) == (I3, (0, 1, 2))
    Z = M([[0, 0], [0, 0]])
    assert rref(Z) == (Z, ())
    red, piv = rref(M([[1, 2], [2, 4]]))
    assert red.to_dense() == [[1, 2], [0, 0]] and piv == (0,)


def test_rank_kernel_membership_examples():
    assert rank(SparseMatrix.identity(5)) == 5
    ker = kernel_basis(M([[1, 1]]))
    assert ker.dim == 1 and {0: 1, 1: -1} in ker
    sub = Subspace.span(2, [{0: 1, 1: -1}])
    assert member_of_span({0: 2, 1: -2}, sub)
    assert not member_of_span({0: 1}, sub)
    assert quotient_dim(2, sub) == 1


def test_dimension_errors():
    sub = Subspace.span(2, [{0: 1}])
    with pytest.raises(DomainError):
        quotient_dim(3, sub)
    with pytest.raises(DomainError):
        member_of_span({5: 1}, sub)
    with pytest.raises(DomainError):
        M([[1, 2]]) @ M([[1, 2]])


def test_exact_rationals():
    red, _ = rref(M([[3, 1], [1, 1]]))
    assert red.to_dense() == [[1, 0], [0, 1]]
    red, _ = rref(M([[3, 1]]))
    assert red[0, 1] == Fraction(1, 3)
    assert all(isinstance(v, Fraction) for r in red.rows for v in r.values())


def random_matrix(rng, max_size=40):
    r, c = rng.randint(1, max_size), rng.randint(1, max_size)
    density = rng.choice([0.05, 0.2, 0.5])
    return M([[rng.randint(-2, 2) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)])


def test_rank_nullity_kernel_idempotence(rng):
    for _ in range(200):
        m = random_matrix(rng)
        ker = kernel_basis(m)
        assert rank(m) + ker.dim == m.ncols
        for v in ker.basis:
            assert not m.apply(v)
        red, piv = rref(m)
        assert rref(red) == (red, piv)


@given(matrices(max_size=12), st.randoms(use_true_random=False))
def test_row_order_independent(m, rnd):
    rows = list(m.rows)
    rnd.shuffle(rows)
    assert rref(SparseMatrix(m.nrows, m.ncols, tuple(rows))) == rref(m)


@given(matrices(max_size=12))
def test_matches_sympy(m):
    S = sympy.Matrix(m.to_dense())
    R, piv = S.rref()
    red, mine = rref(m)
    assert mine == tuple(piv)
    assert [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in red.to_dense()] == R.tolist()


@given(matrices(max_size=15))
def test_incremental_echelon_agrees(m):
    ech = Echelon(m.ncols)
    for r in m.rows:
        ech.add(r)
    assert tuple(ech.rows()) == row_space(m).basis
    assert ech.rank == rank(m)


def test_transpose_and_product():
    a = M([[1, 2, 0], [0, 1, 3]])
    assert a.transpose().transpose() == a
    assert (a @ SparseMatrix.identity(3)) == a
    assert (a @ a.transpose()).to_dense() == [[5, 2], [2, 10]]
