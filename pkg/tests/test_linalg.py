import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hermck.algebra import IMAG_UNIT, GaussianRational
from hermck.ck import is_monogenic
from hermck.dims import SpaceDescriptor, dim_formula
from hermck.linalg import ExactMatrix, hm_columns, monogenic_basis, nullspace, rank

from helpers import rand_scalar


def test_identity_has_trivial_nullspace():
    assert nullspace(ExactMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == []


def test_zero_matrix():
    assert len(nullspace(ExactMatrix.zeros(2, 3))) == 3


def test_gaussian_example():
    M = ExactMatrix([[1, IMAG_UNIT, 0], [0, 0, 1]])
    (v,) = nullspace(M)
    assert v == [-IMAG_UNIT, GaussianRational(1), GaussianRational(0)]


def _to_sympy(M):
    return sympy.Matrix(
        [[sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator) for x in row] for row in M.entries]
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_nullspace_against_sympy(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    gaussian = rng.random() < 0.5
    entries = [
        [rand_scalar(rng, gaussian) if rng.random() < 0.5 else GaussianRational(0) for _ in range(cols)]
        for _ in range(rows)
    ]
    # force some rank deficiency
    if rows > 1 and rng.random() < 0.5:
        c = rand_scalar(rng, gaussian)
        entries[-1] = [x * c for x in entries[0]]
    M = ExactMatrix(entries)
    basis = nullspace(M)
    expected_rank = _to_sympy(M).rank()
    assert rank(M) == expected_rank
    assert len(basis) == cols - expected_rank
    for v in basis:
        assert all(not x for x in M.apply(v))
    if basis:
        B = ExactMatrix([list(v) for v in basis])
        assert rank(B) == len(basis)


def test_ragged_matrix_rejected():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def test_basis_examples():
    assert len(monogenic_basis(2, 1, 1, 0)) == 3
    assert len(monogenic_basis(3, 1, 1, 1)) == 15
    basis = monogenic_basis(2, 1, 0, 0)
    assert len(basis) == 2 == 0 + 0 + 2


@pytest.mark.parametrize("n,r,a,b", [(2, 1, 2, 1), (3, 1, 1, 1), (3, 2, 2, 1), (4, 2, 1, 1)])
def test_basis_elements_are_monogenic_and_independent(n, r, a, b):
    basis = monogenic_basis(n, r, a, b)
    assert all(is_monogenic(p) for p in basis)
    cols = hm_columns(n, r, a, b)
    M = ExactMatrix([[p.terms.get(k, 0) for k in cols] for p in basis])
    assert rank(M) == len(basis) == dim_formula(SpaceDescriptor("HM", n, r, a, b))


@pytest.mark.parametrize("n,r,a,b", [(2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 1, 2), (4, 1, 1, 0)])
def test_weight_split_agrees_with_stacked_system(n, r, a, b):
    split = monogenic_basis(n, r, a, b)
    whole = monogenic_basis(n, r, a, b, split_weights=False)
    cols = hm_columns(n, r, a, b)
    both = ExactMatrix([[p.terms.get(k, 0) for k in cols] for p in split + whole])
    assert len(split) == len(whole) == rank(both)


def test_basis_extreme_degrees():
    # r = 0: anti-holomorphic scalars; r = n: holomorphic multiples of the top blade
    assert len(monogenic_basis(3, 0, 0, 2)) == 6
    assert len(monogenic_basis(3, 0, 1, 0)) == 0
    assert len(monogenic_basis(3, 3, 2, 0)) == 6
