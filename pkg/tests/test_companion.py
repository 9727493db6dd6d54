import itertools

import pytest
from hypothesis import given, settings, strategies as st

from coupledrec.algebra import ONE, ZERO, Mat2, Poly, Scalar
from coupledrec.companion import (
    SquareMatrix,
    build_companion,
    char_poly_oracle,
    initial_state,
    poly_at_matrix,
    step,
)
from coupledrec.decouple import CoupledSystem
from coupledrec.sequence import generate_coupled
from conftest import M, TILE, scalars, systems


def leibniz_char_poly(m: SquareMatrix) -> Poly:
    """det(xI - M) by summing over all permutations; polynomial entries."""
    n = m.dim
    entry = [[Poly.from_coeffs([-m[i, j], 1 if i == j else 0]) for j in range(n)] for i in range(n)]
    total = Poly()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Poly.from_coeffs([-1 if inversions % 2 else 1])
        for i in range(n):
            term = term * entry[i][perm[i]]
        total = total + term
    return total


def tiling2():
    return CoupledSystem.from_rows([TILE, TILE], [1, 1], [0, 1])


def test_build_companion_tiling():
    expected = SquareMatrix.from_rows([[1, 0, 1, 0], [1, 1, 1, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert build_companion(tiling2()) == expected


def test_build_companion_order_one():
    a = M([[1, 2], [3, 4]])
    sys = CoupledSystem((a,), (0,), (0,))
    assert build_companion(sys).rows == a.rows


def test_build_companion_zero_blocks():
    sys = CoupledSystem((Mat2.zero(),) * 2, (0, 0), (0, 0))
    m = build_companion(sys)
    nonzero = {(i, j) for i in range(4) for j in range(4) if not m[i, j].is_zero()}
    assert nonzero == {(2, 0), (3, 1)}
    assert m[2, 0] == 1 and m[3, 1] == 1


def test_oracle_examples():
    assert char_poly_oracle(SquareMatrix.from_rows(TILE)) == Poly.from_coeffs([1, -2, 1])
    assert char_poly_oracle(build_companion(tiling2())) == Poly.from_coeffs([1, 2, -1, -2, 1])
    assert char_poly_oracle(SquareMatrix.zeros(4)) == Poly.from_coeffs([0, 0, 0, 0, 1])


@st.composite
def square_matrices(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    return SquareMatrix(tuple(tuple(draw(scalars) for _ in range(n)) for _ in range(n)))


@settings(max_examples=30)
@given(square_matrices())
def test_oracle_matches_leibniz(m):
    p = char_poly_oracle(m)
    assert p == leibniz_char_poly(m)
    assert p.degree == m.dim and p.is_monic()


@settings(max_examples=20)
@given(systems(max_order=3))
def test_cayley_hamilton(sys):
    m = build_companion(sys)
    assert poly_at_matrix(char_poly_oracle(m), m).is_zero()


def test_step_examples():
    w = (Scalar(1), Scalar(2, 1), Scalar(-3))
    assert step(SquareMatrix.identity(3), w) == w
    assert step(build_companion(tiling2()), (1, 1, 1, 0)) == (2, 3, 1, 1)
    assert step(SquareMatrix.zeros(3), w) == (ZERO,) * 3


def test_step_dimension_mismatch():
    with pytest.raises(ValueError):
        step(SquareMatrix.identity(3), (1, 2))


@given(systems(max_order=4), st.integers(0, 25))
def test_step_iteration_reproduces_coupled(sys, extra):
    s = sys.order
    n = s - 1 + extra
    pair = generate_coupled(sys, n)
    m = build_companion(sys)
    w = initial_state(sys)
    for i in range(s - 1, n):
        assert w[0] == pair.a[i] and w[1] == pair.b[i]
        w = step(m, w)
    assert w[0] == pair.a[n] and w[1] == pair.b[n]
    # lower slots carry the older terms
    for j in range(1, s):
        assert w[2 * j] == pair.a[n - j] and w[2 * j + 1] == pair.b[n - j]


def test_square_matrix_validation():
    with pytest.raises(ValueError):
        SquareMatrix(((ONE, ZERO),))
    with pytest.raises(ValueError):
        SquareMatrix(())
