import pytest
from hypothesis import given, settings, strategies as st

from coupledrec.algebra import Mat2, Scalar
from coupledrec.decouple import CoefficientVector, CoupledSystem, coefficients_recursive
from coupledrec.sequence import (
    SequencePair,
    bootstrap_initials,
    generate_coupled,
    generate_decoupled,
    verify_recurrence,
)
from coupledrec.tiling import tiling_system
from conftest import scalars, systems


def ints(xs):
    return tuple(xs)


def test_generate_coupled_tiling3():
    pair = generate_coupled(tiling_system(3), 3)
    assert pair.a == (1, 1, 2, 4)
    assert pair.b == (0, 1, 3, 8)


def test_generate_coupled_identity():
    sys = CoupledSystem((Mat2.identity(),), (1,), (1,))
    pair = generate_coupled(sys, 4)
    assert pair.a == pair.b == (1,) * 5


def test_generate_coupled_tiling1():
    # a_n = a_{n-1}, b_n = a_{n-1} + b_{n-1}, by hand
    assert generate_coupled(tiling_system(1), 5).b == (0, 1, 2, 3, 4, 5)


def test_generate_coupled_short_horizon():
    with pytest.raises(ValueError, match="horizon shorter than initial data"):
        generate_coupled(tiling_system(3), 1)
    # n = s - 1 returns exactly the initial data
    assert len(generate_coupled(tiling_system(3), 2)) == 3


def test_horizon_cap():
    with pytest.raises(ValueError):
        generate_coupled(tiling_system(2), 50, max_terms=10)


def test_bootstrap_tiling():
    a, b, t = bootstrap_initials(tiling_system(2))
    assert a == (1, 1, 2, 3)
    assert t == (1, 2, 5, 10)
    assert bootstrap_initials(tiling_system(1))[2] == (1, 2)


def test_bootstrap_zero():
    sys = CoupledSystem((Mat2.identity(), Mat2.identity()), (0, 0), (0, 0))
    for part in bootstrap_initials(sys):
        assert part == (0,) * 4


def test_generate_decoupled_examples():
    assert generate_decoupled(CoefficientVector(1, (2, -1)), (1, 2), 6) == tuple(range(1, 8))
    fib = generate_decoupled(CoefficientVector(2, (2, 1, -2, -1)), (1, 1, 2, 3), 6)
    assert fib == (1, 1, 2, 3, 5, 8, 13)
    assert generate_decoupled(CoefficientVector(2, (3, -1, 7, 2)), (0,) * 4, 9) == (0,) * 10


def test_generate_decoupled_bad_init():
    with pytest.raises(ValueError):
        generate_decoupled(CoefficientVector(2, (2, 1, -2, -1)), (1, 1, 2), 6)


def test_verify_examples():
    c3 = coefficients_recursive(tiling_system(3).matrices)
    a = generate_coupled(tiling_system(3), 29).a
    assert len(a) == 30
    assert verify_recurrence(a, c3)

    report = verify_recurrence((1, 1, 2, 3, 5, 8), CoefficientVector(1, (2, -1)))
    assert not report.passed
    assert report.first_violation == 2

    assert verify_recurrence((0,) * 12, c3)


def test_verify_too_short():
    with pytest.raises(ValueError):
        verify_recurrence((1, 2), CoefficientVector(1, (2, -1)))


@settings(max_examples=25)
@given(systems(max_order=4), scalars, scalars)
def test_decoupling_soundness(sys, alpha, beta):
    c = coefficients_recursive(sys.matrices)
    pair = generate_coupled(sys, 6 * sys.order + 10)
    for z in (pair.a, pair.b, pair.t, pair.combine(alpha, beta)):
        report = verify_recurrence(z, c)
        assert report.passed, report


@settings(max_examples=25)
@given(systems(max_order=4))
def test_decoupled_reproduces_coupled(sys):
    c = coefficients_recursive(sys.matrices)
    n = 5 * sys.order + 8
    pair = generate_coupled(sys, n)
    a0, b0, t0 = bootstrap_initials(sys)
    assert generate_decoupled(c, a0, n) == pair.a
    assert generate_decoupled(c, b0, n) == pair.b
    assert generate_decoupled(c, t0, n) == pair.t


@settings(max_examples=20)
@given(systems(max_order=3), st.integers(0, 20), scalars)
def test_perturbation_is_located(sys, offset, delta):
    c = coefficients_recursive(sys.matrices)
    z = list(generate_coupled(sys, 2 * sys.order + 25).a)
    idx = 2 * sys.order + offset
    if delta.is_zero():
        delta = Scalar(1)
    z[idx] = z[idx] + delta
    report = verify_recurrence(z, c)
    assert report.first_violation == idx


def test_sequence_pair_component():
    p = SequencePair((1, 2), (3, 4))
    assert p.t == (4, 6)
    assert p.component("b") == (3, 4)
    with pytest.raises(ValueError):
        p.component("x")
    with pytest.raises(ValueError):
        SequencePair((1,), ())
