from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moyrt.qalg import (
    ONE,
    ZERO,
    LaurentPoly,
    TauPoly,
    evaluate_at,
    parse,
    q,
    quantum_binomial,
    quantum_binomial_partition_sum,
    quantum_factorial,
    quantum_int,
    render,
    shift_q,
    substitute_tau_one,
)

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5).map(LaurentPoly)
taus = st.builds(TauPoly, polys, polys)


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({2: 3, 4: 0})
    assert p.terms == {2: 3}
    assert LaurentPoly({0: 0}) == ZERO
    assert ZERO.is_zero()


def test_integral_predicate():
    assert LaurentPoly({2: 1, -4: 2}).is_integral()
    assert not LaurentPoly({1: 1}).is_integral()


@pytest.mark.parametrize(
    "n, expected",
    [(0, ""), (1, "1"), (2, "q^-1 + q"), (3, "q^-2 + 1 + q^2")],
)
def test_quantum_int_values(n, expected):
    assert render(quantum_int(n)) == (expected or "0")


def test_quantum_int_rejects_negative():
    with pytest.raises(ValueError):
        quantum_int(-1)


@pytest.mark.parametrize("n", range(8))
def test_quantum_int_is_palindromic_and_counts(n):
    p = quantum_int(n)
    assert p.bar() == p
    assert evaluate_at(p, 1) == n


def test_quantum_binomial_examples():
    assert quantum_binomial(5, 0) == ONE
    assert quantum_binomial(2, 1) == q + q ** -1
    assert quantum_binomial(3, -1) == ZERO
    assert quantum_binomial(3, 4) == ZERO
    assert quantum_binomial_partition_sum(0, 4) == ONE
    assert quantum_binomial_partition_sum(1, 1) == q ** -1 + q
    assert quantum_binomial_partition_sum(2, 2) == quantum_binomial(4, 2)


@pytest.mark.parametrize("m", range(7))
@pytest.mark.parametrize("n", range(7))
def test_factorial_quotient_matches_partition_sum(m, n):
    assert quantum_binomial(m + n, n) == quantum_binomial_partition_sum(m, n)


def test_quantum_factorial_recursion():
    for n in range(1, 6):
        assert quantum_factorial(n) == quantum_factorial(n - 1) * quantum_int(n)


def test_ring_examples():
    two = q + q ** -1
    assert two * two == q ** 2 + 2 + q ** -2
    assert shift_q(ONE, 2) == q
    assert substitute_tau_one(TauPoly(ONE, q)) == ONE + q


def test_half_exponent_rendering_round_trip():
    p = LaurentPoly({1: 1, -3: -2, 4: 5})
    text = render(p)
    assert text == "-2*q^(-3/2) + q^(1/2) + 5*q^2"
    assert parse(text) == p


def test_evaluate_at_rational():
    assert evaluate_at(q ** 2 + 1, Fraction(1, 2)) == Fraction(5, 4)
    assert evaluate_at(LaurentPoly({1: 1}), 4) == 2


def test_divmod_exact():
    num = quantum_int(6)
    assert num.divmod_exact(quantum_int(3)) == q ** 3 + q ** -3
    with pytest.raises(ValueError):
        quantum_int(5).divmod_exact(quantum_int(2))


def test_tau_squares_to_one():
    t = TauPoly.tau()
    assert t * t == TauPoly(ONE)


@given(polys, polys, polys)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys)
def test_render_parse_round_trip(a):
    assert parse(render(a)) == a


@given(polys, polys)
def test_bar_is_a_ring_involution(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a


@settings(max_examples=50)
@given(taus, taus, taus)
def test_tau_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert substitute_tau_one(a * b) == substitute_tau_one(a) * substitute_tau_one(b)
