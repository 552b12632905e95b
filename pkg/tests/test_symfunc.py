from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moyrt.qalg import q
from moyrt.symfunc import (
    Alphabet,
    Partition,
    box_complement,
    complete_eval,
    conjugate,
    elementary_eval,
    grassmannian_basis,
    grassmannian_poincare,
    grassmannian_trace,
    h_from_e_determinant,
    kostka,
    newton_identity_residual,
    p_from_e_determinant,
    partitions_in_box,
    partitions_of,
    pieri_e,
    power_derivative_check,
    power_eval,
    schur_eval,
    schur_neg_eval,
    sylvester_pair,
)

P = Partition.of
ROUTES = ("bialternant", "jacobi_trudi_h", "jacobi_trudi_e")

partitions = st.lists(st.integers(0, 5), max_size=5).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))
alphabets = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=4, unique=True)


def test_partition_normalizes_and_indexes():
    lam = P(3, 2, 0)
    assert lam.parts == (3, 2)
    assert lam[1] == 3 and lam[3] == 0
    assert str(lam) == "(3,2)"
    with pytest.raises(ValueError):
        Partition((1, 2))


@pytest.mark.parametrize(
    "lam, expected",
    [((3, 2, 2, 1), (4, 3, 1)), ((), ()), ((1, 1, 1), (3,))],
)
def test_conjugate_examples(lam, expected):
    assert conjugate(P(*lam)) == P(*expected)


def test_box_complement_examples():
    assert box_complement(P(), 2, 2) == P(2, 2)
    assert box_complement(P(2, 1), 2, 2) == P(1)
    assert box_complement(P(3, 3), 2, 3) == P()
    with pytest.raises(ValueError):
        box_complement(P(3), 2, 2)


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions)
def test_box_complement_is_an_involution(lam):
    m, n = max(lam.length, 1), max(lam[1], 1)
    assert box_complement(box_complement(lam, m, n), m, n) == lam


def test_basis_evaluations():
    assert elementary_eval(2, [1, 2, 3]) == 11
    assert complete_eval(0, [7]) == 1
    assert power_eval(2, [1, 2]) == 5
    assert elementary_eval(4, [1, 2, 3]) == 0
    assert complete_eval(-1, [1]) == 0


def test_determinant_formulas():
    e = [elementary_eval(k, [1, 2]) for k in range(1, 3)]
    assert h_from_e_determinant(1, e) == 3 and p_from_e_determinant(1, e) == 3
    assert h_from_e_determinant(2, e) == 7
    assert p_from_e_determinant(2, e) == 5


@given(alphabets, st.integers(1, 6))
def test_determinants_match_direct_evaluation(a, k):
    e = [elementary_eval(j, a) for j in range(1, k + 1)]
    assert h_from_e_determinant(k, e) == complete_eval(k, a)
    assert p_from_e_determinant(k, e) == power_eval(k, a)


def test_newton_examples():
    assert newton_identity_residual(1, [5]) == 0
    assert newton_identity_residual(2, [1, 2]) == 0


@given(alphabets, st.integers(1, 8))
def test_newton_residual_vanishes(a, l):
    assert newton_identity_residual(l, a) == 0


def test_schur_examples():
    a, b = Fraction(3), Fraction(5, 2)
    assert schur_eval(P(1), [a, b]) == a + b
    assert schur_eval(P(1, 1), [1, 2]) == 2
    for route in ROUTES:
        assert schur_eval(P(2, 1), [1, 2, 3], route) == schur_eval(P(2, 1), [1, 2, 3])
    assert schur_eval(P(2, 1), [1, 1, 1], "jacobi_trudi_h") == 8
    with pytest.raises(ZeroDivisionError):
        schur_eval(P(2, 1), [1, 1, 1], "bialternant")


@given(alphabets.filter(lambda a: len(a) >= 3))
def test_schur_routes_agree_on_box(a):
    for lam in partitions_in_box(3, 3):
        vals = {schur_eval(lam, a, r) for r in ROUTES}
        assert len(vals) == 1, lam


def test_schur_negative_alphabet():
    a, b = Fraction(2), Fraction(7)
    assert schur_neg_eval(P(1), [a, b]) == -(a + b)
    assert schur_neg_eval(P(2), [1, 2]) == 2
    assert schur_neg_eval(P(), [1, 2]) == 1
    neg = Alphabet((Fraction(1), Fraction(2))).negated()
    assert schur_neg_eval(P(2, 1), [1, 2]) == schur_eval(conjugate(P(2, 1)), neg)


def test_kostka_examples():
    for lam in partitions_of(4):
        assert kostka(lam, lam) == 1
    assert kostka(P(2, 1), P(1, 1, 1)) == 2
    assert kostka(P(1, 1), P(2)) == 0
    assert kostka(P(2), P(1)) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_kostka_is_unitriangular(k):
    for lam in partitions_of(k):
        for mu in partitions_of(k):
            if lam.dominates_lex(mu):
                assert kostka(mu, lam) == 0


def test_kostka_expansion_of_h():
    a = [Fraction(1), Fraction(-2), Fraction(3, 2), Fraction(5)]
    for lam in partitions_of(5, 3):
        h = 1
        for part in lam.parts:
            h *= complete_eval(part, a)
        s = sum(kostka(mu, lam) * schur_eval(mu, a) for mu in partitions_of(5, 4))
        assert h == s


def test_pieri_examples():
    assert pieri_e(1, P(1)) == [P(2), P(1, 1)]
    assert pieri_e(1, P()) == [P(1)]
    assert pieri_e(2, P(2, 1), max_length=2) == [P(3, 2)]


@given(st.integers(1, 3), partitions.filter(lambda p: p.size <= 5 and p.length <= 3))
def test_pieri_numeric_contract(k, lam):
    a = [Fraction(1), Fraction(2), Fraction(-1, 3), Fraction(4), Fraction(5, 2)]
    lhs = elementary_eval(k, a) * schur_eval(lam, a)
    rhs = sum(schur_eval(mu, a) for mu in pieri_e(k, lam) if mu.length <= len(a))
    assert lhs == rhs


def test_sylvester_pair_examples():
    assert sylvester_pair(P(), P(3, 3), 2, 3) == 1
    assert sylvester_pair(P(), P(), 1, 1) == 0
    assert sylvester_pair(P(1), P(3), 1, 4) == 1
    with pytest.raises(ValueError):
        sylvester_pair(P(4), P(), 1, 3)


def test_grassmannian_examples():
    assert set(grassmannian_basis(1, 2)) == {P(), P(1)}
    assert grassmannian_poincare(1, 2) == 1 + q ** 2
    assert grassmannian_poincare(0, 4) == 1
    with pytest.raises(ValueError):
        grassmannian_basis(3, 2)


@pytest.mark.parametrize("m, N", [(m, N) for N in range(1, 6) for m in range(N + 1)])
def test_grassmannian_trace_pairs_complements(m, N):
    for lam in grassmannian_basis(m, N):
        dual = box_complement(lam, m, N - m)
        assert grassmannian_trace(lam, dual, m, N) == 1
        others = [mu for mu in grassmannian_basis(m, N) if mu != dual]
        assert all(grassmannian_trace(lam, mu, m, N) == 0 for mu in others)


@pytest.mark.parametrize("m", range(1, 4))
@pytest.mark.parametrize("l", range(1, 6))
def test_power_derivative(m, l):
    for j in range(1, m + 1):
        assert power_derivative_check(m, l, j)
