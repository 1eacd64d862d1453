import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from convexnpa import Lrs, Wfa, dpa_as_wfa, evaluate_wfa, lrs_combine, lrs_eval, wfa_to_lrs, zero_set_prefix
from convexnpa.lrs import characteristic_polynomial, parse_lrs
from convexnpa.textformat import ParseError

from helpers import random_dpa, random_unary_wfa, seeds

FIB = Lrs([0, 1], [1, 1])


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_fibonacci_tenth():
    assert lrs_eval(FIB, 10) == 55


def test_constant_sequence():
    c = Lrs([Fraction(2, 3)], [1])
    assert all(lrs_eval(c, n) == Fraction(2, 3) for n in range(10))


def test_order_mismatch():
    with pytest.raises(ValueError):
        Lrs([1, 2], [1])


def test_parse_and_print():
    l = parse_lrs("lrs k=2 init=0,1 coeffs=1,1")
    assert l == FIB
    assert str(l) == "lrs k=2 init=0,1 coeffs=1,1"
    with pytest.raises(ParseError):
        parse_lrs("lrs k=3 init=0,1 coeffs=1,1")


def _det(m):
    # Laplace expansion, fine for n <= 4
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m))
    )


def _poly_at(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


@settings(max_examples=40, deadline=None)
@given(seeds())
def test_characteristic_polynomial_matches_determinant(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
    poly = characteristic_polynomial(m)
    assert poly[-1] == 1
    for x in range(-2, 3):
        shifted = [[(x if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        assert _poly_at(poly, Fraction(x)) == _det(shifted)


def test_combine_identity_and_cancellation():
    same = lrs_combine(1, FIB, 0, Lrs([1], [3]))
    assert [lrs_eval(same, n) for n in range(21)] == [fib(n) for n in range(21)]
    zero = lrs_combine(1, FIB, -1, FIB)
    assert all(lrs_eval(zero, n) == 0 for n in range(21))
    assert zero.order <= 4


def _random_lrs(rng):
    k = rng.randint(1, 3)
    return Lrs(
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)],
        [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(k)],
    )


@settings(max_examples=60, deadline=None)
@given(seeds())
def test_combine_is_pointwise_linear(seed):
    rng = random.Random(seed)
    l1, l2 = _random_lrs(rng), _random_lrs(rng)
    alpha, beta = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 3)
    c = lrs_combine(alpha, l1, beta, l2)
    assert c.order <= l1.order + l2.order
    assert c.terms(26) == [alpha * x + beta * y for x, y in zip(l1.terms(26), l2.terms(26))]


def test_wfa_to_lrs_scalar():
    p, q = Fraction(2, 3), Fraction(5, 7)
    w = Wfa(("x",), ("a",), (1,), (q,), {"a": [[p]]})
    l = wfa_to_lrs(w)
    assert l == Lrs([q], [p])
    assert all(lrs_eval(l, n) == q * p**n for n in range(10))


def test_wfa_to_lrs_fibonacci():
    w = Wfa(("x", "y"), ("a",), (1, 0), (0, 1), {"a": [[1, 1], [1, 0]]})
    l = wfa_to_lrs(w)
    assert l.coeffs == (1, 1)
    # (1 0) M^n (0 1)^T is the off-diagonal entry of M^n, i.e. Fib(n)
    assert [lrs_eval(l, n) for n in range(11)] == [fib(n) for n in range(11)]
    assert [evaluate_wfa(w, ["a"] * n) for n in range(11)] == [fib(n) for n in range(11)]


def test_wfa_to_lrs_identity_is_constant():
    w = Wfa(("x", "y"), ("a",), (2, 3), (Fraction(1, 2), 4), {"a": [[1, 0], [0, 1]]})
    l = wfa_to_lrs(w)
    assert all(lrs_eval(l, n) == 13 for n in range(10))


def test_wfa_to_lrs_needs_unary():
    w = Wfa(("x",), ("a", "b"), (1,), (1,), {"a": [[1]], "b": [[1]]})
    with pytest.raises(ValueError):
        wfa_to_lrs(w)


@settings(max_examples=60, deadline=None)
@given(seeds())
def test_wfa_to_lrs_soundness(seed):
    w = random_unary_wfa(random.Random(seed))
    l = wfa_to_lrs(w)
    assert l.order == len(w.states)
    assert l.terms(26) == [evaluate_wfa(w, ["a"] * n) for n in range(26)]


@settings(max_examples=30, deadline=None)
@given(seeds())
def test_stochastic_sequences_stay_in_unit_interval(seed):
    w = dpa_as_wfa(random_dpa(random.Random(seed), alphabet=("a",)))
    assert all(0 <= u <= 1 for u in wfa_to_lrs(w).terms(20))


def test_zero_sets():
    assert zero_set_prefix(Lrs([0], [5]), 5) == [0, 1, 2, 3, 4, 5]
    assert zero_set_prefix(FIB, 10) == [0]
    # 0, 1, 0, -1, 0, ... : zeros on the even indices
    assert zero_set_prefix(Lrs([0, 1], [-1, 0]), 8) == [0, 2, 4, 6, 8]
