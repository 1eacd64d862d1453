import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from convexnpa import (
    Distribution,
    Dpa,
    constant_dpa,
    dpa_as_npa,
    dualize,
    evaluate,
    example_npa,
    longest_run_reference,
    real_part_lrs,
    threshold_reduction,
    validate_npa,
)
from convexnpa.lrs import lrs_eval
from convexnpa.semantics import Algebra, oracle_evaluate

from helpers import random_dpa, seeds, words

MIN, MAX = Algebra.MIN, Algebra.MAX


def test_example_outputs_by_name():
    a = example_npa()
    assert dict(zip(a.states, a.output)) == {"s0": 1, "s1": 0, "s2": 1, "s3": 1}


def test_longest_run_reference():
    assert longest_run_reference([]) == 1
    assert longest_run_reference("a a") == Fraction(1, 4)
    assert longest_run_reference(list("abaaab")) == Fraction(1, 8)
    with pytest.raises(ValueError):
        longest_run_reference(["c"])


def test_dualize_is_an_involution_and_keeps_structure():
    a = example_npa()
    b = dualize(a)
    validate_npa(b)
    assert dualize(b) == a
    assert dict(b.transitions) == dict(a.transitions)
    assert b.output == (0, 1, 0, 0)


def test_dual_of_example_max_on_aa():
    assert evaluate(dualize(example_npa()), "a a", MAX) == Fraction(3, 4)


def test_dualize_constant_output():
    k = Fraction(2, 9)
    a = dpa_as_npa(constant_dpa(("a",), k))
    assert dualize(a).output == (1 - k,)


def _spike_dpa(value):
    """Output 0 everywhere except after exactly the word 'a b', where it is ``value``."""
    p = Distribution.point
    # q0 -a-> q1 -b-> q2 (output value), anything else -> dead q3
    trans = {
        (0, "a"): p(1), (0, "b"): p(3),
        (1, "a"): p(3), (1, "b"): p(2),
        (2, "a"): p(3), (2, "b"): p(3),
        (3, "a"): p(3), (3, "b"): p(3),
    }
    return Dpa(("q0", "q1", "q2", "q3"), ("a", "b"), 0, (0, 0, value, 0), trans)


def test_threshold_structure():
    y, z = threshold_reduction(_spike_dpa(Fraction(3, 4)), Fraction(1, 2))
    assert len(y.states) == 6 and len(z.states) == 1
    assert y.output[y.initial] == Fraction(1, 2)
    assert len(y.transitions[(y.initial, "a")]) == 2


def test_threshold_fresh_names_do_not_clash():
    d = constant_dpa(("a",), Fraction(1, 3), name="start")
    y, _ = threshold_reduction(d, Fraction(1, 3))
    assert len(set(y.states)) == len(y.states)


def test_threshold_y_on_prefixed_words_matches_oracle():
    x = _spike_dpa(Fraction(3, 4))
    k = Fraction(1, 2)
    y, z = threshold_reduction(x, k)
    xa = dpa_as_npa(x)
    for v in words(x.alphabet, 3):
        for first in x.alphabet:
            lx = evaluate(xa, v, MIN)
            word = (first,) + v
            assert oracle_evaluate(y, word, MIN) == min(k, lx)
            assert oracle_evaluate(y, word, MAX) == max(k, lx)


@settings(max_examples=30, deadline=None)
@given(seeds())
def test_threshold_identities_on_random_dpas(seed):
    rng = random.Random(seed)
    x = random_dpa(rng, max_states=3)
    k = Fraction(rng.randint(0, 4), 4)
    y, z = threshold_reduction(x, k)
    xa = dpa_as_npa(x)
    for alg in (MIN, MAX):
        assert evaluate(y, (), alg) == k
    for v in words(x.alphabet, 4):
        lx = evaluate(xa, v, MIN)
        assert evaluate(y, ("a",) + v, MIN) == min(k, lx)
        assert evaluate(y, ("b",) + v, MAX) == max(k, lx)
        for alg in (MIN, MAX):
            assert evaluate(z, v, alg) == k


def _re_power(re, im, n):
    """Real part of (re + im i)**n by repeated complex multiplication."""
    x, y = Fraction(1), Fraction(0)
    for _ in range(n):
        x, y = x * re - y * im, x * im + y * re
    return x


def test_real_part_lrs_values():
    a, b = Fraction(3, 5), Fraction(4, 5)
    l = real_part_lrs(a, b)
    assert l.initial == (1, a)
    assert l.coeffs == (-1, Fraction(6, 5))
    assert lrs_eval(l, 2) == Fraction(-7, 25)
    assert lrs_eval(l, 3) == Fraction(-117, 125)
    for n in range(40):
        value = lrs_eval(l, n)
        assert value == _re_power(a, b, n)
        assert abs(value) <= 1


def test_real_part_lrs_other_pythagorean_point():
    a, b = Fraction(5, 13), Fraction(-12, 13)
    l = real_part_lrs(a, b)
    assert [lrs_eval(l, n) for n in range(15)] == [_re_power(a, b, n) for n in range(15)]


@pytest.mark.parametrize("a, b", [(Fraction(1, 2), Fraction(1, 2)), (0, 1), (1, 0)])
def test_real_part_lrs_rejects(a, b):
    with pytest.raises(ValueError):
        real_part_lrs(a, b)
