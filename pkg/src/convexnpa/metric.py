"""Approximating the discounted distance between two weighted languages.

``d_c(l1, l2) = sum over words u of |l1(u) - l2(u)| * (c / |A|) ** len(u)``.
Cutting the sum at words shorter than ``n`` leaves a tail of at most
``c**n / (1 - c)``, so choosing the least ``n`` with ``c**n <= (1 - c) * kappa``
gives an answer within ``kappa``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator, NamedTuple

from .automata import ONE, ZERO, Dpa, Npa, as_rat, dpa_as_npa
from .semantics import Algebra, initial_config, output, step


@dataclass(frozen=True)
class LanguageHandle:
    """A weighted language read incrementally, one symbol at a time.

    ``start`` is the state for the empty word, ``advance(state, sym)``
    extends it by one symbol and ``weight(state)`` gives the language value.
    Sharing states along prefixes lets a traversal of all words reuse work.
    """

    alphabet: tuple
    start: Any
    advance: Callable[[Any, Any], Any]
    weight: Callable[[Any], Fraction]

    @classmethod
    def from_npa(cls, a: Npa | Dpa, alg: Algebra) -> "LanguageHandle":
        if isinstance(a, Dpa):
            a = dpa_as_npa(a)
        return cls(
            alphabet=a.alphabet,
            start=initial_config(a),
            advance=lambda cfg, sym: step(a, cfg, sym),
            weight=lambda cfg: output(a, cfg, alg),
        )

    @classmethod
    def from_function(cls, alphabet, fn: Callable[[tuple], Fraction]) -> "LanguageHandle":
        return cls(
            alphabet=tuple(alphabet),
            start=(),
            advance=lambda word, sym: word + (sym,),
            weight=lambda word: as_rat(fn(word)),
        )

    @classmethod
    def constant(cls, alphabet, value) -> "LanguageHandle":
        value = as_rat(value)
        return cls(alphabet=tuple(alphabet), start=None, advance=lambda s, sym: None, weight=lambda s: value)


@dataclass(frozen=True)
class MetricQuery:
    c: Fraction
    kappa: Fraction

    def __post_init__(self):
        c, kappa = as_rat(self.c), as_rat(self.kappa)
        if not 0 <= c < 1:
            raise ValueError("discount c must lie in [0, 1), got %s" % c)
        if kappa <= 0:
            raise ValueError("precision kappa must be positive, got %s" % kappa)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "kappa", kappa)

    @property
    def tail_bound(self) -> Fraction:
        """Upper bound on the part of the sum beyond the horizon."""
        return self.c ** word_horizon(self) / (1 - self.c)


class WordDifference(NamedTuple):
    word: tuple
    weight1: Fraction
    weight2: Fraction
    diff: Fraction
    contribution: Fraction


def word_horizon(q: MetricQuery) -> int:
    """Least ``n >= 0`` with ``c**n <= (1 - c) * kappa``.

    For ``c == 0`` this is 1: only the empty word carries weight.
    """
    if q.c == 0:
        return 1
    target = (1 - q.c) * q.kappa
    n, power = 0, ONE
    while power > target:
        power *= q.c
        n += 1
    return n


def _check_alphabets(l1: LanguageHandle, l2: LanguageHandle) -> None:
    if tuple(l1.alphabet) != tuple(l2.alphabet):
        raise ValueError(
            "alphabet mismatch: %s vs %s" % (" ".join(l1.alphabet), " ".join(l2.alphabet))
        )


def word_differences(l1: LanguageHandle, l2: LanguageHandle, q: MetricQuery) -> Iterator[WordDifference]:
    """Every word below the horizon with both weights, shortest first then in alphabet order."""
    _check_alphabets(l1, l2)
    horizon = word_horizon(q)
    alphabet = tuple(l1.alphabet)
    factor = q.c / len(alphabet)
    layer = [((), l1.start, l2.start)]
    scale = ONE
    for length in range(horizon):
        for word, s1, s2 in layer:
            w1, w2 = l1.weight(s1), l2.weight(s2)
            diff = abs(w1 - w2)
            yield WordDifference(word, w1, w2, diff, diff * scale)
        if length + 1 == horizon:
            break
        layer = [
            (word + (sym,), l1.advance(s1, sym), l2.advance(s2, sym))
            for word, s1, s2 in layer
            for sym in alphabet
        ]
        scale *= factor


def approx_metric(l1: LanguageHandle, l2: LanguageHandle, q: MetricQuery) -> Fraction:
    """A value within ``q.kappa`` of (and never above) the discounted distance."""
    return sum((row.contribution for row in word_differences(l1, l2, q)), ZERO)


def difference_report(l1: LanguageHandle, l2: LanguageHandle, q: MetricQuery) -> list:
    """``(word, contribution)`` pairs below the horizon, largest contribution first."""
    rows = sorted(word_differences(l1, l2, q), key=lambda r: -r.contribution)
    return [(r.word, r.contribution) for r in rows]
