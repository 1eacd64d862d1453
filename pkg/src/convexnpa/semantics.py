"""Language semantics of NPAs under the min and max algebras.

Reading a word determinizes the automaton on the fly: the current
configuration is a convex set of distributions over states.  From a
generator ``g`` and a symbol, every way of picking one generator ``h(s)`` of
``transitions[(s, sym)]`` for each ``s`` in the support of ``g`` yields the
successor generator ``sum_s g(s) * h(s)``.  The output of a configuration is
the minimum (or maximum) expected output over the set; expectation is
affine, so it suffices to look at generators.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .automata import ZERO, Distribution, GeneratorSet, Npa, Wfa
from .convex import combine, dedupe, prune

Configuration = GeneratorSet

DEFAULT_CAP = 10**6


class Algebra(enum.Enum):
    MIN = "min"
    MAX = "max"

    def pick(self, values: Iterable[Fraction]) -> Fraction:
        return min(values) if self is Algebra.MIN else max(values)


class UnknownSymbolError(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


def _check_symbol(alphabet, sym) -> None:
    if sym not in alphabet:
        raise UnknownSymbolError("symbol %r not in alphabet %s" % (sym, " ".join(alphabet)))


def as_word(word) -> tuple:
    """Accept a symbol sequence or a whitespace-separated string of symbols."""
    if isinstance(word, str):
        return tuple(word.split())
    return tuple(word)


def initial_config(a: Npa) -> Configuration:
    return GeneratorSet([Distribution.point(a.initial)])


def _successors(a: Npa, g: Distribution, sym) -> Iterable[Distribution]:
    support = g.support
    weights = [g[s] for s in support]
    choices = [a.transitions[(s, sym)].generators for s in support]
    for pick in itertools.product(*choices):
        yield combine(weights, pick)


def _branching(a: Npa, g: Distribution, sym) -> int:
    n = 1
    for s in g.support:
        n *= len(a.transitions[(s, sym)])
    return n


def step(a: Npa, cfg: Configuration, sym) -> Configuration:
    """Successor configuration after reading ``sym``, pruned to irredundant generators."""
    _check_symbol(a.alphabet, sym)
    gens = dedupe(d for g in cfg for d in _successors(a, g, sym))
    return prune(GeneratorSet(gens))


def output(a: Npa, cfg: Configuration, alg: Algebra) -> Fraction:
    return alg.pick(g.expectation(a.output) for g in cfg)


def run(a: Npa, word) -> Configuration:
    cfg = initial_config(a)
    for sym in as_word(word):
        cfg = step(a, cfg, sym)
    return cfg


def evaluate(a: Npa, word, alg: Algebra) -> Fraction:
    word = as_word(word)
    for sym in word:
        _check_symbol(a.alphabet, sym)
    return output(a, run(a, word), alg)


def evaluate_wfa(w: Wfa, word) -> Fraction:
    """``initial * M[a1] * ... * M[ak] * final`` in exact arithmetic."""
    vec = list(w.initial)
    n = len(vec)
    for sym in as_word(word):
        _check_symbol(w.alphabet, sym)
        m = w.matrices[sym]
        vec = [sum((vec[i] * m[i][j] for i in range(n) if vec[i]), ZERO) for j in range(n)]
    return sum((x * y for x, y in zip(vec, w.final)), ZERO)


def oracle_configuration(a: Npa, word, cap: int = DEFAULT_CAP) -> list:
    """All generators reached along ``word`` by exhaustive choice, never pruned or deduplicated."""
    word = as_word(word)
    for sym in word:
        _check_symbol(a.alphabet, sym)
    leaves = [Distribution.point(a.initial)]
    for sym in word:
        total = sum(_branching(a, g, sym) for g in leaves)
        if total > cap:
            raise EnumerationCapExceeded(
                "%d leaves after %r exceeds the cap of %d" % (total, sym, cap)
            )
        leaves = [d for g in leaves for d in _successors(a, g, sym)]
    return leaves


def oracle_evaluate(a: Npa, word, alg: Algebra, cap: int = DEFAULT_CAP) -> Fraction:
    return alg.pick(g.expectation(a.output) for g in oracle_configuration(a, word, cap))


def words_up_to(alphabet: Sequence, max_len: int) -> Iterable[tuple]:
    """All words of length <= ``max_len``, shortest first, then in alphabet order."""
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def oracle_check(a: Npa, max_len: int, evaluator=evaluate, cap: int = DEFAULT_CAP):
    """Compare ``evaluator`` against the oracle on every word up to ``max_len``.

    Returns ``None`` when all agree, else the first ``(word, algebra, got, expected)``.
    """
    for word in words_up_to(a.alphabet, max_len):
        for alg in (Algebra.MIN, Algebra.MAX):
            expected = oracle_evaluate(a, word, alg, cap)
            got = evaluator(a, word, alg)
            if got != expected:
                return word, alg, got, expected
    return None
