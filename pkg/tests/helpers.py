"""Random automata and independent reference evaluators shared by the tests."""

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from convexnpa import Distribution, Dpa, GeneratorSet, Npa, Wfa
from convexnpa.semantics import Algebra


def random_distribution(rng: random.Random, n: int, max_support: int | None = None, denom: int = 6):
    k = rng.randint(1, max_support or n)
    support = rng.sample(range(n), k)
    cuts = sorted(rng.randint(0, denom) for _ in range(k - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [denom])]
    return Distribution({s: Fraction(p, denom) for s, p in zip(support, parts)})


def random_output(rng, denom=4):
    return Fraction(rng.randint(0, denom), denom)


def random_npa(rng: random.Random, max_states=3, alphabet=("a", "b"), max_gens=2) -> Npa:
    n = rng.randint(1, max_states)
    transitions = {
        (s, sym): GeneratorSet(random_distribution(rng, n) for _ in range(rng.randint(1, max_gens)))
        for s in range(n)
        for sym in alphabet
    }
    return Npa(
        states=tuple("s%d" % i for i in range(n)),
        alphabet=alphabet,
        initial=rng.randrange(n),
        output=[random_output(rng) for _ in range(n)],
        transitions=transitions,
    )


def random_dpa(rng: random.Random, max_states=4, alphabet=("a", "b")) -> Dpa:
    n = rng.randint(1, max_states)
    return Dpa(
        states=tuple("q%d" % i for i in range(n)),
        alphabet=alphabet,
        initial=rng.randrange(n),
        output=[random_output(rng) for _ in range(n)],
        transitions={(s, sym): random_distribution(rng, n) for s in range(n) for sym in alphabet},
    )


def random_unary_wfa(rng: random.Random, max_states=4) -> Wfa:
    n = rng.randint(1, max_states)

    def r():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    return Wfa(
        states=tuple("w%d" % i for i in range(n)),
        alphabet=("a",),
        initial=[r() for _ in range(n)],
        final=[r() for _ in range(n)],
        matrices={"a": [[r() for _ in range(n)] for _ in range(n)]},
    )


def seeds():
    return st.integers(min_value=0, max_value=2**32 - 1)


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def backward_value(a: Npa, word, alg: Algebra) -> Fraction:
    """Optimal expected output by backward induction over states.

    A history-dependent scheduler picks one generator per visited state; the
    value table is filled from the end of the word, as for a finite-horizon MDP.
    """
    pick = min if alg is Algebra.MIN else max
    value = list(a.output)
    for sym in reversed(tuple(word)):
        value = [
            pick(sum((w * value[t] for t, w in g.items()), Fraction(0)) for g in a.transitions[(s, sym)])
            for s in range(len(a.states))
        ]
    return value[a.initial]


def markov_chain_value(d: Dpa, word) -> Fraction:
    """Push the state distribution through the DPA, then take the expected output."""
    dist = {d.initial: Fraction(1)}
    for sym in word:
        nxt = {}
        for s, p in dist.items():
            for t, q in d.transitions[(s, sym)].items():
                nxt[t] = nxt.get(t, 0) + p * q
        dist = nxt
    return sum(p * d.output[s] for s, p in dist.items())
