"""Exact-rational automaton types: NPAs, DPAs and weighted automata.

States are named by strings in files; inside an automaton they are the
integers ``0..len(states)-1`` and ``states[i]`` is the display name.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class ValidationError(ValueError):
    """An automaton or distribution violates one of its invariants."""


def as_rat(value: RatLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact weights: %r" % value)
    return Fraction(value)


class Distribution(Mapping):
    """Finite-support weight map over states.

    Zero weights are dropped, so two distributions compare equal iff they
    put the same mass on every state.  With ``check=False`` the weights are
    stored unvalidated; call :meth:`check` before relying on them.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, weights: Mapping[Hashable, RatLike] | Iterable = (), check: bool = True):
        if isinstance(weights, Mapping):
            weights = weights.items()
        merged: dict = {}
        for state, w in weights:
            merged[state] = merged.get(state, ZERO) + as_rat(w)
        self._items = dict(
            sorted(((s, w) for s, w in merged.items() if w != 0), key=lambda kv: _sort_key(kv[0]))
        )
        self._hash = None
        if check:
            self.check()

    @classmethod
    def point(cls, state: Hashable) -> "Distribution":
        return cls({state: ONE})

    def check(self) -> None:
        if not self._items:
            raise ValidationError("not a distribution: empty support")
        for state, w in self._items.items():
            if w < 0:
                raise ValidationError("not a distribution: negative weight %s on %r" % (w, state))
        total = sum(self._items.values(), ZERO)
        if total != 1:
            raise ValidationError("not a distribution: weights sum to %s" % total)

    @property
    def support(self) -> tuple:
        return tuple(self._items)

    def expectation(self, values: Mapping | tuple) -> Fraction:
        return sum((w * values[s] for s, w in self._items.items()), ZERO)

    def __getitem__(self, state: Hashable) -> Fraction:
        return self._items[state]

    def get(self, state, default=ZERO):
        return self._items.get(state, default)

    def __iter__(self) -> Iterator:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, Distribution):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._items.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = " ".join("%s=%s" % (s, w) for s, w in self._items.items())
        return "{%s}" % inner


def _sort_key(state):
    # ints before strings, each in natural order
    return (isinstance(state, str), state)


@dataclass(frozen=True)
class GeneratorSet:
    """A nonempty convex set of distributions, given by a finite list of generators."""

    generators: tuple

    def __init__(self, generators: Iterable[Distribution]):
        object.__setattr__(self, "generators", tuple(generators))

    def check(self) -> None:
        if not self.generators:
            raise ValidationError("empty convex set")
        for g in self.generators:
            g.check()

    def __iter__(self) -> Iterator[Distribution]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> Distribution:
        return self.generators[i]

    def __repr__(self) -> str:
        return "Conv" + repr(list(self.generators))


def _freeze(mapping: Mapping) -> Mapping:
    from types import MappingProxyType

    return MappingProxyType(dict(mapping))


@dataclass(frozen=True, eq=True)
class Npa:
    """Nondeterministic probabilistic automaton.

    ``transitions[(state, symbol)]`` is the convex set of successor
    distributions; ``output[state]`` is the state's weight in [0, 1].
    """

    states: tuple
    alphabet: tuple
    initial: int
    output: tuple
    transitions: Mapping

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "output", tuple(as_rat(x) for x in self.output))
        object.__setattr__(self, "transitions", _freeze(self.transitions))

    def __eq__(self, other):
        if not isinstance(other, Npa):
            return NotImplemented
        return (self.states, self.alphabet, self.initial, self.output) == (
            other.states, other.alphabet, other.initial, other.output
        ) and dict(self.transitions) == dict(other.transitions)

    __hash__ = None

    def index(self, name: str) -> int:
        return self.states.index(name)


@dataclass(frozen=True)
class Dpa:
    """Deterministic probabilistic automaton: one distribution per (state, symbol)."""

    states: tuple
    alphabet: tuple
    initial: int
    output: tuple
    transitions: Mapping

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "output", tuple(as_rat(x) for x in self.output))
        object.__setattr__(self, "transitions", _freeze(self.transitions))

    def __eq__(self, other):
        if not isinstance(other, Dpa):
            return NotImplemented
        return (self.states, self.alphabet, self.initial, self.output) == (
            other.states, other.alphabet, other.initial, other.output
        ) and dict(self.transitions) == dict(other.transitions)

    __hash__ = None


@dataclass(frozen=True)
class Wfa:
    """Weighted automaton with initial row vector, output column vector and one matrix per symbol."""

    states: tuple
    alphabet: tuple
    initial: tuple
    final: tuple
    matrices: Mapping

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "initial", tuple(as_rat(x) for x in self.initial))
        object.__setattr__(self, "final", tuple(as_rat(x) for x in self.final))
        object.__setattr__(
            self,
            "matrices",
            _freeze({a: tuple(tuple(as_rat(x) for x in row) for row in m) for a, m in self.matrices.items()}),
        )

    def __eq__(self, other):
        if not isinstance(other, Wfa):
            return NotImplemented
        return (self.states, self.alphabet, self.initial, self.final) == (
            other.states, other.alphabet, other.initial, other.final
        ) and dict(self.matrices) == dict(other.matrices)

    __hash__ = None


def _validate_header(a) -> None:
    n = len(a.states)
    if n == 0:
        raise ValidationError("automaton has no states")
    if len(set(a.states)) != n:
        raise ValidationError("duplicate state names")
    if not a.alphabet:
        raise ValidationError("empty alphabet")
    if len(set(a.alphabet)) != len(a.alphabet):
        raise ValidationError("duplicate symbols in alphabet")
    if not (isinstance(a.initial, int) and 0 <= a.initial < n):
        raise ValidationError("initial state out of range: %r" % (a.initial,))
    if len(a.output) != n:
        raise ValidationError("output not defined on every state")
    for i, w in enumerate(a.output):
        if not 0 <= w <= 1:
            raise ValidationError("output of state %s out of [0,1]: %s" % (a.states[i], w))


def _check_distribution(d: Distribution, n: int, where: str) -> None:
    if not isinstance(d, Distribution):
        raise ValidationError("%s: not a distribution: %r" % (where, d))
    try:
        d.check()
    except ValidationError as exc:
        raise ValidationError("%s: %s" % (where, exc)) from None
    for s in d:
        if not (isinstance(s, int) and 0 <= s < n):
            raise ValidationError("%s: unknown state %r in support" % (where, s))


def validate_npa(a: Npa) -> None:
    """Raise :class:`ValidationError` describing the first broken invariant of ``a``."""
    _validate_header(a)
    n = len(a.states)
    for s in range(n):
        for sym in a.alphabet:
            where = "transition (%s, %s)" % (a.states[s], sym)
            gs = a.transitions.get((s, sym))
            if gs is None:
                raise ValidationError("missing %s" % where)
            if len(gs) == 0:
                raise ValidationError("%s: empty convex set" % where)
            for g in gs:
                _check_distribution(g, n, where)
    extra = set(a.transitions) - {(s, sym) for s in range(n) for sym in a.alphabet}
    if extra:
        raise ValidationError("transitions on unknown state/symbol: %r" % sorted(extra, key=repr)[0])


def validate_dpa(d: Dpa) -> None:
    _validate_header(d)
    n = len(d.states)
    for s in range(n):
        for sym in d.alphabet:
            where = "transition (%s, %s)" % (d.states[s], sym)
            dist = d.transitions.get((s, sym))
            if dist is None:
                raise ValidationError("missing %s" % where)
            _check_distribution(dist, n, where)


def validate_wfa(w: Wfa) -> None:
    n = len(w.states)
    if n == 0:
        raise ValidationError("automaton has no states")
    if not w.alphabet:
        raise ValidationError("empty alphabet")
    if len(w.initial) != n or len(w.final) != n:
        raise ValidationError("vector dimension does not match %d states" % n)
    for sym in w.alphabet:
        m = w.matrices.get(sym)
        if m is None:
            raise ValidationError("missing matrix for symbol %s" % sym)
        if len(m) != n or any(len(row) != n for row in m):
            raise ValidationError("matrix for %s is not %dx%d" % (sym, n, n))


def dpa_as_npa(d: Dpa) -> Npa:
    """View a DPA as an NPA whose every choice set is a single distribution."""
    return Npa(
        states=d.states,
        alphabet=d.alphabet,
        initial=d.initial,
        output=d.output,
        transitions={key: GeneratorSet([dist]) for key, dist in d.transitions.items()},
    )


def dpa_as_wfa(d: Dpa) -> Wfa:
    n = len(d.states)
    matrices = {
        sym: [[d.transitions[(s, sym)].get(t) for t in range(n)] for s in range(n)]
        for sym in d.alphabet
    }
    return Wfa(
        states=d.states,
        alphabet=d.alphabet,
        initial=[ONE if s == d.initial else ZERO for s in range(n)],
        final=d.output,
        matrices=matrices,
    )
