"""Ready-made automata: the four-state running example, output
complementation, the threshold-to-equivalence reduction, and reference
languages to check them against."""

from __future__ import annotations

from fractions import Fraction

from .automata import (
    ONE,
    Distribution,
    Dpa,
    GeneratorSet,
    Npa,
    as_rat,
    validate_dpa,
    validate_npa,
)
from .lrs import Lrs

HALF = Fraction(1, 2)


def example_npa() -> Npa:
    """Four states with outputs 1, 0, 1, 1 over {a, b}.

    From s0, ``a`` may stay put or move to ½s1 + ½s2; s2 on ``a`` moves to
    ½s1 + ½s2 and on ``b`` to s3; s1 and s3 loop.  Under min semantics a
    word weighs ``2**-n`` with ``n`` its longest run of a's; under max, 1.
    """
    split = Distribution({1: HALF, 2: HALF})

    def one(*ds):
        return GeneratorSet(ds)

    p = Distribution.point
    transitions = {
        (0, "a"): one(p(0), split),
        (0, "b"): one(p(0)),
        (1, "a"): one(p(1)),
        (1, "b"): one(p(1)),
        (2, "a"): one(split),
        (2, "b"): one(p(3)),
        (3, "a"): one(p(3)),
        (3, "b"): one(p(3)),
    }
    return Npa(
        states=("s0", "s1", "s2", "s3"),
        alphabet=("a", "b"),
        initial=0,
        output=(1, 0, 1, 1),
        transitions=transitions,
    )


def longest_run_reference(word) -> Fraction:
    """``2**-n`` where ``n`` is the longest run of ``a`` in a word over {a, b}."""
    if isinstance(word, str):
        word = word.split()
    best = run = 0
    for sym in word:
        if sym == "a":
            run += 1
            best = max(best, run)
        elif sym == "b":
            run = 0
        else:
            raise ValueError("symbol %r not in {a, b}" % (sym,))
    return Fraction(1, 2**best)


def dualize(a: Npa) -> Npa:
    """Same automaton with every output ``w`` replaced by ``1 - w``.

    Max semantics of the result is one minus min semantics of ``a``.
    """
    return Npa(
        states=a.states,
        alphabet=a.alphabet,
        initial=a.initial,
        output=[1 - w for w in a.output],
        transitions=a.transitions,
    )


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def threshold_reduction(x: Dpa, kappa) -> tuple:
    """NPAs ``(Y, Z)`` equivalent iff ``x`` stays on one side of ``kappa``.

    ``Z`` is a single ``kappa``-state looping on every symbol.  ``Y`` starts
    in a fresh ``kappa``-state that, on any symbol, chooses between a
    ``kappa``-sink and the initial state of an embedded copy of ``x``.  Hence
    ``Y(a v) = min/max(kappa, x(v))`` while ``Z`` is constantly ``kappa``.
    """
    validate_dpa(x)
    kappa = as_rat(kappa)
    if not 0 <= kappa <= 1:
        raise ValueError("threshold must lie in [0, 1], got %s" % kappa)

    taken = set(x.states)
    start = _fresh("start", taken)
    sink = _fresh("sink", taken)
    n = len(x.states)
    # x keeps indices 0..n-1; start and sink are appended
    s_start, s_sink = n, n + 1
    choice = GeneratorSet([Distribution.point(s_sink), Distribution.point(x.initial)])
    transitions = {key: GeneratorSet([d]) for key, d in x.transitions.items()}
    for sym in x.alphabet:
        transitions[(s_start, sym)] = choice
        transitions[(s_sink, sym)] = GeneratorSet([Distribution.point(s_sink)])
    y = Npa(
        states=x.states + (start, sink),
        alphabet=x.alphabet,
        initial=s_start,
        output=x.output + (kappa, kappa),
        transitions=transitions,
    )
    z = Npa(
        states=("z",),
        alphabet=x.alphabet,
        initial=0,
        output=(kappa,),
        transitions={(0, sym): GeneratorSet([Distribution.point(0)]) for sym in x.alphabet},
    )
    validate_npa(y)
    validate_npa(z)
    return y, z


def constant_dpa(alphabet, value, name: str = "q") -> Dpa:
    """One state with output ``value``, looping on every symbol."""
    return Dpa(
        states=(name,),
        alphabet=tuple(alphabet),
        initial=0,
        output=(as_rat(value),),
        transitions={(0, sym): Distribution.point(0) for sym in alphabet},
    )


def real_part_lrs(re, im) -> Lrs:
    """``x_n = Re(z**n)`` for ``z = re + im*i`` on the unit circle.

    Satisfies ``x_{n+2} = 2 re x_{n+1} - x_n`` with ``x_0 = 1``, ``x_1 = re``.
    """
    re, im = as_rat(re), as_rat(im)
    if re == 0 or im == 0:
        raise ValueError("real and imaginary parts must be nonzero")
    if re * re + im * im != ONE:
        raise ValueError("%s + %si is not on the unit circle" % (re, im))
    return Lrs(initial=(ONE, re), coeffs=(-(re * re + im * im), 2 * re))
