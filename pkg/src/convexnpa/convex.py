"""Finitely generated convex sets of distributions, handled exactly.

A :class:`~convexnpa.automata.GeneratorSet` stands for the convex hull of
its generators.  Membership in a hull is an LP feasibility question solved
by :mod:`convexnpa.simplex`; no vertex or facet enumeration is done.
"""

from __future__ import annotations

from typing import Sequence

from .automata import ONE, ZERO, Distribution, GeneratorSet, ValidationError, as_rat
from .simplex import feasible_point


def check_coefficients(coeffs: Sequence) -> tuple:
    coeffs = tuple(as_rat(c) for c in coeffs)
    if not coeffs:
        raise ValidationError("empty convex combination")
    if any(c < 0 for c in coeffs):
        raise ValidationError("negative coefficient in convex combination")
    if sum(coeffs, ZERO) != 1:
        raise ValidationError("convex coefficients sum to %s" % sum(coeffs, ZERO))
    return coeffs


def mix(coeffs: Sequence, points: Sequence[Distribution]) -> Distribution:
    """The convex combination ``sum(c_i * points[i])``."""
    coeffs = check_coefficients(coeffs)
    if len(coeffs) != len(points):
        raise ValueError("%d coefficients for %d points" % (len(coeffs), len(points)))
    acc: dict = {}
    for c, d in zip(coeffs, points):
        if c:
            for s, w in d.items():
                acc[s] = acc.get(s, ZERO) + c * w
    return Distribution(acc)


def combine(coeffs: Sequence, points: Sequence[Distribution]) -> Distribution:
    """:func:`mix` without argument checks, for callers whose inputs are already valid."""
    acc: dict = {}
    for c, d in zip(coeffs, points):
        for s, w in d.items():
            acc[s] = acc.get(s, ZERO) + c * w
    return Distribution(acc, check=False)


def hull_coefficients(d: Distribution, gs: Sequence[Distribution]) -> list | None:
    """Coefficients ``c`` with ``mix(c, gs) == d``, or ``None`` if ``d`` lies outside the hull."""
    if not gs:
        return None
    for i, g in enumerate(gs):
        if g == d:
            return [ONE if j == i else ZERO for j in range(len(gs))]
    # generators with mass outside supp(d) must get coefficient 0
    usable = [i for i, g in enumerate(gs) if all(s in d for s in g.support)]
    if not usable:
        return None
    covered = set()
    for i in usable:
        covered.update(gs[i].support)
    if not all(s in covered for s in d.support):
        return None
    order = sorted(d.support, key=lambda s: (isinstance(s, str), s))
    # necessary: each coordinate of d within the range spanned by the usable generators
    for s in order:
        vals = [gs[i].get(s) for i in usable]
        if not min(vals) <= d[s] <= max(vals):
            return None
    if len(usable) == 2:
        return _on_segment(d, gs, usable, order)
    # summing the rows forces sum(x) == 1, since every usable generator lives inside supp(d)
    A = [[gs[i].get(s) for i in usable] for s in order]
    b = [d[s] for s in order]
    x = feasible_point(A, b)
    if x is None:
        return None
    coeffs = [ZERO] * len(gs)
    for i, v in zip(usable, x):
        coeffs[i] = v
    return coeffs


def _on_segment(d, gs, usable, order):
    i, j = usable
    g, h = gs[i], gs[j]
    # d = (1 - t) g + t h with t in [0, 1]
    t = None
    for s in order:
        step_ = h.get(s) - g.get(s)
        if step_:
            t = (d[s] - g.get(s)) / step_
            break
    if t is None or not 0 <= t <= 1:
        return None
    if any(d[s] != g.get(s) + t * (h.get(s) - g.get(s)) for s in order):
        return None
    coeffs = [ZERO] * len(gs)
    coeffs[i], coeffs[j] = 1 - t, t
    return coeffs


def is_redundant(d: Distribution, gs: Sequence[Distribution]) -> bool:
    """True iff ``d`` lies in the convex hull of ``gs``."""
    return hull_coefficients(d, gs) is not None


def prune(g: GeneratorSet) -> GeneratorSet:
    """Drop generators lying in the hull of the others.

    Generators are scanned in order; one is dropped when it is redundant
    against the ones kept so far together with the ones not yet scanned.
    Survivors keep their relative order.
    """
    gens = list(g.generators)
    kept: list = []
    for i, d in enumerate(gens):
        others = kept + gens[i + 1:]
        if others and is_redundant(d, others):
            continue
        kept.append(d)
    return GeneratorSet(kept)


def hulls_equal(g1: GeneratorSet, g2: GeneratorSet) -> bool:
    a, b = list(g1.generators), list(g2.generators)
    return all(is_redundant(d, b) for d in a) and all(is_redundant(d, a) for d in b)


def dedupe(gens) -> list:
    seen = set()
    out = []
    for d in gens:
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out

