"""Phase-one simplex over the rationals.

Only feasibility is needed here: find ``x >= 0`` with ``A x = b``.  Pivoting
follows Bland's rule (lowest-index entering and leaving variables), which
cannot cycle, so the loop always terminates.

The tableau is kept fraction-free: each row is an integer vector scaled by
an arbitrary positive factor, with the coefficient of its basic variable
positive.  Row operations cross-multiply and then divide out the gcd, which
is much cheaper in Python than normalising a Fraction at every entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _integer_row(values: Sequence[Fraction]) -> list:
    values = [Fraction(v) for v in values]
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return [v.numerator * (scale // v.denominator) for v in values]


def _reduce(row: list) -> None:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        row[:] = [v // g for v in row]


def feasible_point(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list | None:
    """Return a nonnegative solution of ``A x = b``, or ``None`` if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n

    # columns: n structural, m artificial, then rhs
    rows = []
    for i in range(m):
        row = _integer_row(list(A[i]) + [b[i]])
        if row[-1] < 0:
            row = [-v for v in row]
        rows.append(row[:n] + [1 if k == i else 0 for k in range(m)] + row[n:])
    basis = [n + i for i in range(m)]

    # reduced costs of "minimise the sum of artificials"
    cost = [0] * (n + m + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]

    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        for i, row in enumerate(rows):
            a = row[entering]
            if a > 0:
                if leaving is None:
                    leaving = i
                    continue
                best = rows[leaving]
                lhs, rhs = row[-1] * best[entering], best[-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leaving]):
                    leaving = i
        if leaving is None:
            # a sum of nonnegative artificials cannot be unbounded below
            raise AssertionError("phase-one objective unbounded")
        _pivot(rows, cost, leaving, entering)
        basis[leaving] = entering

    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = Fraction(rows[i][-1], rows[i][var])
    return x


def _pivot(rows, cost, r, c):
    pivot_row = rows[r]
    p = pivot_row[c]
    nonzero = [j for j, v in enumerate(pivot_row) if v]
    for row in rows + [cost]:
        if row is pivot_row:
            continue
        f = row[c]
        if f:
            row[:] = [v * p for v in row]
            for j in nonzero:
                row[j] -= f * pivot_row[j]
            _reduce(row)
