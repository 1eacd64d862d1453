"""Linear recurrence sequences over the rationals.

An order-k LRS is fixed by ``u_0..u_{k-1}`` and coefficients ``b_0..b_{k-1}``
with ``u_{n+k} = b_{k-1} u_{n+k-1} + ... + b_0 u_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .automata import ONE, ZERO, Wfa, as_rat


@dataclass(frozen=True)
class Lrs:
    initial: tuple
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "initial", tuple(as_rat(x) for x in self.initial))
        object.__setattr__(self, "coeffs", tuple(as_rat(x) for x in self.coeffs))
        if not self.initial:
            raise ValueError("an LRS needs order >= 1")
        if len(self.initial) != len(self.coeffs):
            raise ValueError(
                "%d initial values but %d coefficients" % (len(self.initial), len(self.coeffs))
            )

    @property
    def order(self) -> int:
        return len(self.initial)

    def terms(self, count: int) -> list:
        """The first ``count`` terms."""
        vals = list(self.initial[:count])
        k = self.order
        while len(vals) < count:
            window = vals[-k:]
            vals.append(sum((b * u for b, u in zip(self.coeffs, window)), ZERO))
        return vals

    def __str__(self) -> str:
        return "lrs k=%d init=%s coeffs=%s" % (
            self.order,
            ",".join(map(str, self.initial)),
            ",".join(map(str, self.coeffs)),
        )


def parse_lrs(text: str) -> Lrs:
    """Parse ``lrs k=2 init=0,1 coeffs=1,1``."""
    from .textformat import ParseError, parse_rat

    parts = text.split()
    if not parts or parts[0] != "lrs":
        raise ParseError("LRS text must start with 'lrs'")
    fields = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep or key not in ("k", "init", "coeffs"):
            raise ParseError("bad LRS field %r" % part)
        fields[key] = value
    if "init" not in fields or "coeffs" not in fields:
        raise ParseError("LRS needs init= and coeffs=")
    init = [parse_rat(v) for v in fields["init"].split(",")]
    coeffs = [parse_rat(v) for v in fields["coeffs"].split(",")]
    if "k" in fields and fields["k"] != str(len(init)):
        raise ParseError("k=%s disagrees with %d initial values" % (fields["k"], len(init)))
    try:
        return Lrs(init, coeffs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def lrs_eval(l: Lrs, n: int) -> Fraction:
    if n < 0:
        raise ValueError("negative index")
    return l.terms(n + 1)[n]


def zero_set_prefix(l: Lrs, bound: int) -> list:
    """Indices ``n <= bound`` with ``u_n == 0``."""
    return [i for i, u in enumerate(l.terms(bound + 1)) if u == 0]


def characteristic_polynomial(m: Sequence[Sequence[Fraction]]) -> list:
    """Coefficients ``[c_0, ..., c_{n-1}, 1]`` of ``det(xI - m)`` (Faddeev-LeVerrier)."""
    n = len(m)
    c = [ZERO] * n + [ONE]
    acc = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        # acc <- m @ acc + c_{n-k+1} I
        prod = _matmul(m, acc)
        for i in range(n):
            prod[i][i] += c[n - k + 1]
        acc = prod
        am = _matmul(m, acc)
        c[n - k] = -sum((am[i][i] for i in range(n)), ZERO) / k
    return c


def _matmul(x, y):
    n, p = len(x), len(y[0])
    return [
        [sum((x[i][t] * y[t][j] for t in range(len(y)) if x[i][t]), ZERO) for j in range(p)]
        for i in range(n)
    ]


def _from_linear_rep(start: Sequence, m: Sequence[Sequence], readout: Sequence) -> Lrs:
    """LRS for ``u_n = start * m^n * readout`` via Cayley-Hamilton."""
    n = len(m)
    poly = characteristic_polynomial(m)
    vals = []
    vec = list(start)
    for _ in range(n):
        vals.append(sum((x * y for x, y in zip(vec, readout)), ZERO))
        vec = [sum((vec[i] * m[i][j] for i in range(n) if vec[i]), ZERO) for j in range(n)]
    return Lrs(vals, [-ci for ci in poly[:n]])


def companion(l: Lrs) -> list:
    """Matrix ``C`` with ``(u_{n+1}, ..., u_{n+k}) = (u_n, ..., u_{n+k-1}) C``."""
    k = l.order
    c = [[ZERO] * k for _ in range(k)]
    for i in range(1, k):
        c[i][i - 1] = ONE
    for i in range(k):
        c[i][k - 1] = l.coeffs[i]
    return c


def lrs_combine(alpha, l1: Lrs, beta, l2: Lrs) -> Lrs:
    """An LRS of order ``l1.order + l2.order`` for ``alpha * l1 + beta * l2``."""
    alpha, beta = as_rat(alpha), as_rat(beta)
    k1, k2 = l1.order, l2.order
    k = k1 + k2
    m = [[ZERO] * k for _ in range(k)]
    for i, row in enumerate(companion(l1)):
        m[i][:k1] = row
    for i, row in enumerate(companion(l2)):
        m[k1 + i][k1:] = row
    start = list(l1.initial) + list(l2.initial)
    readout = [ZERO] * k
    readout[0] = alpha
    readout[k1] = beta
    return _from_linear_rep(start, m, readout)


def wfa_to_lrs(w: Wfa) -> Lrs:
    """The weight sequence ``L(a^n)`` of a one-letter WFA as an LRS of order = state count."""
    if len(w.alphabet) != 1:
        raise ValueError("wfa_to_lrs needs a one-letter alphabet, got %d letters" % len(w.alphabet))
    return _from_linear_rep(w.initial, w.matrices[w.alphabet[0]], w.final)
