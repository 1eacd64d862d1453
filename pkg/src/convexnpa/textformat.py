"""Line-oriented text format for NPA, DPA and WFA files.

Example::

    npa
    alphabet: a b
    states: s0 s1 s2 s3
    initial: s0
    output: s0=1 s1=0 s2=1 s3=1
    trans s0 a: { s0=1 } { s1=1/2 s2=1/2 }

A DPA uses exactly one brace group per transition.  A WFA replaces
``output:`` by ``in:`` and ``out:`` vectors (``s=w`` pairs, missing states
weigh 0) and gives ``matrix a: row s0: 1/2 1/2 ; row s1: 0 1`` lines.
Weights are exact: ``p`` or ``p/q``.  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .automata import (
    Distribution,
    Dpa,
    GeneratorSet,
    Npa,
    ValidationError,
    Wfa,
    validate_dpa,
    validate_npa,
    validate_wfa,
)

KINDS = ("npa", "dpa", "wfa")

_RAT = re.compile(r"^-?\d+(?:/\d+)?$")
_PAIR = re.compile(r"([^\s=]+)\s*=\s*([^\s=]+)")
_BRACES = re.compile(r"\{([^{}]*)\}")
_TRANS = re.compile(r"^trans\s+(\S+)\s+([^\s:]+)\s*:(.*)$")
_MATRIX = re.compile(r"^matrix\s+([^\s:]+)\s*:(.*)$")
_ROW = re.compile(r"^row\s+([^\s:]+)\s*:(.*)$")


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)


def parse_rat(text: str, lineno: int | None = None) -> Fraction:
    text = text.strip()
    if not _RAT.match(text):
        raise ParseError("not an exact rational: %r" % text, lineno)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError("zero denominator: %r" % text, lineno) from None


def format_rat(x: Fraction) -> str:
    return str(Fraction(x))


def _pairs(text: str, index: dict, lineno: int) -> list:
    leftover = _PAIR.sub("", text).strip()
    if leftover:
        raise ParseError("unexpected text %r" % leftover, lineno)
    out = []
    for name, value in _PAIR.findall(text):
        if name not in index:
            raise ParseError("unknown state %r" % name, lineno)
        out.append((index[name], parse_rat(value, lineno)))
    return out


def _groups(text: str, index: dict, lineno: int) -> list:
    if _BRACES.sub("", text).strip():
        raise ParseError("expected brace groups, got %r" % text.strip(), lineno)
    return [Distribution(_pairs(body, index, lineno), check=False) for body in _BRACES.findall(text)]


def parse_automaton(text: str, validate: bool = True):
    """Parse a file body into an :class:`Npa`, :class:`Dpa` or :class:`Wfa`."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((lineno, line))
    if not lines:
        raise ParseError("empty file")
    lineno, kind = lines[0]
    kind = kind.lower()
    if kind not in KINDS:
        raise ParseError("first line must be one of %s, got %r" % ("/".join(KINDS), kind), lineno)

    header: dict = {}
    body = []
    for lineno, line in lines[1:]:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if sep and key in ("alphabet", "states", "initial", "output", "in", "out"):
            if key in header:
                raise ParseError("duplicate %r line" % key, lineno)
            header[key] = (lineno, rest.strip())
        else:
            body.append((lineno, line))

    for key in ("alphabet", "states"):
        if key not in header:
            raise ParseError("missing %r line" % key)
    alphabet = tuple(header["alphabet"][1].split())
    states = tuple(header["states"][1].split())
    if len(set(states)) != len(states):
        raise ParseError("duplicate state names", header["states"][0])
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("duplicate symbols", header["alphabet"][0])
    index = {name: i for i, name in enumerate(states)}

    if kind == "wfa":
        result = _parse_wfa(states, alphabet, header, body, index)
        if validate:
            validate_wfa(result)
        return result

    if "initial" not in header:
        raise ParseError("missing 'initial' line")
    lineno, name = header["initial"]
    if name not in index:
        raise ParseError("initial state %r is not declared" % name, lineno)
    initial = index[name]
    if "output" not in header:
        raise ParseError("missing 'output' line")
    lineno, rest = header["output"]
    outputs = dict(_pairs(rest, index, lineno))
    missing = [states[s] for s in range(len(states)) if s not in outputs]
    if missing:
        raise ValidationError("output not defined on state %s" % missing[0])
    output = [outputs[s] for s in range(len(states))]

    transitions = {}
    for lineno, line in body:
        m = _TRANS.match(line)
        if not m:
            raise ParseError("unrecognised line %r" % line, lineno)
        src, sym, rest = m.groups()
        if src not in index:
            raise ParseError("unknown state %r" % src, lineno)
        if sym not in alphabet:
            raise ParseError("unknown symbol %r" % sym, lineno)
        key = (index[src], sym)
        if key in transitions:
            raise ParseError("duplicate transition for %s %s" % (src, sym), lineno)
        groups = _groups(rest, index, lineno)
        if kind == "dpa":
            if len(groups) != 1:
                raise ParseError("dpa transition needs exactly one distribution", lineno)
            transitions[key] = groups[0]
        else:
            transitions[key] = GeneratorSet(groups)

    cls = Npa if kind == "npa" else Dpa
    result = cls(states=states, alphabet=alphabet, initial=initial, output=output, transitions=transitions)
    if validate:
        (validate_npa if kind == "npa" else validate_dpa)(result)
    return result


def _vector(header, key, index, n):
    if key not in header:
        raise ParseError("missing %r line" % key)
    lineno, rest = header[key]
    vec = [Fraction(0)] * n
    for s, w in _pairs(rest, index, lineno):
        vec[s] = w
    return vec


def _parse_wfa(states, alphabet, header, body, index) -> Wfa:
    n = len(states)
    initial = _vector(header, "in", index, n)
    final = _vector(header, "out", index, n)
    matrices = {}
    for lineno, line in body:
        m = _MATRIX.match(line)
        if not m:
            raise ParseError("unrecognised line %r" % line, lineno)
        sym, rest = m.groups()
        if sym not in alphabet:
            raise ParseError("unknown symbol %r" % sym, lineno)
        if sym in matrices:
            raise ParseError("duplicate matrix for %r" % sym, lineno)
        rows = {}
        for chunk in rest.split(";"):
            rm = _ROW.match(chunk.strip())
            if not rm:
                raise ParseError("bad matrix row %r" % chunk.strip(), lineno)
            name, values = rm.groups()
            if name not in index:
                raise ParseError("unknown state %r" % name, lineno)
            row = [parse_rat(v, lineno) for v in values.split()]
            if len(row) != n:
                raise ParseError("row %s has %d entries, expected %d" % (name, len(row), n), lineno)
            rows[index[name]] = row
        if len(rows) != n:
            raise ParseError("matrix %s needs one row per state" % sym, lineno)
        matrices[sym] = [rows[i] for i in range(n)]
    return Wfa(states=states, alphabet=alphabet, initial=initial, final=final, matrices=matrices)


def _dist_text(d: Distribution, states) -> str:
    return "{ %s }" % " ".join("%s=%s" % (states[s], format_rat(w)) for s, w in d.items())


def format_automaton(a) -> str:
    """Render the canonical text form; ``parse_automaton`` inverts it exactly."""
    kind = {Npa: "npa", Dpa: "dpa", Wfa: "wfa"}[type(a)]
    lines = [
        kind,
        "alphabet: " + " ".join(a.alphabet),
        "states: " + " ".join(a.states),
    ]
    if kind == "wfa":
        lines.append("in: " + " ".join("%s=%s" % (s, format_rat(w)) for s, w in zip(a.states, a.initial)))
        lines.append("out: " + " ".join("%s=%s" % (s, format_rat(w)) for s, w in zip(a.states, a.final)))
        for sym in a.alphabet:
            rows = " ; ".join(
                "row %s: %s" % (a.states[i], " ".join(format_rat(x) for x in row))
                for i, row in enumerate(a.matrices[sym])
            )
            lines.append("matrix %s: %s" % (sym, rows))
        return "\n".join(lines) + "\n"

    lines.append("initial: " + a.states[a.initial])
    lines.append("output: " + " ".join("%s=%s" % (s, format_rat(w)) for s, w in zip(a.states, a.output)))
    for s in range(len(a.states)):
        for sym in a.alphabet:
            target = a.transitions[(s, sym)]
            if kind == "dpa":
                body = _dist_text(target, a.states)
            else:
                body = " ".join(_dist_text(g, a.states) for g in target)
            lines.append("trans %s %s: %s" % (a.states[s], sym, body))
    return "\n".join(lines) + "\n"


def load_automaton(path) -> object:
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())
