"""Text format for ideals and graphs.

    ring x,y,z;  ideal (x^2*y, y*z^3)
    graph a,b,c; edges (a-b, b-c)

The ring line is optional for ideals; without it variables are taken in
order of first appearance. ``1`` is the unit monomial and ``ideal ()`` the
zero ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import MonomialIdeal, Ring
from .graphs import SimpleGraph


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<nat>\d+)|(?P<sym>[,;()^*\-]))")


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokens(text: str) -> list[_Tok]:
    out = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def where(p):
        ln = max(i for i, s in enumerate(line_starts) if s <= p)
        return ln + 1, p - line_starts[ln] + 1

    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = len(text) - len(text[pos:].lstrip())
            if rest >= len(text):
                break
            raise ParseError(f"unexpected character {text[rest]!r}", *where(rest))
        kind = m.lastgroup
        start = m.start(kind)
        out.append(_Tok(kind, m.group(kind), *where(start)))
        pos = m.end()
    out.append(_Tok("end", "", *where(len(text))))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, msg: str):
        raise ParseError(msg, self.tok.line, self.tok.col)

    def take(self, kind: str, text: str | None = None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "end" else "end of input"
            self.fail(f"expected {want}, got {got}")
        self.i += 1
        return t

    def peek(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def names(self) -> list[_Tok]:
        out = [self.take("name")]
        while self.peek("sym", ","):
            self.i += 1
            out.append(self.take("name"))
        return out


@dataclass(eq=False)
class IdealExpr:
    """A parsed ideal; equality ignores the source text and warnings."""

    ring: Ring
    ideal: MonomialIdeal
    source: str = ""
    warnings: list[str] = field(default_factory=list)

    def __eq__(self, other):
        if not isinstance(other, IdealExpr):
            return NotImplemented
        return self.ring == other.ring and self.ideal == other.ideal

    def render(self) -> str:
        return render_ideal(self.ideal)


def parse_ideal(text: str) -> IdealExpr:
    p = _Parser(text)
    declared = None
    if p.peek("name", "ring"):
        p.i += 1
        declared = []
        for t in p.names():
            if t.text in declared:
                raise ParseError(f"variable {t.text!r} declared twice", t.line, t.col)
            declared.append(t.text)
        p.take("sym", ";")
    p.take("name", "ideal")
    p.take("sym", "(")
    monos: list[dict[str, int]] = []
    seen: list[str] = []
    if not p.peek("sym", ")"):
        while True:
            monos.append(_monomial(p, declared, seen))
            if not p.peek("sym", ","):
                break
            p.i += 1
    p.take("sym", ")")
    if p.peek("sym", ";"):
        p.i += 1
    if not p.peek("end"):
        p.fail(f"unexpected {p.tok.text!r} after the ideal")
    names = declared if declared is not None else seen
    if not names:
        raise ParseError("cannot infer a ring: no variables declared or used", p.tok.line, p.tok.col)
    ring = Ring(tuple(names))
    exps = [tuple(m.get(v, 0) for v in ring.vars) for m in monos]
    ideal = MonomialIdeal._build(ring, exps)
    warnings = []
    if len(ideal.gens) < len(exps):
        dropped = len(exps) - len(ideal.gens)
        warnings.append(f"{dropped} redundant generator(s) removed")
    return IdealExpr(ring, ideal, text, warnings)


def _monomial(p: _Parser, declared, seen) -> dict[str, int]:
    if p.peek("nat", "1"):
        p.i += 1
        return {}
    out: dict[str, int] = {}
    while True:
        t = p.take("name")
        if declared is not None and t.text not in declared:
            raise ParseError(f"unknown variable {t.text!r}", t.line, t.col)
        if t.text not in seen:
            seen.append(t.text)
        k = 1
        if p.peek("sym", "^"):
            p.i += 1
            k = int(p.take("nat").text)
        out[t.text] = out.get(t.text, 0) + k
        if not p.peek("sym", "*"):
            return out
        p.i += 1


def render_ideal(I: MonomialIdeal) -> str:
    """Canonical text; parse_ideal(render_ideal(I)) gives back I over the same ring."""
    return f"ring {','.join(I.ring.vars)}; ideal {I}"


def parse_graph(text: str) -> SimpleGraph:
    p = _Parser(text)
    p.take("name", "graph")
    vs = [t.text for t in p.names()]
    p.take("sym", ";")
    p.take("name", "edges")
    p.take("sym", "(")
    edges = []
    if not p.peek("sym", ")"):
        while True:
            a = p.take("name")
            p.take("sym", "-")
            b = p.take("name")
            for t in (a, b):
                if t.text not in vs:
                    raise ParseError(f"unknown vertex {t.text!r}", t.line, t.col)
            if a.text == b.text:
                raise ParseError(f"loop at {a.text!r}", a.line, a.col)
            edges.append((a.text, b.text))
            if not p.peek("sym", ","):
                break
            p.i += 1
    p.take("sym", ")")
    if p.peek("sym", ";"):
        p.i += 1
    if not p.peek("end"):
        p.fail(f"unexpected {p.tok.text!r} after the edge list")
    return SimpleGraph(vs, edges)


def render_graph(G: SimpleGraph) -> str:
    return str(G)


def parse_monomial_exps(text: str, ring: Ring) -> tuple[int, ...]:
    """Exponent vector of a single monomial such as ``x1^2*x3`` over ``ring``."""
    p = _Parser(text)
    m = _monomial(p, list(ring.vars), [])
    if not p.peek("end"):
        p.fail(f"unexpected {p.tok.text!r} after the monomial")
    return tuple(m.get(v, 0) for v in ring.vars)

