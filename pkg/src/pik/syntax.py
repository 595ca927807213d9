"""Text syntax for terms.

Grammar, loosest binding first::

    term := sum { ";" sum }          f ; g  is g after f
    sum  := prod { "(+)" prod }
    prod := atom { "(x)" atom }
    atom := id(n) | swap(m, n) | zeta [^ j] | V | X | S | T | H | omega
          | ctrl(term) | cphase(d) | dagger(term) | conj(term)
          | scale(j, term) | ( term )

All binary operators associate to the left. Gate names expand to their
definitions at parse time, using the precision level given to ``parse``.
``#`` starts a comment that runs to the end of the line.
"""

import re

from . import gates
from .errors import ParseError, PikError
from .term import Comp, Id, Kron, Scale, Sum, SwapPlus, VGate, Zeta, X, V, term_conj, term_dagger

_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)|(?P<op>\(\+\)|\(x\)|[();,^])|(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
)


def _tokenize(src):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        text = m.group()
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src, k):
        self.tokens = _tokenize(src)
        self.i = 0
        self.k = k

    def peek(self):
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], tok[3])

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.peek()
        if tok[1] != text:
            shown = repr(tok[1]) if tok[0] != "eof" else "end of input"
            raise self.error(f"expected {text!r}, found {shown}")
        return self.next()

    def integer(self, natural=False):
        tok = self.peek()
        if tok[0] != "int":
            raise self.error("expected an integer")
        self.next()
        value = int(tok[1])
        if natural and value < 1:
            raise self.error("expected a positive integer", tok)
        return value

    def term(self):
        t = self.sum()
        while self.peek()[1] == ";":
            self.next()
            t = Comp(self.sum(), t)
        return t

    def sum(self):
        t = self.prod()
        while self.peek()[1] == "(+)":
            self.next()
            t = Sum(t, self.prod())
        return t

    def prod(self):
        t = self.atom()
        while self.peek()[1] == "(x)":
            self.next()
            t = Kron(t, self.atom())
        return t

    def gate(self, build, tok, *args):
        try:
            return build(*args)
        except PikError as exc:
            raise self.error(f"{tok[1]}: {exc}", tok) from None

    def atom(self):
        tok = self.next()
        kind, text = tok[0], tok[1]
        if text == "(":
            t = self.term()
            self.expect(")")
            return t
        if kind != "name":
            shown = repr(text) if kind != "eof" else "end of input"
            raise self.error(f"expected a term, found {shown}", tok)
        k = self.k
        if text == "V":
            return V
        if text == "X":
            return X
        if text == "S":
            return self.gate(gates.S, tok, k)
        if text == "T":
            return self.gate(gates.T, tok, k)
        if text in ("H", "omega"):
            if k < 3:
                raise self.error(f"{text} requires k >= 3, got k = {k}", tok)
            return gates.H(k) if text == "H" else gates.omega(k)
        if text == "zeta":
            if self.peek()[1] == "^":
                self.next()
                return Zeta(self.integer())
            return Zeta(1)
        if text in ("id", "swap", "cphase", "ctrl", "dagger", "conj", "scale"):
            self.expect("(")
            if text == "id":
                t = Id(self.integer(natural=True))
            elif text == "swap":
                m = self.integer(natural=True)
                self.expect(",")
                t = SwapPlus(m, self.integer(natural=True))
            elif text == "cphase":
                t = self.gate(gates.cphase, tok, self.integer(), k)
            elif text == "scale":
                j = self.integer()
                self.expect(",")
                t = Scale(j, self.term())
            else:
                inner = self.term()
                build = {"ctrl": gates.ctrl, "dagger": term_dagger, "conj": lambda u: term_conj(u, k)}[text]
                t = self.gate(build, tok, inner)
            self.expect(")")
            return t
        raise self.error(f"unknown name {text!r}", tok)


def parse(src, k):
    """Parse a term; gate names are expanded at precision level k."""
    p = _Parser(src, k)
    t = p.term()
    if p.peek()[0] != "eof":
        raise p.error(f"unexpected {p.peek()[1]!r} after term")
    return t


_SEQ, _SUM, _PROD, _ATOM = range(4)


def pretty(t):
    """Canonical text form; parse(pretty(t), k) == t for every k."""

    def go(u, level):
        if isinstance(u, Comp):
            s, own = f"{go(u.f, _SEQ)} ; {go(u.g, _SUM)}", _SEQ
        elif isinstance(u, Sum):
            s, own = f"{go(u.a, _SUM)} (+) {go(u.b, _PROD)}", _SUM
        elif isinstance(u, Kron):
            s, own = f"{go(u.a, _PROD)} (x) {go(u.b, _ATOM)}", _PROD
        else:
            return _atom(u, go)
        return f"({s})" if own < level else s

    return go(t, _SEQ)


def _atom(u, go):
    if isinstance(u, Id):
        return f"id({u.n})"
    if u == X:
        return "X"
    if isinstance(u, SwapPlus):
        return f"swap({u.m}, {u.n})"
    if isinstance(u, Zeta):
        return "zeta" if u.j == 1 else f"zeta^{u.j}"
    if isinstance(u, VGate):
        return "V"
    if isinstance(u, Scale):
        return f"scale({u.j}, {go(u.t, _SEQ)})"
    raise TypeError(f"not a term: {u!r}")
