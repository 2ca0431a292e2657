"""Tiny expression parser for command-line polynomial input.

Grammar (whitespace ignored):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT | NAME | '-' factor | '(' expr ')' | factor '^' INT

Names are a generator family followed by indices, with optional
underscores: ``u``, ``b1``, ``bp2``, ``q_2`` (or ``q2``), ``d_1_0``,
``a_1_1``, ``c_1_0``, ``x_1``.  Two-index families require an
underscore between the indices.
"""

from __future__ import annotations

import re

from .poly import GradedPoly, SymbolicError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([+\-*()^]))")

_FAMILIES_1 = ("bp", "b", "p", "q", "x")
_FAMILIES_2 = ("a", "c", "d", "pi")
_FAMILIES_0 = ("u", "mu", "tau", "v", "sigma")


class ParseError(SymbolicError):
    pass


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError("bad character at %r" % text[pos:pos + 8])
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    out.append(("end", None))
    return out


def _name_poly(name):
    if name in _FAMILIES_0:
        return GradedPoly.gen(name)
    for fam in _FAMILIES_2 + _FAMILIES_1:
        if name.startswith(fam):
            rest = name[len(fam):].lstrip("_")
            if not rest:
                break
            parts = rest.split("_")
            if not all(p.isdigit() for p in parts):
                break
            idx = [int(p) for p in parts]
            if fam in _FAMILIES_2 and len(idx) == 2:
                # d with two indices is the equivariant generator family
                fam2 = "D" if fam == "d" else fam
                return GradedPoly.gen(fam2, *idx)
            if fam in _FAMILIES_1 and len(idx) == 1:
                return GradedPoly.gen(fam, idx[0])
            break
    raise ParseError("unknown generator name %r" % name)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            node = node * self.factor()
        return node

    def factor(self):
        kind, val = self.take()
        if kind == "op" and val == "-":
            node = -self.factor()
        elif kind == "int":
            node = GradedPoly.const(val)
        elif kind == "name":
            node = _name_poly(val)
        elif kind == "op" and val == "(":
            node = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ParseError("expected ')'")
        else:
            raise ParseError("unexpected token %r" % ((kind, val),))
        while self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal")
            node = node ** e
        return node


def parse_expr(text):
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    if parser.peek() != ("end", None):
        raise ParseError("trailing input near token %d" % parser.pos)
    return node
