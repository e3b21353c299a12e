"""Polynomial expression parser and tensor JSON reader.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("+" | "-") factor | atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Division is only allowed by nonzero constants.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from .ring import GradedRing, Ideal, Polynomial, QQ

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^(),]))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, ring: GradedRing, names):
        self.text = text
        self.ring = ring
        self.index = {nm: i for i, nm in enumerate(names)}
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            q = self.factor()
            if op[1] == "*":
                p = p * q
            else:
                if not q.terms:
                    self.fail("division by zero", op)
                if len(q.terms) != 1 or any(next(iter(q.terms))):
                    self.fail("division is only allowed by constants", op)
                p = p / next(iter(q.terms.values()))
        return p

    def factor(self) -> Polynomial:
        t = self.peek()
        if t[:2] == ("op", "-"):
            self.take()
            return -self.factor()
        if t[:2] == ("op", "+"):
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            e = self.take()
            if e[0] != "int":
                self.fail("exponent must be a nonnegative integer", e)
            base = base ** int(e[1])
        return base

    def atom(self) -> Polynomial:
        t = self.take()
        if t[0] == "int":
            return self.ring.const(QQ(int(t[1])))
        if t[0] == "name":
            if t[1] not in self.index:
                raise ParseError(f"unknown variable {t[1]!r}", self.text, t[2])
            return self.ring.var(self.index[t[1]])
        if t[:2] == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return p
        if t[0] == "end":
            raise ParseError("unexpected end of input", self.text, t[2])
        raise ParseError(f"unexpected {t[1]!r}", self.text, t[2])


def parse_polynomial(text: str, ring: GradedRing, dual: bool = False) -> Polynomial:
    names = ring.dual_names if dual else ring.names
    return _Parser(text, ring, names).parse()


def split_top_level(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def parse_ideal(text: str, ring: GradedRing) -> Ideal:
    t = text.strip()
    if t.startswith("(") and t.endswith(")") and _balanced(t[1:-1]):
        t = t[1:-1]
    return Ideal(ring, [parse_polynomial(p, ring) for p in split_top_level(t)])


def _balanced(s: str) -> bool:
    d = 0
    for ch in s:
        d += ch == "("
        d -= ch == ")"
        if d < 0:
            return False
    return d == 0


def infer_ring(text: str, dual: bool = True) -> GradedRing:
    """Smallest P^n whose variables cover the x_i (or y_i) in text."""
    letter = "x" if dual else "y"
    idx = [int(k) for k in re.findall(rf"\b{letter}(\d+)\b", text)]
    if not idx:
        raise ValueError(f"cannot infer a ring: no {letter}<i> variables in {text!r}")
    return GradedRing.product([max(idx) + 1])


def read_tensor(source: str | dict):
    """Shape and entries from a JSON object, text, or ``@path``."""
    if isinstance(source, dict):
        data = source
    else:
        s = source.strip()
        if s.startswith("@"):
            s = Path(s[1:]).read_text()
        elif not s.startswith("{"):
            s = Path(s).read_text()
        data = json.loads(s)
    if "shape" not in data or "entries" not in data:
        raise ValueError("tensor JSON needs 'shape' and 'entries'")
    entries = data["entries"]
    conv = []

    def walk(x):
        if isinstance(x, list):
            for y in x:
                walk(y)
        else:
            conv.append(QQ(str(x)) if isinstance(x, str) else QQ(x))
    walk(entries)
    return [int(k) for k in data["shape"]], conv
