"""Tiny expression language for Clifford elements.

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := ("+" | "-") unary | atom
    atom  := INT ["/" INT] | "i" | "e" | "g{" [INT ("," INT)*] "}" | "(" expr ")"

``g{2,1}`` is the ordered product gamma_2 gamma_1, so unsorted index lists
pick up their sign.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .clifford import CliffordElement, mask_elements
from .errors import AmbientMismatchError, ParseError
from .gaussian import GaussianRational, I

_TOKEN = re.compile(r"\s*(?:(\d+)|(g\{)|([ei])|([-+*/(),}])|(−))")


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = self._lex(text)
        self.pos = 0

    def _err(self, msg: str, char_pos: int):
        raise ParseError(msg, len(self.text[:char_pos].encode("utf-8")))

    def _lex(self, text):
        out = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            mt = _TOKEN.match(text, i)
            if not mt:
                self._err(f"unexpected character {text[i]!r}", i)
            start = mt.start(mt.lastindex)
            if mt.group(1):
                out.append(("int", int(mt.group(1)), start))
            elif mt.group(2):
                out.append(("g{", None, start))
            elif mt.group(3):
                out.append((mt.group(3), None, start))
            elif mt.group(4):
                out.append((mt.group(4), None, start))
            else:
                out.append(("-", None, start))
            i = mt.end()
        out.append(("end", None, len(text)))
        return out

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            self._err(f"expected {kind!r}, found {what}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> CliffordElement:
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self._err("trailing input", tok[2])
        return _as_element(val, self.n)

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = _add(val, rhs if op == "+" else _neg(rhs), self.n)
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "*":
            self.take()
            val = _mul(val, self.unary())
        return val

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return _neg(self.unary())
        if kind == "+":
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind, value, where = self.peek()
        if kind == "int":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                _, den, dpos = self.take("int")
                if den == 0:
                    self._err("zero denominator", dpos)
                return GaussianRational(Fraction(value, den))
            return GaussianRational(value)
        if kind == "i":
            self.take()
            return I
        if kind == "e":
            self.take()
            return CliffordElement.unit(self.n)
        if kind == "g{":
            self.take()
            idx = []
            if self.peek()[0] != "}":
                while True:
                    _, i, ipos = self.take("int")
                    if not 1 <= i <= self.n:
                        raise AmbientMismatchError(
                            f"generator {i} outside 1..{self.n} (at byte {len(self.text[:ipos].encode())})"
                        )
                    idx.append(i)
                    if self.peek()[0] == ",":
                        self.take()
                        continue
                    break
            self.take("}")
            return CliffordElement.generator_product(self.n, idx)
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        what = "end of input" if kind == "end" else repr(kind if value is None else value)
        self._err(f"unexpected {what}", where)


def _as_element(v, n):
    return v if isinstance(v, CliffordElement) else CliffordElement(n, {0: v})


def _neg(v):
    return -v


def _add(a, b, n):
    if isinstance(a, GaussianRational) and isinstance(b, GaussianRational):
        return a + b
    return _as_element(a, n) + _as_element(b, n)


def _mul(a, b):
    return a * b


def parse_element(text: str, n: int) -> CliffordElement:
    """Parse ``text`` into a canonical element of C_n."""
    return _Parser(text, n).parse()


def format_element(x: CliffordElement) -> str:
    """Expression text that `parse_element` maps back to ``x``."""
    if not x.terms:
        return "0"
    parts = []
    for k in sorted(x.terms):
        c = x.terms[k]
        coeff = f"({c.re.numerator}/{c.re.denominator} + {c.im.numerator}/{c.im.denominator}*i)"
        mono = "e" if k == 0 else "g{" + ",".join(map(str, mask_elements(k))) + "}"
        parts.append(f"{coeff}*{mono}")
    return " + ".join(parts)
