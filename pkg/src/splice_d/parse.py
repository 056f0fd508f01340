"""Expression grammar for the command line.

    expr    := gram | glue | splice | knot
    gram    := JSON array of integer arrays
    splice  := 'splice' '(' knot ',' knot ')'
    glue    := 'glue' '(' knot ',' knot ';' opt (',' opt)* ')'
    opt     := ('n1' | 'n2') '=' int | 'sign' '=' ('+' | '-' | '+1' | '-1')
    knot    := ['-'] 'sigma' '(' int (',' int)* ')' ['@' int]
             | ['-'] 'torus' '(' int ',' int ')'
             | 'knot' '(' kv (',' kv)* ')'      kv keys: dplus dminus v0 v0m

Offsets in errors are byte offsets into the UTF-8 encoded input.
"""

import json
import re

from .errors import ParseError, SemanticError, SpliceDError
from .lattice import GramLattice
from .seifert import FiberRef, SeifertData
from .splice import AbstractKnot, GluingSpec, SeifertFiber, TorusKnot

_INT = re.compile(r"[+-]?\d+")
_WORD = re.compile(r"[a-z][a-z0-9]*")
_KNOT_KEYS = {"dplus": "d_plus", "dminus": "d_minus", "v0": "v0", "v0m": "v0_mirror"}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def offset(self, pos=None):
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, *expected):
        raise ParseError(self.offset(), expected, self.text)

    def semantic(self, exc, start):
        code = exc.code if isinstance(exc, SpliceDError) else type(exc).__name__
        raise SemanticError(str(exc), code, self.offset(start)) from exc

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        self.ws()
        return self.text.startswith(s, self.pos)

    def eat(self, s):
        if not self.peek(s):
            self.fail(repr(s))
        self.pos += len(s)

    def word(self, *choices):
        self.ws()
        m = _WORD.match(self.text, self.pos)
        if not m or m.group() not in choices:
            self.fail(*choices)
        self.pos = m.end()
        return m.group()

    def integer(self, signed=True):
        self.ws()
        m = _INT.match(self.text, self.pos)
        if not m or (not signed and m.group()[0] in "+-"):
            self.fail("integer")
        self.pos = m.end()
        return int(m.group())

    def eof(self):
        self.ws()
        if self.pos != len(self.text):
            self.fail("end of input")

    # grammar -----------------------------------------------------------

    def expr(self):
        self.ws()
        if self.peek("["):
            return self.gram()
        m = _WORD.match(self.text, self.pos)
        head = m.group() if m else None
        if head == "splice":
            return self.gluing(splice=True)
        if head == "glue":
            return self.gluing(splice=False)
        return self.knot(allow_bare=True)

    def gram(self):
        start = self.pos
        try:
            value, end = json.JSONDecoder().raw_decode(self.text, self.pos)
        except json.JSONDecodeError as exc:
            raise ParseError(self.offset(exc.pos), ["JSON array"], self.text) from None
        self.pos = end
        if not (isinstance(value, list) and all(isinstance(r, list) for r in value)
                and all(isinstance(x, int) and not isinstance(x, bool) for r in value for x in r)):
            self.semantic(ValueError("Gram matrix must be an array of integer arrays"), start)
        try:
            return GramLattice(tuple(tuple(r) for r in value))
        except ValueError as exc:
            self.semantic(exc, start)

    def knot(self, allow_bare=False):
        self.ws()
        start = self.pos
        orientation = 1
        if self.peek("-"):
            self.pos += 1
            orientation = -1
        kind = self.word("sigma", "torus") if orientation < 0 else self.word("sigma", "torus", "knot")
        if kind == "sigma":
            nums = self.int_list(signed=False)
            try:
                data = SeifertData(tuple(nums), orientation)
            except SpliceDError as exc:
                self.semantic(exc, start)
            if self.peek("@"):
                self.pos += 1
                mark = self.pos
                order = self.integer(signed=False)
                try:
                    return SeifertFiber(data, FiberRef.of_order(order))
                except SpliceDError as exc:
                    self.semantic(exc, mark)
            if not allow_bare:
                self.fail("'@'")
            return data
        if kind == "torus":
            nums = self.int_list(signed=False)
            if len(nums) != 2:
                self.semantic(ValueError("torus takes exactly two integers"), start)
            try:
                return TorusKnot(nums[0], nums[1], orientation < 0)
            except SpliceDError as exc:
                self.semantic(exc, start)
        self.eat("(")
        fields = {}
        while True:
            key = self.word(*_KNOT_KEYS)
            if _KNOT_KEYS[key] in fields:
                self.semantic(ValueError(f"duplicate key {key}"), start)
            self.eat("=")
            fields[_KNOT_KEYS[key]] = self.integer()
            if self.peek(")"):
                self.pos += 1
                break
            if not self.peek(","):
                self.fail("','", "')'")
            self.pos += 1
        try:
            return AbstractKnot(**fields)
        except (SpliceDError, ValueError) as exc:
            self.semantic(exc, start)

    def int_list(self, signed):
        self.eat("(")
        out = [self.integer(signed)]
        while not self.peek(")"):
            if not self.peek(","):
                self.fail("','", "')'")
            self.pos += 1
            out.append(self.integer(signed))
        self.pos += 1
        return out

    def gluing(self, splice):
        self.word("splice" if splice else "glue")
        self.eat("(")
        a = self.knot()
        self.eat(",")
        b = self.knot()
        opts = {"n1": 0, "n2": 0, "sign": 1}
        if not splice:
            self.eat(";")
            seen = set()
            while True:
                key = self.word("n1", "n2", "sign")
                if key in seen:
                    self.fail("distinct option")
                seen.add(key)
                self.eat("=")
                if key == "sign":
                    self.ws()
                    m = re.compile(r"[+-]1?").match(self.text, self.pos)
                    if not m:
                        self.fail("'+'", "'-'")
                    self.pos = m.end()
                    opts["sign"] = -1 if m.group()[0] == "-" else 1
                else:
                    opts[key] = self.integer()
                if self.peek(")"):
                    break
                if not self.peek(","):
                    self.fail("','", "')'")
                self.pos += 1
        self.eat(")")
        return GluingSpec(a, b, opts["n1"], opts["n2"], opts["sign"])


def parse_expression(text: str):
    """Parse one expression; see the module docstring for the grammar."""
    p = _Parser(text)
    value = p.expr()
    p.eof()
    return value


def format_expression(obj) -> str:
    """Canonical text for a parsed value; parsing it back gives an equal value."""
    if isinstance(obj, SeifertData):
        body = ",".join(map(str, obj.canonical() or (1,)))
        return f"{'-' if obj.orientation < 0 else ''}sigma({body})"
    if isinstance(obj, SeifertFiber):
        return f"{format_expression(obj.data)}@{obj.order}"
    if isinstance(obj, TorusKnot):
        p, q = sorted((obj.p, obj.q))
        return f"{'-' if obj.mirrored else ''}torus({p},{q})"
    if isinstance(obj, AbstractKnot):
        parts = [f"{k}={getattr(obj, f)}" for k, f in _KNOT_KEYS.items() if getattr(obj, f) is not None]
        return f"knot({','.join(parts)})"
    if isinstance(obj, GluingSpec):
        a, b = format_expression(obj.side1), format_expression(obj.side2)
        if obj.is_splice and obj.sign == 1:
            return f"splice({a}, {b})"
        sign = "+" if obj.sign == 1 else "-"
        return f"glue({a}, {b}; n1={obj.n1}, n2={obj.n2}, sign={sign})"
    if isinstance(obj, GramLattice):
        return json.dumps([list(r) for r in obj.matrix], separators=(",", ":"))
    raise TypeError(f"cannot format {type(obj).__name__}")
