"""Parse and render rational-function expressions, and load module files.

Grammar (precedence climbing, low to high):

    expr    := mult (('+' | '-') mult)*
    mult    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ['^' exponent]
    atom    := INT | NAME | '(' expr ')'
    exponent:= ['-'] INT ['^' exponent] | '(' exponent ')'

'^' binds tighter than unary minus, so -x^2 is -(x^2); exponent towers
associate to the right and must reduce to integers at parse time.  There is
no implicit multiplication.  Whitespace is insignificant; errors carry the
byte offset of the offending token.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diffmod import DiffModule
from .ratfield import MPoly, RatFunc


class ExprError(ValueError):
    """Parse or evaluation failure, with a byte offset into the source."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.message = message
        self.offset = offset


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


# AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class IntLit:
    value: int
    pos: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int


# tokenizer ----------------------------------------------------------------

_OPS = set("+-*/^()")

# integer literals are unbounded; exponents are capped so a degenerate
# tower like 9^9^9 cannot blow up at parse time
MAX_EXPONENT = 10 ** 6


def _is_digit(ch: str) -> bool:
    # ASCII only: str.isdigit() also accepts superscripts and other Unicode
    # digits that int() rejects
    return "0" <= ch <= "9"


def _is_name_start(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z" or ch == "_"


def _is_name_char(ch: str) -> bool:
    return _is_name_start(ch) or _is_digit(ch)


def _tokenize(text: str):
    """Yield (kind, value, byte_offset) triples; kinds INT, NAME, OP, END."""
    tokens = []
    i = 0
    n = len(text)
    byte_pos = 0
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            byte_pos += len(ch.encode("utf-8"))
            continue
        if _is_digit(ch):
            j = i
            while j < n and _is_digit(text[j]):
                j += 1
            tokens.append(("INT", text[i:j], byte_pos))
            byte_pos += j - i
            i = j
            continue
        if _is_name_start(ch):
            j = i
            while j < n and _is_name_char(text[j]):
                j += 1
            word = text[i:j]
            tokens.append(("NAME", word, byte_pos))
            byte_pos += len(word.encode("utf-8"))
            i = j
            continue
        if ch in _OPS:
            tokens.append(("OP", ch, byte_pos))
            i += 1
            byte_pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", byte_pos)
    tokens.append(("END", "", byte_pos))
    return tokens


class _Parser:
    def __init__(self, text: str, names: tuple[str, ...]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = names

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def eat_op(self, op: str) -> bool:
        kind, value, _ = self.peek()
        if kind == "OP" and value == op:
            self.pos += 1
            return True
        return False

    def parse(self):
        node = self.additive()
        kind, value, off = self.peek()
        if kind != "END":
            raise ParseError(f"unexpected token {value!r}", off)
        return node

    def additive(self):
        node = self.multiplicative()
        while True:
            kind, value, off = self.peek()
            if kind == "OP" and value in "+-":
                self.pos += 1
                rhs = self.multiplicative()
                node = BinOp(value, node, rhs, off)
            else:
                return node

    def multiplicative(self):
        node = self.unary()
        while True:
            kind, value, off = self.peek()
            if kind == "OP" and value in "*/":
                self.pos += 1
                rhs = self.unary()
                node = BinOp(value, node, rhs, off)
            else:
                return node

    def unary(self):
        kind, value, off = self.peek()
        if kind == "OP" and value == "-":
            self.pos += 1
            return Neg(self.unary(), off)
        return self.power()

    def power(self):
        node = self.atom()
        kind, value, off = self.peek()
        if kind == "OP" and value == "^":
            self.pos += 1
            e = self.exponent()
            return Pow(node, e, off)
        return node

    def exponent(self) -> int:
        kind, value, off = self.peek()
        if kind == "OP" and value == "-":
            self.pos += 1
            return -self.exponent()
        if kind == "OP" and value == "(":
            self.pos += 1
            e = self.exponent()
            if not self.eat_op(")"):
                k, v, o = self.peek()
                raise ParseError(f"expected ')' in exponent, got {v!r}", o)
            return e
        if kind == "INT":
            self.pos += 1
            base = int(value)
            k, v, o = self.peek()
            if k == "OP" and v == "^":
                self.pos += 1
                e = self.exponent()
                if e < 0:
                    raise ParseError("negative exponent inside an exponent tower", o)
                if abs(base) > MAX_EXPONENT or (abs(base) > 1 and e > 63):
                    raise ParseError("exponent too large", o)
                base = base ** e
            if abs(base) > MAX_EXPONENT:
                raise ParseError("exponent too large", off)
            return base
        raise ParseError("exponent must be an integer literal", off)

    def atom(self):
        kind, value, off = self.take()
        if kind == "INT":
            return IntLit(int(value), off)
        if kind == "NAME":
            if value not in self.names:
                raise ParseError(f"unknown variable {value!r}", off)
            return Var(value, off)
        if kind == "OP" and value == "(":
            node = self.additive()
            if not self.eat_op(")"):
                k, v, o = self.peek()
                raise ParseError(f"expected ')', got {v!r}", o)
            return node
        raise ParseError(f"unexpected token {value!r}" if value else "unexpected end of input", off)


def parse_ast(text: str, names: tuple[str, ...] = ("x", "t")):
    """Parse an expression to an AST without evaluating it."""
    return _Parser(text, names).parse()


def eval_ratfunc(node) -> RatFunc:
    """Evaluate an AST over the rational-function field."""
    if isinstance(node, IntLit):
        return RatFunc.from_int(node.value)
    if isinstance(node, Var):
        return RatFunc(MPoly.variable(node.name))
    if isinstance(node, Neg):
        return -eval_ratfunc(node.operand)
    if isinstance(node, BinOp):
        a = eval_ratfunc(node.left)
        b = eval_ratfunc(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero:
            raise EvalError("division by a zero expression", node.pos)
        return a / b
    if isinstance(node, Pow):
        base = eval_ratfunc(node.base)
        if node.exponent < 0 and base.is_zero:
            raise EvalError("zero raised to a negative power", node.pos)
        return base ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_expr(text: str) -> RatFunc:
    """Parse an expression in x and t into a canonical RatFunc."""
    return eval_ratfunc(parse_ast(text))


# rendering ----------------------------------------------------------------

def _render_term(key, coeff, lead: bool) -> str:
    """One monomial; coeff is taken positive except for a leading minus."""
    dx, dt = key
    parts = []
    c = coeff
    neg = c < 0
    if neg:
        c = -c
    if c != 1 or (dx == 0 and dt == 0):
        parts.append(str(c))
    if dx:
        parts.append("x" if dx == 1 else f"x^{dx}")
    if dt:
        parts.append("t" if dt == 1 else f"t^{dt}")
    body = "*".join(parts)
    if lead:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def render_poly(p: MPoly) -> str:
    if p.is_zero:
        return "0"
    keys = sorted(p.terms, reverse=True)
    out = [_render_term(k, p.terms[k], i == 0) for i, k in enumerate(keys)]
    return "".join(out)


def _monomial_factors(p: MPoly) -> int:
    key, c = p.leading()
    n = 0 if c == 1 else 1
    return n + (1 if key[0] else 0) + (1 if key[1] else 0)


def render(f: RatFunc) -> str:
    """Deterministic text form that parse_expr maps back to f."""
    num = render_poly(f.num)
    if f.den.terms == {(0, 0): 1}:
        return num
    den = render_poly(f.den)
    if len(f.num.terms) > 1:
        num = f"({num})"
    if len(f.den.terms) > 1 or _monomial_factors(f.den) > 1:
        den = f"({den})"
    return f"{num}/{den}"


def render_matrix(A) -> list[list[str]]:
    return [[render(e) for e in row] for row in A]


# module files -------------------------------------------------------------

class ModuleDocError(ValueError):
    """Malformed module document; row/col are set for entry-level failures."""

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col


def _validate_doc(data) -> tuple[int, list[list[str]], str | None]:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ModuleDocError(f"document is not valid UTF-8: {e}") from e
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ModuleDocError(f"document is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ModuleDocError("document must be a JSON object")
    n = data.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ModuleDocError('"n" must be a positive integer')
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ModuleDocError('"name" must be a string when present')
    matrix = data.get("matrix")
    if not isinstance(matrix, list) or len(matrix) != n:
        raise ModuleDocError(f'"matrix" must be a list of {n} rows')
    for r, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != n:
            raise ModuleDocError(f"row {r} must be a list of {n} entries", row=r)
        for c, entry in enumerate(row):
            if not isinstance(entry, str):
                raise ModuleDocError(f"entry ({r},{c}) must be a string", row=r, col=c)
    return n, matrix, name


@dataclass(frozen=True)
class ModuleDoc:
    """Validated but unevaluated module document."""

    n: int
    entries: tuple[tuple[str, ...], ...]
    name: str | None = None

    @classmethod
    def parse(cls, data) -> ModuleDoc:
        n, matrix, name = _validate_doc(data)
        return cls(n, tuple(tuple(row) for row in matrix), name)

    def to_module(self) -> DiffModule:
        rows = []
        for r, row in enumerate(self.entries):
            out = []
            for c, entry in enumerate(row):
                try:
                    out.append(parse_expr(entry))
                except ExprError as e:
                    raise ModuleDocError(
                        f"entry ({r},{c}): {e.message} (byte {e.offset})",
                        row=r, col=c) from e
            rows.append(out)
        return DiffModule(rows, name=self.name)


def load_module(data) -> DiffModule:
    """Parse a module document ({"n": int, "matrix": [[expr]]}) into a module."""
    return ModuleDoc.parse(data).to_module()
