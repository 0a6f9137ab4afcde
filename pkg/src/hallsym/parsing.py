"""Text forms of coefficients and elements.

Grammar (whitespace is ignored)::

    expr    := term (('+' | '-') term)*
    term    := ('+' | '-')* factor (('*' | '/') factor)*
    factor  := atom ('^' ['-'] INT)?
    atom    := INT | 'q' | '(' expr ')' | BASIS '[' [INT (',' INT)*] ']'
    BASIS   := 'I' | 'X' | 'e' | 'P' | 'Q' | 'p'

A coefficient is an ``expr`` without basis atoms.  An element is an
``expr`` whose terms are scalars times a single basis atom, all in the same
basis.  Zero is written ``0*B[]`` to keep its basis; a bare ``0`` is read as
the zero element of ``I``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hallcore import BASES, HallElement
from .partition import Partition
from .qrat import ONE, Q, QRat, as_qrat

__all__ = ["ParseError", "parse_coeff", "parse_element", "format_coeff", "format_element"]


class ParseError(ValueError):
    """Malformed input; carries the offending position and what was expected there."""

    def __init__(self, message: str, position: int, expected: frozenset | set = frozenset()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


@dataclass(frozen=True)
class _Tok:
    kind: str  # INT, q, BASIS, op, or END
    text: str
    pos: int


_OPS = set("+-*/^()[],")


def _tokenize(text: str) -> list[_Tok]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Tok("INT", text[i:j], i))
            i = j
        elif ch == "q":
            out.append(_Tok("q", ch, i))
            i += 1
        elif ch in BASES:
            out.append(_Tok("BASIS", ch, i))
            i += 1
        elif ch in _OPS:
            out.append(_Tok("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, {"digit", "q", "basis letter", "operator"})
    out.append(_Tok("END", "", len(text)))
    return out


class _Value:
    """A scalar, or a scalar times a single basis vector, or a sum of such terms."""

    __slots__ = ("scalar", "element")

    def __init__(self, scalar: QRat | None = None, element: HallElement | None = None):
        self.scalar = scalar
        self.element = element

    @property
    def is_scalar(self) -> bool:
        return self.element is None


class _Parser:
    def __init__(self, text: str, allow_elements: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_elements = allow_elements

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _expect_op(self, ch: str) -> _Tok:
        if self.tok.kind == "op" and self.tok.text == ch:
            return self._take()
        raise ParseError(f"unexpected {self._describe()}", self.tok.pos, {repr(ch)})

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "END" else repr(self.tok.text)

    def _atom_start(self) -> set:
        s = {"integer", "'q'", "'('"}
        if self.allow_elements:
            s.add("basis letter")
        return s

    def parse(self) -> _Value:
        if self.tok.kind == "END":
            raise ParseError("empty input", 0, self._atom_start())
        v = self.expr()
        if self.tok.kind != "END":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos, {"'+'", "'-'", "'*'", "'/'", "end of input"})
        return v

    def expr(self) -> _Value:
        v = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self._take()
            w = self.term()
            v = self._combine_add(v, w, op)
        return v

    def term(self) -> _Value:
        sign = 1
        while self.tok.kind == "op" and self.tok.text in "+-":
            if self._take().text == "-":
                sign = -sign
        v = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self._take()
            w = self.factor()
            v = self._combine_mul(v, w, op)
        if sign < 0:
            v = self._negate(v)
        return v

    def factor(self) -> _Value:
        start = self.tok
        v = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self._take()
            neg = False
            if self.tok.kind == "op" and self.tok.text == "-":
                self._take()
                neg = True
            if self.tok.kind != "INT":
                raise ParseError(f"unexpected {self._describe()}", self.tok.pos, {"integer exponent"})
            k = int(self._take().text)
            if not v.is_scalar:
                raise ParseError("basis elements cannot be raised to a power", start.pos, {"scalar base"})
            k = -k if neg else k
            try:
                v = _Value(v.scalar ** k)
            except ZeroDivisionError:
                raise ParseError("zero raised to a negative power", start.pos) from None
        return v

    def atom(self) -> _Value:
        t = self.tok
        if t.kind == "INT":
            self._take()
            return _Value(as_qrat(int(t.text)))
        if t.kind == "q":
            self._take()
            return _Value(Q)
        if t.kind == "op" and t.text == "(":
            self._take()
            v = self.expr()
            self._expect_op(")")
            return v
        if t.kind == "BASIS" and self.allow_elements:
            self._take()
            return _Value(ONE, HallElement._raw(t.text, {self.partition(): ONE}))
        raise ParseError(f"unexpected {self._describe()}", t.pos, self._atom_start())

    def partition(self) -> Partition:
        self._expect_op("[")
        parts = []
        if not (self.tok.kind == "op" and self.tok.text == "]"):
            while True:
                if self.tok.kind != "INT":
                    raise ParseError(f"unexpected {self._describe()}", self.tok.pos, {"positive integer part"})
                tok = self._take()
                a = int(tok.text)
                if a < 1:
                    raise ParseError("parts must be positive", tok.pos, {"positive integer part"})
                if parts and a > parts[-1]:
                    raise ParseError(
                        "parts must be weakly decreasing", tok.pos, {f"part <= {parts[-1]}"}
                    )
                parts.append(a)
                if self.tok.kind == "op" and self.tok.text == ",":
                    self._take()
                    continue
                break
        if not (self.tok.kind == "op" and self.tok.text == "]"):
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos, {"','", "']'"})
        self._take()
        return Partition._trusted(parts)

    # -- semantic combination ---------------------------------------------
    def _negate(self, v: _Value) -> _Value:
        if v.is_scalar:
            return _Value(-v.scalar)
        return _Value(None, -v.element)

    def _combine_add(self, v: _Value, w: _Value, op: _Tok) -> _Value:
        if v.is_scalar and w.is_scalar:
            return _Value(v.scalar + w.scalar if op.text == "+" else v.scalar - w.scalar)
        if v.is_scalar or w.is_scalar:
            raise ParseError("cannot add a scalar to a basis element", op.pos, {"coefficient '*' basis term"})
        if v.element.basis != w.element.basis:
            raise ParseError(
                f"mixed bases {v.element.basis} and {w.element.basis}", op.pos, {f"basis {v.element.basis}"}
            )
        return _Value(None, v.element + w.element if op.text == "+" else v.element - w.element)

    def _combine_mul(self, v: _Value, w: _Value, op: _Tok) -> _Value:
        if v.is_scalar and w.is_scalar:
            if op.text == "*":
                return _Value(v.scalar * w.scalar)
            if not w.scalar:
                raise ParseError("division by zero", op.pos)
            return _Value(v.scalar / w.scalar)
        if op.text == "/":
            if not w.is_scalar:
                raise ParseError("cannot divide by a basis element", op.pos, {"scalar divisor"})
            if not w.scalar:
                raise ParseError("division by zero", op.pos)
            return _Value(None, v.element.scale(1 / w.scalar))
        if not v.is_scalar and not w.is_scalar:
            raise ParseError("products of basis elements are not part of the grammar", op.pos, {"scalar factor"})
        s, e = (v.scalar, w.element) if v.is_scalar else (w.scalar, v.element)
        return _Value(None, e.scale(s))


def parse_coeff(text: str) -> QRat:
    """Parse a coefficient such as ``(1-q)/(1+q)`` or ``q^-1``."""
    return _Parser(text, allow_elements=False).parse().scalar


def parse_element(text: str) -> HallElement:
    """Parse an element such as ``I[2] + (1-q)*I[1,1]``."""
    parser = _Parser(text, allow_elements=True)
    v = parser.parse()
    if v.is_scalar:
        if not v.scalar:
            return HallElement("I")
        raise ParseError("a bare scalar is not an element; write it as c*B[]", 0, {"basis term"})
    return v.element


def format_coeff(c: QRat) -> str:
    return str(c)


def format_element(x: HallElement) -> str:
    """Canonical text form; ``parse_element`` inverts it."""
    items = x.items()
    if not items:
        return f"0*{x.basis}[]"
    pieces = []
    for lam, c in items:
        atom = f"{x.basis}{lam}"
        if c == ONE:
            neg, body = False, atom
        elif c == -ONE:
            neg, body = True, atom
        elif c.is_laurent() and c.num.is_monomial():
            (e, v), = c.num.items()
            neg = v < 0
            mag = str(QRat(-c.num if neg else c.num))
            body = f"{mag}*{atom}"
        else:
            neg, body = False, f"({c})*{atom}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)
