"""Text forms of classes and A4 elements, and a small expression language over them.

Literals::

    [a,b]        the class of ([a, b], 0), a <= b
    dual[a,b]    the class of (0, [b, a]), a >= b
    point a      the point class (a, 0)
    (x1,x2,x3,x4)  an A4 element

Expressions combine literals and plain numbers with ``+``, ``-`` (or ``∖``), unary ``-``, ``*`` (or ``·``)
for multiplication by a scalar, and ``•`` (or ``@``) for the bullet product. ``*`` and ``•`` bind
tighter than ``+`` and ``-``; parentheses group.
"""
import math
import re
from typing import Iterator, List, Optional, Union

from .algebra4 import A4Element
from .core import GClass, X2, add, neg, scalar_mul, sign_of, sub
from .embedding import bullet
from .errors import ParseError

Value = Union[float, GClass]

NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_class_re = re.compile(rf"^\s*(dual)?\s*\[\s*({NUMBER})\s*,\s*({NUMBER})\s*\]\s*$|^\s*point\s+({NUMBER})\s*$")
_a4_re = re.compile(rf"^\s*\(\s*({NUMBER})\s*,\s*({NUMBER})\s*,\s*({NUMBER})\s*,\s*({NUMBER})\s*\)\s*$")
_token_re = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)|(dual|point)|(\S))")


def format_number(x: float) -> str:
    """Shortest text that reads back as the same float; integral values without ``.0``"""
    x = float(x)
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_class(a: GClass, tol: Optional[float] = None) -> str:
    sign = sign_of(a, tol)
    if sign.kind in ("scalar", "zero"):
        return f"point {format_number(sign.alpha)}"
    if sign.is_positive:
        return f"[{format_number(a.inf)},{format_number(a.sup)}]"
    return f"dual[{format_number(-a.sup)},{format_number(-a.inf)}]"


def format_a4(x: A4Element) -> str:
    return "(" + ",".join(format_number(v) for v in x.as_tuple()) + ")"


def parse_class(text: str) -> GClass:
    match = _class_re.match(text)
    if match is None:
        raise ParseError("not an interval literal (expected [a,b], dual[a,b] or point a)", text)
    dual, a, b, point = match.groups()
    if point is not None:
        alpha = _number(point)
        return GClass(alpha, alpha)
    lo, hi = _number(a), _number(b)
    if dual:
        if lo < hi:
            raise ParseError(f"dual[{a},{b}] should have its first endpoint >= the second", text)
        return GClass(-hi, -lo)
    if lo > hi:
        raise ParseError(f"[{a},{b}] has its left endpoint larger than the right one, use dual[...]", text)
    return GClass(lo, hi)


def parse_a4(text: str) -> A4Element:
    match = _a4_re.match(text)
    if match is None:
        raise ParseError("not an A4 element (expected (x1,x2,x3,x4))", text)
    return A4Element(*(_number(v) for v in match.groups()))


def _number(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ParseError("number out of range", text)
    return value


class Token:
    lbp = 0

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position

    def nud(self, parser: "Parser") -> Value:
        raise ParseError("unexpected token", self.text, self.position)

    def led(self, parser: "Parser", left: Value) -> Value:
        raise ParseError("unexpected token", self.text, self.position)


class NumberToken(Token):
    def nud(self, parser):
        return _number(self.text)


class BinaryToken(Token):
    def led(self, parser, left):
        right = parser.expression(self.lbp)
        return self.apply(left, right)

    def apply(self, left: Value, right: Value) -> Value:
        raise NotImplementedError


class AddToken(BinaryToken):
    lbp = 10

    def nud(self, parser):
        return parser.expression(30)

    def apply(self, left, right):
        if isinstance(left, float) and isinstance(right, float):
            return left + right
        return add(_promote(left), _promote(right))


class SubToken(BinaryToken):
    lbp = 10

    def nud(self, parser):
        value = parser.expression(30)
        return -value if isinstance(value, float) else neg(value)

    def apply(self, left, right):
        if isinstance(left, float) and isinstance(right, float):
            return left - right
        return sub(_promote(left), _promote(right))


class ScaleToken(BinaryToken):
    lbp = 20

    def apply(self, left, right):
        if isinstance(left, float) and isinstance(right, float):
            return left * right
        if isinstance(left, float):
            return scalar_mul(left, right)
        if isinstance(right, float):
            return scalar_mul(right, left)
        raise ParseError("'*' multiplies by a number, use • (or @) to multiply two intervals", self.text, self.position)


class BulletToken(BinaryToken):
    lbp = 20

    def apply(self, left, right):
        return bullet(_promote(left), _promote(right))


class OpenParenToken(Token):
    def nud(self, parser):
        value = parser.expression()
        parser.expect(")")
        return value


class BracketToken(Token):
    """``[a,b]``; a preceding ``dual`` keyword turns it into ``dual[a,b]``"""

    def nud(self, parser, dual: bool = False):
        lo = parser.signed_number()
        parser.expect(",")
        hi = parser.signed_number()
        parser.expect("]")
        if dual:
            if lo < hi:
                raise ParseError("dual[a,b] should have a >= b", self.text, self.position)
            return GClass(-hi, -lo)
        if lo > hi:
            raise ParseError("[a,b] should have a <= b, use dual[a,b] otherwise", self.text, self.position)
        return GClass(lo, hi)


class KeywordToken(Token):
    def nud(self, parser):
        if self.text == "point":
            value = parser.signed_number()
            return GClass(value, value)
        bracket = parser.advance()
        if not isinstance(bracket, BracketToken):
            raise ParseError("expected '[' after dual", bracket.text, bracket.position)
        return bracket.nud(parser, dual=True)


class PunctuationToken(Token):
    pass


class EndToken(Token):
    pass


_operators = {
    "+": AddToken,
    "-": SubToken,
    "∖": SubToken,
    "*": ScaleToken,
    "·": ScaleToken,
    "•": BulletToken,
    "@": BulletToken,
    "(": OpenParenToken,
    "[": BracketToken,
    ")": PunctuationToken,
    "]": PunctuationToken,
    ",": PunctuationToken,
}


def tokenize(source: str) -> Iterator[Token]:
    position = 0
    for match in _token_re.finditer(source):
        number, keyword, operator = match.groups()
        position = match.start(match.lastindex or 0)
        if number:
            yield NumberToken(number, position)
        elif keyword:
            yield KeywordToken(keyword, position)
        elif operator is not None:
            if operator not in _operators:
                raise ParseError("unknown symbol", operator, position)
            yield _operators[operator](operator, position)
        position = match.end()
    yield EndToken("<end>", len(source))


class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens: List[Token] = list(tokenize(source))
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if not isinstance(token, EndToken):
            self.index += 1
        return token

    def expect(self, text: str):
        token = self.advance()
        if token.text != text:
            raise ParseError(f"expected {text!r}", token.text, token.position)

    def signed_number(self) -> float:
        sign = 1.0
        while self.token.text in ("-", "+"):
            if self.advance().text == "-":
                sign = -sign
        token = self.advance()
        if not isinstance(token, NumberToken):
            raise ParseError("expected a number", token.text, token.position)
        return sign * _number(token.text)

    def expression(self, rbp: int = 0) -> Value:
        token = self.advance()
        left = token.nud(self)
        while rbp < self.token.lbp:
            token = self.advance()
            left = token.led(self, left)
        return left

    def parse(self) -> Value:
        value = self.expression()
        if not isinstance(self.token, EndToken):
            raise ParseError("unexpected token", self.token.text, self.token.position)
        return value


def _promote(value: Value) -> GClass:
    return scalar_mul(value, X2) if isinstance(value, float) else value


def evaluate(source: str) -> GClass:
    """Evaluate an expression; a plain number evaluates to its point class"""
    if not source.strip():
        raise ParseError("empty expression")
    return _promote(Parser(source).parse())
