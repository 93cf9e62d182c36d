"""Recursive-descent parser for series, pair and sequence expressions.

Grammar::

    pair   := '(' expr ',' expr ')'
    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 'x' | 'u' | 'y' | '(' expr ')'
            | 'c' ['(' expr ')'] | 't' ['(' expr ')'] | 'sqrt1' '(' expr ')'

``c`` and ``t`` are the Catalan and ternary series; ``c(e)`` composes. A
division by a series without constant term first cancels the common power
of x, so (1 - sqrt1(1 - 4*x)) / (2*x) is accepted. Expressions are evaluated
with extra precision and truncated at the end.

Sequence expressions::

    diagsums PAIR | rowsums PAIR | absrowsums PAIR | column K PAIR
    gf EXPR | 1, 1, 2, 5 | [1, 1, 2, 5]

where PAIR is a pair expression or a family name such as ``general:3,2``.
"""
import re
from typing import Callable, List, NamedTuple, Optional

from ..algebra.coeffring import U, Coefficient, to_coefficient
from ..algebra.families import FamilySpec, catalan, ternary
from ..algebra.riordan import RiordanPair
from ..algebra.series import Series
from ..algebra.transforms import matrix_sums
from ..utils.exceptions import ExpressionError, RiordanError

# Extra orders carried while evaluating, consumed by divisions by x^k.
HEADROOM = 8

TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class Token(NamedTuple):
    kind: str  # "int", "name", "op" or "eof"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if match.group(1):
            tokens.append(Token("int", match.group(1), match.start(1)))
        elif match.group(2):
            tokens.append(Token("name", match.group(2), match.start(2)))
        elif match.group(3):
            if match.group(3) not in "+-*/^(),":
                raise ExpressionError(f"unexpected character {match.group(3)!r} at {match.start(3)}")
            tokens.append(Token("op", match.group(3), match.start(3)))
        position = match.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


def _divide(numerator: Series, denominator: Series) -> Series:
    shift = denominator.valuation()
    if shift is None:
        raise ExpressionError("division by zero series")
    if shift:
        low = numerator.valuation()
        if low is not None and low < shift:
            raise ExpressionError(f"division by x^{shift} leaves a pole")
        numerator, denominator = numerator.shift_down(shift), denominator.shift_down(shift)
    return numerator / denominator


class ExpressionParser:
    """Parses and evaluates one expression at a fixed working order."""

    def __init__(self, text: str, order: int):
        self.text = text
        self.order = order
        self.tokens = tokenize(text)
        self.index = 0

    # -- token helpers ----------------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind in ("op", "name") and self.current.text == text:
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.current.text or "end of input"
            raise ExpressionError(f"expected {text!r} at {self.current.position}, found {found!r} in {self.text!r}")

    def expect_end(self) -> None:
        if self.current.kind != "eof":
            raise ExpressionError(f"unexpected {self.current.text!r} at {self.current.position} in {self.text!r}")

    # -- grammar ----------------------------------------------------------------

    def pair(self):
        self.expect("(")
        g = self.expr()
        self.expect(",")
        f = self.expr()
        self.expect(")")
        self.expect_end()
        return g, f

    def expr(self) -> Series:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Series:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.accept("/"):
                value = _divide(value, self.unary())
            else:
                return value

    def unary(self) -> Series:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> Series:
        base = self.atom()
        if self.accept("^"):
            negative = self.accept("-")
            token = self.advance()
            if token.kind != "int":
                raise ExpressionError(f"exponent must be an integer at {token.position}")
            exponent = -int(token.text) if negative else int(token.text)
            if exponent < 0 and base.valuation() != 0:
                raise ExpressionError("negative power of a series without constant term")
            return base ** exponent
        return base

    def _function(self, builder: Callable[[int], Series]) -> Series:
        outer = builder(self.order)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return outer.compose(inner)
        return outer

    def atom(self) -> Series:
        token = self.advance()
        if token.kind == "int":
            return Series.constant(int(token.text), self.order)
        if token.kind == "op" and token.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == "name":
            name = token.text
            if name == "x":
                return Series.variable(self.order)
            if name in ("u", "y"):
                return Series.constant(U, self.order)
            if name == "c":
                return self._function(catalan)
            if name == "t":
                return self._function(ternary)
            if name == "sqrt1":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return inner.sqrt1()
            raise ExpressionError(f"unknown name {name!r} at {token.position}")
        raise ExpressionError(f"unexpected {token.text or 'end of input'!r} at {token.position} in {self.text!r}")


def _evaluate(text: str, order: int, rule: Callable[[ExpressionParser], object]):
    parser = ExpressionParser(text, order + HEADROOM)
    try:
        return rule(parser)
    except ExpressionError:
        raise
    except RiordanError as e:
        raise ExpressionError(f"cannot evaluate {text!r}: {e}") from e


def _finish(series: Series, order: int, text: str) -> Series:
    if series.order < order:
        raise ExpressionError(f"{text!r} is only known to order {series.order}")
    return series.truncate(order)


def parse_series(text: str, order: int) -> Series:
    def rule(parser: ExpressionParser) -> Series:
        value = parser.expr()
        parser.expect_end()
        return value

    return _finish(_evaluate(text, order, rule), order, text)


def parse_pair(text: str, order: int) -> RiordanPair:
    g, f = _evaluate(text, order, lambda parser: parser.pair())
    try:
        return RiordanPair(_finish(g, order, text), _finish(f, order, text))
    except RiordanError as e:
        raise ExpressionError(f"{text!r} is not a Riordan pair: {e}") from e


def parse_pair_or_family(text: str, order: int) -> RiordanPair:
    """Pair expressions start with '('; anything else is a family name."""
    if text.strip().startswith("("):
        return parse_pair(text, order)
    return FamilySpec.parse(text).pair(order)


def parse_literal(text: str) -> List[Coefficient]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        return [to_coefficient(part) for part in body.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise ExpressionError(f"not a list of rationals: {text!r}") from None


SEQUENCE_MODES = {"diagsums": "diagonal", "rowsums": "row", "absrowsums": "abs_row"}


def parse_sequence(text: str, terms: int) -> List[Coefficient]:
    """Evaluate a sequence expression to ``terms`` values."""
    head, _, rest = text.strip().partition(" ")
    rest = rest.strip()
    if head in SEQUENCE_MODES:
        pair = parse_pair_or_family(rest, max(terms - 1, 1))
        return matrix_sums(pair.to_matrix(terms), SEQUENCE_MODES[head])
    if head == "column":
        k_text, _, pair_text = rest.partition(" ")
        if not k_text.isdigit():
            raise ExpressionError(f"column needs an index: {text!r}")
        k = int(k_text)
        pair = parse_pair_or_family(pair_text, k + terms - 1)
        return [pair.column(k).coeff(n) for n in range(k, k + terms)]
    if head == "gf":
        return list(parse_series(rest, terms - 1).coeffs)
    values = parse_literal(text)
    if not values:
        raise ExpressionError(f"empty sequence expression: {text!r}")
    return values


def describe(text: str) -> Optional[str]:
    """Family label for a family name, None for a pair expression."""
    if text.strip().startswith("("):
        return None
    return FamilySpec.parse(text).label
