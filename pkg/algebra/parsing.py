"""Polynomial text parsing on top of sympy's expression parser."""
import re
from fractions import Fraction
from tokenize import TokenError

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from .errors import ParseError, UnknownVariableError
from .polynomial import Polynomial, PolynomialRing

TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)

# parse_expr evaluates its input, so only these tokens may reach it
TOKEN = re.compile(r"\s+|(?P<number>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|\*\*|[-+*/^()]")


def check_tokens(text: str, names=()):
    """
    Reject anything but declared names, numeric literals, arithmetic
    operators and parentheses.

    Raises:
        ParseError: on any other character, or on a call of an undeclared name
        UnknownVariableError: on an undeclared name
    """
    pos = 0
    while pos < len(text):
        match = TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"Unexpected character {text[pos]!r} in {text!r}", pos)
        name = match.group("name")
        if name is not None and name not in names:
            if text[match.end():].lstrip().startswith("("):
                raise ParseError(f"Unknown function {name!r} in {text!r}", pos)
            raise UnknownVariableError(name)
        pos = match.end()


def parse_expression(text: str, names=()):
    """
    Parse text into a sympy expression without binding it to a ring.

    Args:
        text: Polynomial text, ``^`` or ``**`` for powers, ``*`` optional
        names: Variable names to bind as plain symbols

    Returns:
        sympy expression

    Raises:
        ParseError: on malformed input
    """
    local = {name: Symbol(name) for name in names}
    if not text.strip():
        raise ParseError("Empty polynomial", 0)
    check_tokens(text, local)
    try:
        return parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS, evaluate=True)
    except SyntaxError as e:
        offset = (e.offset or len(text)) - 1
        raise ParseError(f"Malformed polynomial {text!r}", max(0, min(offset, len(text))))
    except TokenError as e:
        raise ParseError(f"Malformed polynomial {text!r}: {e.args[0]}", len(text.rstrip()))
    except (TypeError, ValueError, AttributeError) as e:
        raise ParseError(f"Malformed polynomial {text!r}: {e}", 0)


def expression_to_polynomial(expr, ring: PolynomialRing) -> Polynomial:
    """Bind a parsed expression to ``ring``."""
    symbols = [Symbol(name) for name in ring.variables.names]
    for sym in sorted(expr.free_symbols, key=str):
        if sym not in symbols:
            raise UnknownVariableError(str(sym))
    try:
        poly = Poly(expr, *symbols, domain="QQ") if symbols else None
    except PolynomialError as e:
        raise ParseError(f"Not a polynomial: {expr} ({e})")
    if poly is None:
        value = Fraction(str(expr))
        return ring.constant(value)
    terms = {}
    for monom, coeff in poly.terms():
        value = ring.field.element(Fraction(int(coeff.p), int(coeff.q)))
        if value:
            terms[tuple(int(e) for e in monom)] = value
    return Polynomial(ring, terms)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse polynomial text over ``ring``."""
    return expression_to_polynomial(parse_expression(text, ring.variables.names), ring)
