"""Reader for session files: one ring declaration, then named ideals and modules.

    ring p=32003 vars=x,y,z;
    ideal I = x^2, x*y, z^2;
    module M = [[x, y], [z^2, 0]];

Statements end with ``;``. A module lists relation vectors of equal
length r and denotes R^r modulo their span. ``#`` starts a comment.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.errors import AlgebraError, FieldError, ParseError
from algebra.field import CoefficientField
from algebra.free_module import FreeModule
from algebra.monomials import VariableSet
from algebra.parsing import parse_polynomial
from algebra.polynomial import Polynomial, PolynomialRing
from groebner.submodule import PresentedModule, Submodule

from .errors import InputSyntaxError, UnknownNameError

logger = logging.getLogger(__name__)

NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
RING_STATEMENT = re.compile(r"ring\s+(?P<field>QQ|p\s*=\s*\S+)\s+vars\s*=\s*(?P<vars>.+)", re.DOTALL)
DEFINITION = re.compile(r"(?P<kind>ideal|module)\s+(?P<name>[A-Za-z][A-Za-z0-9_]*)\s*=\s*(?P<body>.*)", re.DOTALL)


@dataclass
class SessionInput:
    """A ring and the ideals and modules named over it, generators in canonical text."""
    field_spec: str
    variables: Tuple[str, ...]
    ideals: Dict[str, List[str]] = field(default_factory=dict)
    modules: Dict[str, List[List[str]]] = field(default_factory=dict)

    def ring(self, field_override: Optional[str] = None) -> PolynomialRing:
        spec = field_override or self.field_spec
        return PolynomialRing(CoefficientField.parse(spec), VariableSet(self.variables))

    def ideal(self, name: str, ring: Optional[PolynomialRing] = None) -> Submodule:
        if name not in self.ideals:
            raise UnknownNameError(name)
        ring = ring or self.ring()
        return Submodule.ideal(ring, [parse_polynomial(p, ring) for p in self.ideals[name]])

    def module(self, name: str, ring: Optional[PolynomialRing] = None) -> PresentedModule:
        """A named module, or a named ideal viewed as a module."""
        ring = ring or self.ring()
        if name in self.ideals:
            return PresentedModule.from_submodule(self.ideal(name, ring))
        if name not in self.modules:
            raise UnknownNameError(name)
        rows = self.modules[name]
        free = FreeModule.of_rank(ring, len(rows[0]))
        return PresentedModule.cokernel(free, [free.element([parse_polynomial(p, ring) for p in row]) for row in rows])

    def to_text(self) -> str:
        """Canonical text; parsing it gives back an equal session."""
        lines = [f"ring {self.field_spec} vars={','.join(self.variables)};"]
        for name, gens in self.ideals.items():
            lines.append(f"ideal {name} = {', '.join(gens)};")
        for name, rows in self.modules.items():
            body = ", ".join("[" + ", ".join(row) + "]" for row in rows)
            lines.append(f"module {name} = [{body}];")
        return "\n".join(lines) + "\n"


def _position(text: str, offset: int) -> Tuple[int, int]:
    before = text[:offset]
    line = before.count("\n") + 1
    column = offset - (before.rfind("\n") + 1) + 1
    return line, column


def _strip_comments(text: str) -> str:
    # keep offsets stable by blanking comments instead of removing them
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def _statements(text: str) -> List[Tuple[int, str]]:
    """Split on top-level ``;`` keeping each statement's start offset; the last ``;`` is optional."""
    statements = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise InputSyntaxError(f"Unbalanced {ch!r}", *_position(text, i))
        elif ch == ";" and depth == 0:
            statements.append((start, text[start:i]))
            start = i + 1
    if depth:
        raise InputSyntaxError("Unclosed bracket", *_position(text, len(text)))
    if text[start:].strip():
        statements.append((start, text[start:]))
    return [(offset + len(body) - len(body.lstrip()), body.strip()) for offset, body in statements if body.strip()]


def _split_top_level(body: str, offset: int) -> List[Tuple[int, str]]:
    """Split on commas outside brackets; items keep their absolute offsets."""
    items = []
    depth = 0
    start = 0
    for i, ch in enumerate(body + ","):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            piece = body[start:i]
            lead = len(piece) - len(piece.lstrip())
            items.append((offset + start + lead, piece.strip()))
            start = i + 1
    return items


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.ring: Optional[PolynomialRing] = None
        self.session: Optional[SessionInput] = None

    def error(self, message: str, offset: int) -> InputSyntaxError:
        return InputSyntaxError(message, *_position(self.text, offset))

    def polynomial(self, text: str, offset: int) -> str:
        if not text:
            raise self.error("Missing polynomial", offset)
        try:
            return str(parse_polynomial(text, self.ring))
        except ParseError as e:
            raise self.error(str(e), offset + e.offset)
        except AlgebraError as e:
            raise self.error(str(e), offset)

    def declare_ring(self, body: str, offset: int):
        match = RING_STATEMENT.fullmatch(body)
        if not match:
            raise self.error("Expected 'ring (p=<prime>|QQ) vars=<names>'", offset)
        spec = re.sub(r"\s+", "", match.group("field"))
        try:
            field_ = CoefficientField.parse(spec)
        except FieldError as e:
            raise self.error(str(e), offset + match.start("field"))
        names = tuple(n.strip() for n in match.group("vars").split(","))
        for name in names:
            if not NAME.fullmatch(name):
                raise self.error(f"Bad variable name {name!r}", offset + match.start("vars"))
        try:
            variables = VariableSet(names)
        except ValueError as e:
            raise self.error(str(e), offset + match.start("vars"))
        self.ring = PolynomialRing(field_, variables)
        self.session = SessionInput("QQ" if spec == "QQ" else f"p={field_.modulus}", names)

    def define(self, body: str, offset: int):
        match = DEFINITION.fullmatch(body)
        if not match:
            raise self.error("Expected 'ideal <name> = ...' or 'module <name> = [...]'", offset)
        if self.session is None:
            raise self.error("Declare the ring first", offset)
        name = match.group("name")
        if name in self.session.ideals or name in self.session.modules:
            raise self.error(f"{name!r} is already defined", offset + match.start("name"))
        start = offset + match.start("body")
        text = match.group("body")
        if match.group("kind") == "ideal":
            self.session.ideals[name] = [self.polynomial(p, o) for o, p in _split_top_level(text, start)]
        else:
            self.session.modules[name] = self.rows(text, start)

    def rows(self, text: str, offset: int) -> List[List[str]]:
        stripped = text.strip()
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise self.error("A module is a bracketed list of relation vectors", offset)
        inner_offset = offset + text.index("[") + 1
        rows = []
        for o, row in _split_top_level(stripped[1:-1], inner_offset):
            if not (row.startswith("[") and row.endswith("]")):
                raise self.error("Each relation is a bracketed vector", o)
            rows.append([self.polynomial(p, po) for po, p in _split_top_level(row[1:-1], o + 1)])
        if not rows:
            raise self.error("A module needs at least one relation vector", offset)
        if len({len(r) for r in rows}) != 1:
            raise self.error("Relation vectors must have equal length", offset)
        return rows


def parse_input(text: str) -> SessionInput:
    """
    Parse session text.

    Raises:
        InputSyntaxError: on malformed statements, bad polynomials, unknown
            variables or a non-prime modulus, with the 1-based position
    """
    cleaned = _strip_comments(text)
    reader = _Reader(cleaned)
    statements = _statements(cleaned)
    if not statements:
        raise InputSyntaxError("Empty input", 1, 1)
    first_offset, first = statements[0]
    if not first.startswith("ring"):
        raise reader.error("Input must start with a ring declaration", first_offset)
    reader.declare_ring(first, first_offset)
    for offset, body in statements[1:]:
        reader.define(body, offset)
    session = reader.session
    logger.debug("Parsed session over %s with %d ideals and %d modules",
                 session.field_spec, len(session.ideals), len(session.modules))
    return session
