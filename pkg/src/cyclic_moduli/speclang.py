"""Textual language for quivers, sections and representations.

Grammar (whitespace-insensitive):

    spec    := "cyclic" "t=" int "nodes=(" int ("," int)* ")"
             | "k1" "t=" int "split=(" int ("," int)* ")" "tail=" int
    section := rational "*" point* | "0"
    point   := "(" rational ":" rational ")" ["^" int] | "inf" ["^" int]
    rep     := "phi1=" section (";" "phi<k>=" section)* [";"]

Rationals are "p" or "p/q".  Parse failures report 1-based line and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DegreeMismatch, SpecSemanticError, SpecSyntaxError
from .projline import Divisor, ProjPoint
from .quivers import CyclicQuiver, K1Quiver
from .sections import Section

_SYMBOLS = "=(),:;^*"


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "number" | one of _SYMBOLS | "eof"
    text: str
    value: Optional[Fraction]
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            tokens.append(_Token("ident", word, None, line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "/" and j + 1 < len(text) and text[j + 1].isdigit():
                j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
            raw = text[i:j]
            tokens.append(_Token("number", raw, Fraction(raw), line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, None, line, start_col))
            col += 1
            i += 1
            continue
        raise SpecSyntaxError(f"unexpected character {ch!r}", line, start_col)
    last_line = line
    last_col = max(col - 1, 1)
    tokens.append(_Token("eof", "", None, last_line, last_col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise SpecSyntaxError(message, tok.line, tok.column)

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            if tok.kind == "eof":
                self.fail(f"unexpected end of input: expected {what}", tok)
            self.fail(f"expected {what}, found {tok.text!r}", tok)
        return self.next()

    def expect_ident(self, word: str):
        tok = self.expect("ident", f"'{word}'")
        if tok.text != word:
            raise SpecSyntaxError(f"expected '{word}', found {tok.text!r}", tok.line, tok.column)

    def expect_int(self, what: str) -> Tuple[int, _Token]:
        tok = self.expect("number", what)
        if tok.value.denominator != 1:
            raise SpecSyntaxError(f"{what} must be an integer, found {tok.text}", tok.line, tok.column)
        return int(tok.value), tok

    def int_list(self, what: str) -> Tuple[List[int], _Token]:
        self.expect("(", "'('")
        first, tok0 = self.expect_int(what)
        values = [first]
        while True:
            tok = self.peek()
            if tok.kind == ",":
                self.next()
                value, _ = self.expect_int(what)
                values.append(value)
            elif tok.kind == ")":
                self.next()
                return values, tok0
            else:
                if tok.kind == "eof":
                    self.fail("unexpected end of input: expected ',' or ')'", tok)
                self.fail(f"expected ',' or ')', found {tok.text!r}", tok)

    def at_end(self) -> bool:
        return self.peek().kind == "eof"

    def expect_end(self):
        tok = self.peek()
        if tok.kind != "eof":
            self.fail(f"unexpected trailing input {tok.text!r}", tok)


@dataclass(frozen=True)
class QuiverSpec:
    """Parsed form of the quiver description language."""

    kind: str  # "cyclic" | "k1"
    twist: int
    nodes: Optional[Tuple[int, ...]] = None
    splitting: Optional[Tuple[int, ...]] = None
    tail: Optional[int] = None

    def to_text(self) -> str:
        if self.kind == "cyclic":
            return f"cyclic t={self.twist} nodes=({','.join(map(str, self.nodes))})"
        return (
            f"k1 t={self.twist} split=({','.join(map(str, self.splitting))}) tail={self.tail}"
        )


def parse_spec(text: str) -> QuiverSpec:
    p = _Parser(text)
    head = p.expect("ident", "'cyclic' or 'k1'")
    if head.text not in ("cyclic", "k1"):
        raise SpecSyntaxError(
            f"expected 'cyclic' or 'k1', found {head.text!r}", head.line, head.column
        )
    p.expect_ident("t")
    p.expect("=", "'='")
    twist, twist_tok = p.expect_int("twist degree")
    if twist < 0:
        raise SpecSemanticError("twist degree must be nonnegative", twist_tok.line, twist_tok.column)
    if head.text == "cyclic":
        p.expect_ident("nodes")
        p.expect("=", "'='")
        nodes, tok0 = p.int_list("node degree")
        p.expect_end()
        if len(nodes) < 2:
            raise SpecSemanticError("need at least 2 node degrees", tok0.line, tok0.column)
        return QuiverSpec("cyclic", twist, nodes=tuple(nodes))
    p.expect_ident("split")
    p.expect("=", "'='")
    split, tok0 = p.int_list("splitting degree")
    p.expect_ident("tail")
    p.expect("=", "'='")
    tail, _ = p.expect_int("tail degree")
    p.expect_end()
    if any(split[i] <= split[i + 1] for i in range(len(split) - 1)):
        raise SpecSemanticError(
            f"splitting {tuple(split)} must be strictly decreasing", tok0.line, tok0.column
        )
    return QuiverSpec("k1", twist, splitting=tuple(split), tail=tail)


def cyclic_quiver_of(spec: QuiverSpec) -> CyclicQuiver:
    if spec.kind != "cyclic":
        raise DegreeMismatch("this command needs a cyclic quiver spec")
    return CyclicQuiver(spec.twist, spec.nodes)


def k1_quiver_of(spec: QuiverSpec) -> K1Quiver:
    if spec.kind != "k1":
        raise DegreeMismatch("this command needs a k1 quiver spec")
    return K1Quiver(spec.twist, spec.splitting, spec.tail)


def _parse_point(p: _Parser) -> Tuple[ProjPoint, int]:
    tok = p.peek()
    if tok.kind == "ident" and tok.text == "inf":
        p.next()
        point = ProjPoint.infinity()
    elif tok.kind == "(":
        p.next()
        a = p.expect("number", "rational coordinate")
        p.expect(":", "':'")
        b = p.expect("number", "rational coordinate")
        p.expect(")", "')'")
        if a.value == 0 and b.value == 0:
            raise SpecSemanticError("(0:0) is not a projective point", tok.line, tok.column)
        point = ProjPoint.of(a.value, b.value)
    else:
        if tok.kind == "eof":
            p.fail("unexpected end of input: expected a point or 'inf'", tok)
        p.fail(f"expected a point or 'inf', found {tok.text!r}", tok)
    mult = 1
    if p.peek().kind == "^":
        p.next()
        mult, mtok = p.expect_int("multiplicity")
        if mult < 1:
            raise SpecSemanticError("multiplicity must be positive", mtok.line, mtok.column)
    return point, mult


def _parse_section_body(p: _Parser) -> Tuple[Fraction, List[Tuple[ProjPoint, int]]]:
    tok = p.expect("number", "a rational scale or '0'")
    scale = tok.value
    if scale == 0:
        return Fraction(0), []
    p.expect("*", "'*'")
    points: List[Tuple[ProjPoint, int]] = []
    while p.peek().kind in ("(",) or (p.peek().kind == "ident" and p.peek().text == "inf"):
        points.append(_parse_point(p))
    return scale, points


def parse_section(text: str, ambient_degree: int) -> Section:
    """Parse a section literal; the divisor degree must equal the ambient degree."""
    p = _Parser(text)
    scale, points = _parse_section_body(p)
    p.expect_end()
    return _build_section(scale, points, ambient_degree)


def _build_section(
    scale: Fraction, points: List[Tuple[ProjPoint, int]], ambient_degree: int
) -> Section:
    if scale == 0:
        return Section.zero(ambient_degree)
    divisor = Divisor.of(points)
    if divisor.degree != ambient_degree:
        raise DegreeMismatch(
            f"section divisor has degree {divisor.degree}, ambient degree is {ambient_degree}"
        )
    return Section(ambient_degree, scale, divisor)


def parse_rep_sections(text: str, ambient_degrees: Tuple[int, ...]) -> Tuple[Section, ...]:
    """Parse "phi1=...; phi2=...; ..." against the expected ambient degrees."""
    p = _Parser(text)
    out: List[Section] = []
    for index, ambient in enumerate(ambient_degrees, start=1):
        name = p.expect("ident", f"'phi{index}'")
        if name.text != f"phi{index}":
            raise SpecSyntaxError(
                f"expected 'phi{index}', found {name.text!r}", name.line, name.column
            )
        p.expect("=", "'='")
        scale, points = _parse_section_body(p)
        out.append(_build_section(scale, points, ambient))
        if index < len(ambient_degrees):
            p.expect(";", "';'")
    if p.peek().kind == ";":
        p.next()
    p.expect_end()
    return tuple(out)
