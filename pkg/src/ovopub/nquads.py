"""Strict N-Quads reader and byte-deterministic writer."""
from __future__ import annotations

import re
from typing import Iterable, Optional

from .terms import XSD_STRING, Iri, Literal, Quad, Term, TermError
from .vocab import GENID_BASE

__all__ = [
    "ParseError",
    "parse_nquads",
    "parse_term",
    "serialize_nquads",
    "serialize_quad",
    "serialize_term",
]

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_ESCAPE_OUT = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\r": "\\r", "\t": "\\t"}
_NEEDS_ESCAPE = re.compile(r'["\\\x00-\x1f\x7f]')
_LANGTAG = re.compile(r"[a-zA-Z]+(-[a-zA-Z0-9]+)*")
_BNODE_LABEL = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?")


class ParseError(ValueError):
    """Malformed N-Quads input, located by 1-based line and column."""

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


def _escape_char(m: re.Match) -> str:
    c = m.group()
    return _ESCAPE_OUT.get(c) or f"\\u{ord(c):04X}"


def serialize_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    body = '"' + _NEEDS_ESCAPE.sub(_escape_char, term.lexical) + '"'
    if term.language is not None:
        return f"{body}@{term.language}"
    if term.datatype.value == XSD_STRING:
        return body
    return f"{body}^^<{term.datatype.value}>"


def serialize_quad(quad: Quad) -> str:
    """One N-Quads line for ``quad``, without the trailing newline."""
    s, p, o, g = quad
    if g is None:
        return f"<{s.value}> <{p.value}> {serialize_term(o)} ."
    return f"<{s.value}> <{p.value}> {serialize_term(o)} <{g.value}> ."


def serialize_nquads(quads: Iterable[Quad], sorted: bool = False) -> str:
    lines = [serialize_quad(q) for q in quads]
    if sorted:
        lines.sort()
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


class _LineReader:
    """Cursor over a single line of N-Quads."""

    def __init__(self, text: str, lineno: int, strict: bool):
        self.text = text
        self.pos = 0
        self.lineno = lineno
        self.strict = strict

    def fail(self, reason: str, pos: Optional[int] = None):
        raise ParseError(self.lineno, (self.pos if pos is None else pos) + 1, reason)

    def skip_ws(self):
        text, n = self.text, len(self.text)
        while self.pos < n and text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def read_uchar(self, width: int) -> str:
        digits = self.text[self.pos:self.pos + width]
        if len(digits) != width or not all(c in "0123456789abcdefABCDEF" for c in digits):
            self.fail("bad \\u escape")
        code = int(digits, 16)
        if 0xD800 <= code <= 0xDFFF or code > 0x10FFFF:
            self.fail("escape does not denote a Unicode scalar value")
        self.pos += width
        return chr(code)

    def read_iri(self) -> Iri:
        start = self.pos
        self.pos += 1  # '<'
        out = []
        text, n = self.text, len(self.text)
        while True:
            if self.pos >= n:
                self.fail("unterminated IRI", start)
            c = text[self.pos]
            if c == ">":
                self.pos += 1
                break
            if c == "\\":
                kind = text[self.pos + 1:self.pos + 2]
                if kind not in ("u", "U"):
                    self.fail("bad escape in IRI")
                self.pos += 2
                out.append(self.read_uchar(4 if kind == "u" else 8))
                continue
            out.append(c)
            self.pos += 1
        try:
            return Iri("".join(out))
        except TermError as exc:
            self.fail(f"malformed IRI: {exc}", start)

    def read_bnode(self) -> Iri:
        start = self.pos
        m = _BNODE_LABEL.match(self.text, self.pos + 2)
        if m is None:
            self.fail("malformed blank node label")
        if self.strict:
            self.fail("blank node in strict mode", start)
        self.pos = m.end()
        return Iri(GENID_BASE + m.group())

    def read_literal(self) -> Literal:
        start = self.pos
        self.pos += 1
        out = []
        text, n = self.text, len(self.text)
        while True:
            if self.pos >= n:
                self.fail("unterminated literal", start)
            c = text[self.pos]
            if c == '"':
                self.pos += 1
                break
            if c == "\\":
                kind = text[self.pos + 1:self.pos + 2]
                if kind in ("u", "U"):
                    self.pos += 2
                    out.append(self.read_uchar(4 if kind == "u" else 8))
                    continue
                if kind not in _ECHAR:
                    self.fail("bad escape in literal")
                out.append(_ECHAR[kind])
                self.pos += 2
                continue
            out.append(c)
            self.pos += 1
        lexical = "".join(out)
        datatype = language = None
        if self.peek() == "@":
            m = _LANGTAG.match(text, self.pos + 1)
            if m is None:
                self.fail("malformed language tag")
            language = m.group()
            self.pos = m.end()
        elif text.startswith("^^", self.pos):
            self.pos += 2
            if self.peek() != "<":
                self.fail("datatype must be an IRI")
            datatype = self.read_iri()
        try:
            return Literal(lexical, datatype, language)
        except TermError as exc:
            self.fail(str(exc), start)

    def read_term(self, what: str, literal_ok: bool = False) -> Term:
        self.skip_ws()
        c = self.peek()
        if c == "<":
            return self.read_iri()
        if c == "_" and self.text.startswith("_:", self.pos):
            return self.read_bnode()
        if c == '"' and literal_ok:
            return self.read_literal()
        self.fail(f"expected {what}")


def parse_term(text: str, lineno: int = 1) -> Term:
    """Parse a single N-Quads term (IRI or literal) occupying all of ``text``."""
    reader = _LineReader(text.strip(), lineno, strict=True)
    term = reader.read_term("a term", literal_ok=True)
    reader.skip_ws()
    if not reader.at_end():
        reader.fail("trailing characters after term")
    return term


def _parse_line(text: str, lineno: int, strict: bool) -> Quad:
    r = _LineReader(text, lineno, strict)
    s = r.read_term("subject IRI")
    r.skip_ws()
    if r.peek() != "<":
        r.fail("predicate must be an IRI")
    p = r.read_iri()
    o = r.read_term("object term", literal_ok=True)
    r.skip_ws()
    g = None
    if r.peek() != ".":
        g = r.read_term("graph IRI or '.'")
        r.skip_ws()
    if r.peek() != ".":
        r.fail("expected '.'")
    r.pos += 1
    r.skip_ws()
    if not r.at_end():
        r.fail("trailing characters after '.'")
    return Quad(s, p, o, g)


def parse_nquads(text: str, strict: bool = True) -> list[Quad]:
    """Parse N-Quads text into quads, in document order.

    Three-term lines land in the default graph (``graph=None``). Lines whose
    first non-blank character is ``#`` are comments. With ``strict`` (the
    default) blank nodes are a :class:`ParseError`; otherwise each label is
    mapped to a well-known skolem IRI.
    """
    quads = []
    # Literal bodies may hold U+2028 and friends; only LF separates lines.
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        stripped = line.strip(" \t")
        if not stripped or stripped.startswith("#"):
            continue
        quads.append(_parse_line(line, lineno, strict))
    return quads
