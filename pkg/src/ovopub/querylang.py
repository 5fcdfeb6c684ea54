"""Line-oriented pattern language for scoped queries.

    # comment
    FROM <http://example.org/collection>
    ?s <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> ?type ?g
    ?s * "a literal"@en

One pattern per line: subject, predicate, object and an optional graph slot
(a missing graph is a wildcard). Terms use N-Quads syntax, ``?name`` is a
variable and ``*`` a wildcard. A trailing ``.`` is allowed.
"""
from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .nquads import ParseError, _LineReader, serialize_term
from .store import WILDCARD, Pattern, Variable
from .terms import Iri

_VARNAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FROM = re.compile(r"FROM\s+", re.IGNORECASE)


class QuerySyntaxError(ParseError):
    pass


class Query(NamedTuple):
    sources: list[Iri]
    patterns: list[Pattern]

    def variables(self) -> list[str]:
        names = []
        for p in self.patterns:
            names += p.variables()
        return list(dict.fromkeys(names))


def _slots(reader: _LineReader) -> list:
    out = []
    while True:
        reader.skip_ws()
        c = reader.peek()
        if c == "" or (c == "." and reader.text[reader.pos + 1:].strip() == ""):
            return out
        if c == "?":
            m = _VARNAME.match(reader.text, reader.pos + 1)
            if m is None:
                reader.fail("malformed variable name")
            out.append(Variable(m.group()))
            reader.pos = m.end()
        elif c == "*":
            out.append(WILDCARD)
            reader.pos += 1
        else:
            out.append(reader.read_term("a term, variable or '*'", literal_ok=True))
            if reader.peek() not in ("", " ", "\t"):
                reader.fail("expected whitespace after term")


def parse_query(text: str) -> Query:
    sources, patterns = [], []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            m = _FROM.match(stripped)
            if m:
                reader = _LineReader(stripped, lineno, strict=True)
                reader.pos = m.end()
                slots = _slots(reader)
                if len(slots) != 1 or not isinstance(slots[0], Iri):
                    raise QuerySyntaxError(lineno, 1, "FROM takes exactly one IRI")
                sources.append(slots[0])
                continue
            slots = _slots(_LineReader(line, lineno, strict=True))
        except QuerySyntaxError:
            raise
        except ParseError as exc:
            raise QuerySyntaxError(exc.line, exc.column, exc.reason) from None
        if len(slots) not in (3, 4):
            raise QuerySyntaxError(lineno, 1, f"pattern needs 3 or 4 slots, got {len(slots)}")
        for pos, slot in zip(("subject", "predicate", "graph"), (slots[0], slots[1], *slots[3:])):
            if not isinstance(slot, (Iri, Variable, type(WILDCARD))):
                raise QuerySyntaxError(lineno, 1, f"{pos} cannot be a literal")
        patterns.append(Pattern(*slots))
    return Query(sources, patterns)


def format_bindings(bindings: Iterable[dict], variables: list[str]) -> str:
    """Tab-separated rows with a header row of variable names."""
    lines = ["\t".join("?" + v for v in variables)]
    for b in bindings:
        lines.append("\t".join(serialize_term(b[v]) if v in b else "" for v in variables))
    return "\n".join(lines) + "\n"
