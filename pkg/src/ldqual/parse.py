"""Parsers, serializers and format detection for line-oriented RDF syntaxes.

Supported: N-Triples and N-Quads per the W3C grammars, and a Turtle subset
(prefix directives, the `a` keyword, `;` and `,` abbreviations, numeric and
boolean literal shorthands). Anonymous blank nodes `[]`, collections `()`,
multi-line strings and `@base` are rejected with positioned diagnostics.
RDF/XML is recognized by detection but not parsed.

Parsing is lenient by default: malformed statements are skipped and reported
as diagnostics with 1-based line and column numbers plus a stable code. In
strict mode the first error aborts with no partial graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EncodingError, ParseError, UnsupportedFormatError
from .rdf import BlankNode, Dataset, Graph, Iri, Literal, StructuralError, Term, Triple
from .vocab import RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER, XSD_STRING


@dataclass(frozen=True)
class FormatId:
    """Identity of a concrete serialization format."""

    id: str
    media_type: str


NTRIPLES = FormatId("ntriples", "application/n-triples")
NQUADS = FormatId("nquads", "application/n-quads")
TURTLE = FormatId("turtle", "text/turtle")
RDFXML_UNSUPPORTED = FormatId("rdfxml-unsupported", "application/rdf+xml")
UNKNOWN = FormatId("unknown", "application/octet-stream")

FORMATS = {f.id: f for f in (NTRIPLES, NQUADS, TURTLE, RDFXML_UNSUPPORTED, UNKNOWN)}


def format_by_id(format_id: str) -> FormatId:
    fmt = FORMATS.get(format_id)
    if fmt is None:
        raise UnsupportedFormatError(f"unknown format id: {format_id!r}")
    return fmt


@dataclass(frozen=True)
class ParseDiagnostic:
    """One positioned parser finding. Line and column are 1-based."""

    severity: str
    line: int
    column: int
    message: str
    code: str


@dataclass(frozen=True)
class SerializationStats:
    byte_count: int
    triple_count: int
    format: FormatId


# --- shared lexical machinery ---------------------------------------------

_IRIREF = re.compile(
    r"<((?:[^\x00-\x20<>\"{}|^`\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*)>"
)
_BNODE = re.compile(r"_:([A-Za-z_0-9](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)")
_STRING = re.compile(r'"((?:[^"\\\n\r]|\\.)*)"')
_LANGTAG = re.compile(r"@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*)")
_WS = re.compile(r"[ \t]+")

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


class _LineError(Exception):
    """Internal: a scan error at a 0-based offset within the current line."""

    def __init__(self, pos: int, code: str, message: str):
        self.pos = pos
        self.code = code
        self.message = message


def _unescape(raw: str, base: int, allow_echar: bool) -> str:
    """Resolve \\-escapes; base is the offset of raw within its line."""
    if "\\" not in raw:
        return raw
    out = []
    i = 0
    n = len(raw)
    while i < n:
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= n:
            raise _LineError(base + i, "bad-escape", "dangling backslash")
        nxt = raw[i + 1]
        if allow_echar and nxt in _ESCAPES:
            out.append(_ESCAPES[nxt])
            i += 2
        elif nxt == "u":
            hexes = raw[i + 2 : i + 6]
            if len(hexes) != 4 or not _HEX.match(hexes):
                raise _LineError(base + i, "bad-escape", "malformed \\u escape")
            out.append(chr(int(hexes, 16)))
            i += 6
        elif nxt == "U":
            hexes = raw[i + 2 : i + 10]
            if len(hexes) != 8 or not _HEX.match(hexes):
                raise _LineError(base + i, "bad-escape", "malformed \\U escape")
            value = int(hexes, 16)
            if value > 0x10FFFF:
                raise _LineError(base + i, "bad-escape", "code point out of range")
            out.append(chr(value))
            i += 10
        else:
            raise _LineError(base + i, "bad-escape", f"invalid escape \\{nxt}")
    return "".join(out)


_HEX = re.compile(r"^[0-9A-Fa-f]+$")


class _Interner:
    """Per-parse term cache: repeated IRIs and literals share one object."""

    __slots__ = ("iris", "bnodes", "literals")

    def __init__(self):
        self.iris: dict[str, Iri] = {}
        self.bnodes: dict[str, BlankNode] = {}
        self.literals: dict[tuple, Literal] = {}

    def iri(self, value: str) -> Iri:
        term = self.iris.get(value)
        if term is None:
            term = Iri(value)
            self.iris[value] = term
        return term

    def bnode(self, label: str) -> BlankNode:
        term = self.bnodes.get(label)
        if term is None:
            term = BlankNode(label)
            self.bnodes[label] = term
        return term

    def literal(self, lexical: str, datatype: str | None, language: str | None) -> Literal:
        key = (lexical, datatype, language)
        term = self.literals.get(key)
        if term is None:
            term = Literal(lexical, datatype, language)
            self.literals[key] = term
        return term


# --- N-Triples / N-Quads ----------------------------------------------------


def _scan_iri(line: str, pos: int, interner: _Interner) -> tuple[Iri, int]:
    m = _IRIREF.match(line, pos)
    if not m:
        raise _LineError(pos, "bad-iri", "malformed IRI reference")
    raw = m.group(1)
    value = _unescape(raw, pos + 1, allow_echar=False)
    try:
        term = interner.iri(value)
    except StructuralError as exc:
        raise _LineError(pos, "bad-iri", str(exc)) from None
    return term, m.end()


def _scan_literal(line: str, pos: int, interner: _Interner) -> tuple[Literal, int]:
    m = _STRING.match(line, pos)
    if not m:
        raise _LineError(pos, "bad-string", "malformed string literal")
    lexical = _unescape(m.group(1), pos + 1, allow_echar=True)
    end = m.end()
    if line.startswith("^^", end):
        dt, end = _scan_iri(line, end + 2, interner)
        try:
            return interner.literal(lexical, dt.value, None), end
        except StructuralError as exc:
            raise _LineError(pos, "bad-literal", str(exc)) from None
    if line.startswith("@", end):
        lm = _LANGTAG.match(line, end)
        if not lm:
            raise _LineError(end, "bad-langtag", "malformed language tag")
        return interner.literal(lexical, None, lm.group(1)), lm.end()
    return interner.literal(lexical, None, None), end


def _scan_term(line: str, pos: int, role: str, interner: _Interner):
    what = role.replace("-", " ")
    if pos >= len(line):
        raise _LineError(pos, f"bad-{role}", f"unexpected end of line, expected {what}")
    ch = line[pos]
    if ch == "<":
        return _scan_iri(line, pos, interner)
    if ch == "_":
        if role == "predicate":
            raise _LineError(pos, "bad-predicate", "blank node not allowed as predicate")
        m = _BNODE.match(line, pos)
        if not m:
            raise _LineError(pos, f"bad-{role}", "malformed blank node label")
        return interner.bnode(m.group(1)), m.end()
    if ch == '"':
        if role != "object":
            raise _LineError(pos, f"bad-{role}", f"literal not allowed as {what}")
        return _scan_literal(line, pos, interner)
    raise _LineError(pos, f"bad-{role}", f"expected a term, found {ch!r}")


def _skip_ws(line: str, pos: int) -> int:
    m = _WS.match(line, pos)
    return m.end() if m else pos


def _parse_statement_line(line: str, quads: bool, interner: _Interner):
    """One N-Triples/N-Quads statement, or None for blank and comment lines."""
    pos = _skip_ws(line, 0)
    if pos >= len(line) or line[pos] == "#":
        return None
    subject, pos = _scan_term(line, pos, "subject", interner)
    pos = _skip_ws(line, pos)
    predicate, pos = _scan_term(line, pos, "predicate", interner)
    pos = _skip_ws(line, pos)
    obj, pos = _scan_term(line, pos, "object", interner)
    pos = _skip_ws(line, pos)
    graph_name = None
    if quads and pos < len(line) and line[pos] in "<_":
        graph_name, pos = _scan_term(line, pos, "graph-label", interner)
        pos = _skip_ws(line, pos)
    if pos >= len(line) or line[pos] != ".":
        raise _LineError(pos, "expected-dot", "expected '.' at end of statement")
    pos = _skip_ws(line, pos + 1)
    if pos < len(line) and line[pos] != "#":
        raise _LineError(pos, "trailing-content", "unexpected content after '.'")
    return Triple(subject, predicate, obj), graph_name


def _decode(data: bytes) -> str:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(exc.start) from None
    if text.startswith("\ufeff"):
        text = text[1:]
    return text


def _parse_lines(text: str, quads: bool, strict: bool):
    dataset = Dataset()
    diags: list[ParseDiagnostic] = []
    interner = _Interner()
    default = dataset.default_graph
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        try:
            parsed = _parse_statement_line(line, quads, interner)
        except _LineError as err:
            diag = ParseDiagnostic("error", lineno, err.pos + 1, err.message, err.code)
            diags.append(diag)
            if strict:
                raise ParseError(diag)
            continue
        if parsed is None:
            continue
        triple, graph_name = parsed
        if graph_name is None:
            default.add(triple)
        else:
            dataset.graph(graph_name).add(triple)
    return dataset, diags


# --- Turtle subset ----------------------------------------------------------

_TT_TOKEN = re.compile(
    r"""
      (?P<ws>[ \t]+)
    | (?P<comment>\#.*)
    | (?P<iri><(?:[^\x00-\x20<>"{}|^`\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*>)
    | (?P<longstring>\"{3})
    | (?P<string>"(?:[^"\\\n\r]|\\.)*")
    | (?P<bnode>_:[A-Za-z_0-9](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)
    | (?P<atword>@[a-zA-Z]+(?:-[a-zA-Z0-9]+)*)
    | (?P<caret>\^\^)
    | (?P<number>[+-]?(?:\d+\.\d+(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+))
    | (?P<pname>(?:[A-Za-z_][A-Za-z0-9_.\-]*)?:[A-Za-z0-9_:%.\-]*)
    | (?P<word>[A-Za-z][A-Za-z0-9_\-]*)
    | (?P<punct>[;,.\[\]()])
    """,
    re.VERBOSE,
)

_PUNCT_KINDS = {";": "semi", ",": "comma", ".": "dot", "[": "lbracket", "]": "rbracket", "(": "lparen", ")": "rparen"}


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"_Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


class _Recover(Exception):
    """Internal: abandon the current Turtle statement and resync."""


class _TurtleLexer:
    """Tokenizes line by line; lexical errors are reported through `emit`."""

    def __init__(self, text: str, emit):
        self._lines = text.split("\n")
        self._li = 0
        self._pos = 0
        self._emit = emit
        self._peeked: _Token | None = None

    def peek(self) -> _Token:
        if self._peeked is None:
            self._peeked = self._advance()
        return self._peeked

    def next(self) -> _Token:
        tok = self.peek()
        self._peeked = None
        return tok

    def _advance(self) -> _Token:
        while self._li < len(self._lines):
            line = self._lines[self._li]
            if line.endswith("\r"):
                line = line[:-1]
            if self._pos >= len(line):
                self._li += 1
                self._pos = 0
                continue
            m = _TT_TOKEN.match(line, self._pos)
            lineno = self._li + 1
            if m is None:
                col = self._pos + 1
                rest = line[self._pos :]
                self._emit(lineno, col, "bad-token", f"unexpected character {line[self._pos]!r}")
                self._li += 1
                self._pos = 0
                return _Token("error", rest, lineno, col)
            kind = m.lastgroup
            value = m.group()
            self._pos = m.end()
            if kind in ("ws", "comment"):
                if kind == "comment":
                    self._li += 1
                    self._pos = 0
                continue
            col = m.start() + 1
            if kind == "longstring":
                self._emit(lineno, col, "unsupported-syntax", "multi-line string literals are not supported")
                self._li += 1
                self._pos = 0
                return _Token("error", value, lineno, col)
            if kind == "punct":
                return _Token(_PUNCT_KINDS[value], value, lineno, col)
            if kind in ("pname", "number"):
                # A trailing dot belongs to the statement, not the token.
                while value.endswith("."):
                    value = value[:-1]
                    self._pos -= 1
                if not value:
                    return _Token("dot", ".", lineno, col)
            return _Token(kind, value, lineno, col)
        return _Token("eof", "", len(self._lines), 1)

    def sync_to_dot(self):
        """Consume tokens through the next top-level '.' (or EOF)."""
        while True:
            tok = self.next()
            if tok.kind in ("dot", "eof"):
                return


class _TurtleParser:
    def __init__(self, text: str, strict: bool):
        self.diags: list[ParseDiagnostic] = []
        self.strict = strict
        self.lexer = _TurtleLexer(text, self._lex_emit)
        self.prefixes: dict[str, str] = {}
        self.interner = _Interner()
        self.graph = Graph()

    def _lex_emit(self, line, col, code, message):
        diag = ParseDiagnostic("error", line, col, message, code)
        self.diags.append(diag)
        if self.strict:
            raise ParseError(diag)

    def _error(self, tok: _Token, code: str, message: str):
        diag = ParseDiagnostic("error", tok.line, tok.col, message, code)
        self.diags.append(diag)
        if self.strict:
            raise ParseError(diag)
        raise _Recover

    def parse(self) -> Dataset:
        while True:
            tok = self.lexer.peek()
            if tok.kind == "eof":
                break
            try:
                if tok.kind == "atword" and tok.value in ("@prefix", "@base"):
                    self._directive(sparql_style=False)
                elif tok.kind == "word" and tok.value.lower() in ("prefix", "base"):
                    self._directive(sparql_style=True)
                else:
                    self._statement()
            except _Recover:
                self.lexer.sync_to_dot()
        return Dataset(self.graph)

    def _directive(self, sparql_style: bool):
        kw = self.lexer.next()
        keyword = kw.value.lstrip("@").lower()
        if keyword == "base":
            self._error(kw, "unsupported-syntax", "base directives are not supported")
        ns = self.lexer.next()
        if ns.kind != "pname" or not ns.value.endswith(":"):
            self._error(ns, "bad-directive", "expected a prefix name ending in ':'")
        iri_tok = self.lexer.next()
        if iri_tok.kind != "iri":
            self._error(iri_tok, "bad-directive", "expected an IRI after the prefix name")
        term = self._iri_from_token(iri_tok)
        if not sparql_style:
            dot = self.lexer.next()
            if dot.kind != "dot":
                self._error(dot, "expected-dot", "expected '.' after @prefix directive")
        self.prefixes[ns.value[:-1]] = term.value

    def _statement(self):
        buffer: list[Triple] = []
        subject = self._subject()
        self._predicate_object_list(subject, buffer)
        self.graph.update(buffer)

    def _subject(self) -> Term:
        tok = self.lexer.next()
        if tok.kind == "iri":
            return self._iri_from_token(tok)
        if tok.kind == "pname":
            return self._resolve_pname(tok)
        if tok.kind == "bnode":
            return self.interner.bnode(tok.value[2:])
        if tok.kind == "lbracket":
            self._error(tok, "unsupported-syntax", "anonymous blank nodes are not supported")
        if tok.kind in ("string", "number"):
            self._error(tok, "bad-subject", "literal not allowed as subject")
        self._error(tok, "bad-subject", f"expected a subject term, found {tok.value!r}")

    def _predicate_object_list(self, subject: Term, buffer: list[Triple]):
        while True:
            verb = self._verb()
            self._object_list(subject, verb, buffer)
            tok = self.lexer.next()
            if tok.kind == "dot":
                return
            if tok.kind == "semi":
                # Tolerate repeated and trailing semicolons.
                while self.lexer.peek().kind == "semi":
                    self.lexer.next()
                if self.lexer.peek().kind == "dot":
                    self.lexer.next()
                    return
                continue
            self._error(tok, "expected-dot", "expected '.', ';' or ',' in predicate-object list")

    def _verb(self) -> Iri:
        tok = self.lexer.next()
        if tok.kind == "word" and tok.value == "a":
            return self.interner.iri(RDF_TYPE)
        if tok.kind == "iri":
            return self._iri_from_token(tok)
        if tok.kind == "pname":
            term = self._resolve_pname(tok)
            return term
        if tok.kind == "bnode":
            self._error(tok, "bad-predicate", "blank node not allowed as predicate")
        self._error(tok, "bad-predicate", f"expected a predicate, found {tok.value!r}")

    def _object_list(self, subject: Term, verb: Iri, buffer: list[Triple]):
        while True:
            obj = self._object()
            buffer.append(Triple(subject, verb, obj))
            if self.lexer.peek().kind == "comma":
                self.lexer.next()
                continue
            return

    def _object(self) -> Term:
        tok = self.lexer.next()
        if tok.kind == "iri":
            return self._iri_from_token(tok)
        if tok.kind == "pname":
            return self._resolve_pname(tok)
        if tok.kind == "bnode":
            return self.interner.bnode(tok.value[2:])
        if tok.kind == "string":
            return self._literal(tok)
        if tok.kind == "number":
            return self.interner.literal(tok.value, _number_datatype(tok.value), None)
        if tok.kind == "word" and tok.value in ("true", "false"):
            return self.interner.literal(tok.value, XSD_BOOLEAN, None)
        if tok.kind == "lbracket":
            self._error(tok, "unsupported-syntax", "anonymous blank nodes are not supported")
        if tok.kind == "lparen":
            self._error(tok, "unsupported-syntax", "collections are not supported")
        self._error(tok, "bad-object", f"expected an object term, found {tok.value!r}")

    def _literal(self, tok: _Token) -> Literal:
        raw = tok.value[1:-1]
        try:
            lexical = _unescape(raw, tok.col, allow_echar=True)
        except _LineError as err:
            self._error(_Token("string", raw, tok.line, err.pos + 1), err.code, err.message)
        nxt = self.lexer.peek()
        if nxt.kind == "atword":
            self.lexer.next()
            return self.interner.literal(lexical, None, nxt.value[1:])
        if nxt.kind == "caret":
            self.lexer.next()
            dt_tok = self.lexer.next()
            if dt_tok.kind == "iri":
                dt = self._iri_from_token(dt_tok)
            elif dt_tok.kind == "pname":
                dt = self._resolve_pname(dt_tok)
            else:
                self._error(dt_tok, "bad-literal", "expected a datatype IRI after '^^'")
            try:
                return self.interner.literal(lexical, dt.value, None)
            except StructuralError as exc:
                self._error(dt_tok, "bad-literal", str(exc))
        return self.interner.literal(lexical, None, None)

    def _iri_from_token(self, tok: _Token) -> Iri:
        raw = tok.value[1:-1]
        try:
            value = _unescape(raw, tok.col, allow_echar=False)
            return self.interner.iri(value)
        except _LineError as err:
            self._error(_Token("iri", raw, tok.line, err.pos + 1), err.code, err.message)
        except StructuralError as exc:
            self._error(tok, "bad-iri", str(exc))

    def _resolve_pname(self, tok: _Token) -> Iri:
        prefix, _, local = tok.value.partition(":")
        ns = self.prefixes.get(prefix)
        if ns is None:
            self._error(tok, "unknown-prefix", f"unknown prefix {prefix + ':'!r}")
        try:
            return self.interner.iri(ns + local)
        except StructuralError as exc:
            self._error(tok, "bad-iri", str(exc))


def _number_datatype(lexical: str) -> str:
    if "e" in lexical or "E" in lexical:
        return XSD_DOUBLE
    if "." in lexical:
        return XSD_DECIMAL
    return XSD_INTEGER


def _parse_turtle(text: str, strict: bool):
    parser = _TurtleParser(text, strict)
    dataset = parser.parse()
    return dataset, parser.diags


# --- public API -------------------------------------------------------------


def parse(data: bytes, fmt: FormatId, *, strict: bool = False):
    """Parse bytes into a Dataset plus diagnostics.

    Lenient mode recovers per statement; strict mode raises ParseError on the
    first error. Undecodable input raises EncodingError in both modes.
    """
    if fmt.id in ("rdfxml-unsupported", "unknown"):
        raise UnsupportedFormatError(f"cannot parse format {fmt.id!r}")
    text = _decode(data)
    if fmt.id == "ntriples":
        return _parse_lines(text, quads=False, strict=strict)
    if fmt.id == "nquads":
        return _parse_lines(text, quads=True, strict=strict)
    if fmt.id == "turtle":
        return _parse_turtle(text, strict)
    raise UnsupportedFormatError(f"cannot parse format {fmt.id!r}")


_LIT_ESC = {
    ord("\\"): "\\\\",
    ord('"'): '\\"',
    ord("\n"): "\\n",
    ord("\r"): "\\r",
    ord("\t"): "\\t",
    ord("\b"): "\\b",
    ord("\f"): "\\f",
}
for _c in range(0x20):
    _LIT_ESC.setdefault(_c, f"\\u{_c:04X}")

_IRI_ESC = {_c: f"\\u{_c:04X}" for _c in range(0x21)}
for _c in '<>"{}|^`\\':
    _IRI_ESC[ord(_c)] = f"\\u{ord(_c):04X}"


def term_ntform(term: Term) -> str:
    """The canonical N-Triples spelling of a term."""
    if isinstance(term, Iri):
        return f"<{term.value.translate(_IRI_ESC)}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    if isinstance(term, Literal):
        body = f'"{term.lexical.translate(_LIT_ESC)}"'
        if term.language is not None:
            return f"{body}@{term.language}"
        if term.datatype != XSD_STRING:
            return f"{body}^^<{term.datatype.translate(_IRI_ESC)}>"
        return body
    raise StructuralError(f"not a serializable term: {term!r}")


def _statement_lines(graph: Graph, graph_suffix: str = "") -> list[str]:
    lines = []
    for t in graph:
        s = term_ntform(t.subject)
        p = term_ntform(t.predicate)
        o = term_ntform(t.object)
        lines.append(f"{s} {p} {o}{graph_suffix} .")
    return lines


def serialize(dataset: Dataset, fmt: FormatId) -> bytes:
    """Serialize deterministically: UTF-8, LF line ends, one statement per
    line, statements sorted by subject, predicate, object (then graph)."""
    if fmt.id == "ntriples":
        if any(len(g) for g in dataset.named_graphs.values()):
            raise UnsupportedFormatError("dataset has named graphs; serialize as nquads")
        lines = _statement_lines(dataset.default_graph)
        lines.sort()
        return _join(lines)
    if fmt.id == "nquads":
        keyed: list[tuple[str, str]] = []
        for line in _statement_lines(dataset.default_graph):
            keyed.append(("", line))
        for name, g in dataset.named_graphs.items():
            suffix = " " + term_ntform(name)
            for line in _statement_lines(g, suffix):
                keyed.append((term_ntform(name), line))
        keyed.sort(key=lambda pair: (pair[1].rsplit(" ", 2)[0], pair[0]))
        return _join([line for _, line in keyed])
    raise UnsupportedFormatError(f"cannot serialize format {fmt.id!r}")


def _join(lines: list[str]) -> bytes:
    if not lines:
        return b""
    return ("\n".join(lines) + "\n").encode("utf-8")


_EXT_HINTS = {
    "nt": NTRIPLES,
    "ntriples": NTRIPLES,
    "nq": NQUADS,
    "nquads": NQUADS,
    "ttl": TURTLE,
    "turtle": TURTLE,
    "rdf": RDFXML_UNSUPPORTED,
    "owl": RDFXML_UNSUPPORTED,
    "xml": RDFXML_UNSUPPORTED,
}

_SPARQL_DIRECTIVE = re.compile(r"^(?:PREFIX|BASE)\b", re.IGNORECASE)


def _sniff(data: bytes) -> FormatId | None:
    head = data[:4096].decode("utf-8", errors="replace")
    for line in head.split("\n"):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("<?xml") or line.startswith("<!DOCTYPE") or line.startswith("<rdf:"):
            return RDFXML_UNSUPPORTED
        if line.startswith("@prefix") or line.startswith("@base") or _SPARQL_DIRECTIVE.match(line):
            return TURTLE
        try:
            parsed = _parse_statement_line(line, quads=True, interner=_Interner())
        except _LineError:
            return None
        if parsed is None:
            continue
        return NQUADS if parsed[1] is not None else NTRIPLES
    return None


# Which sniffed formats an extension hint is consistent with: N-Triples
# statements are valid Turtle and valid N-Quads, so those hints stand.
_HINT_COMPATIBLE = {
    "ntriples": {"ntriples"},
    "nquads": {"nquads", "ntriples"},
    "turtle": {"turtle", "ntriples"},
    "rdfxml-unsupported": {"rdfxml-unsupported"},
}


def detect_format(data: bytes, filename_hint: str | None = None) -> FormatId:
    """Detect a format from content, honoring a consistent filename hint.

    The extension hint wins whenever the sniffed content does not contradict
    it; otherwise the sniffed format wins; with neither signal the result is
    the unknown format.
    """
    hint = None
    if filename_hint and "." in filename_hint:
        hint = _EXT_HINTS.get(filename_hint.rsplit(".", 1)[-1].lower())
    sniffed = _sniff(data)
    if hint is not None:
        if sniffed is None or sniffed.id in _HINT_COMPATIBLE[hint.id]:
            return hint
    if sniffed is not None:
        return sniffed
    return UNKNOWN


def stats(data: bytes, fmt: FormatId) -> SerializationStats:
    """Byte and statement counts for one serialized document (strict parse)."""
    dataset, _ = parse(data, fmt, strict=True)
    return SerializationStats(byte_count=len(data), triple_count=dataset.total_triples(), format=fmt)
