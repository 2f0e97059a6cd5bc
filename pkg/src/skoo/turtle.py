"""Turtle reader/writer for the subset every shipped graph uses.

Supported: @prefix directives, prefixed names, absolute IRIs in angle
brackets, the `a` keyword, object lists (comma), predicate-object lists
(semicolon), quoted string literals with the usual escapes, and # comments.
Not supported (by design): blank nodes, collections, datatyped or
language-tagged literals, @base, multi-line strings.

`rdfs:subClassOf`, `owl:equivalentClass`, `owl:disjointWith`, `rdfs:domain`
and `rdfs:range` statements become TBox axioms; `a`/`rdf:type` with
`owl:Class` or `owl:ObjectProperty` populates declarations and with any
other class becomes a TypeOf assertion; every other predicate becomes a
Relation assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import (
    OWL_CLASS,
    OWL_DISJOINT_WITH,
    OWL_EQUIVALENT_CLASS,
    OWL_OBJECT_PROPERTY,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    Assertion,
    AssertionKind,
    Axiom,
    AxiomKind,
    Iri,
    Ontology,
    PrefixError,
    PrefixMap,
    SkooError,
    is_valid_iri,
    relation,
    type_of,
)


@dataclass(frozen=True, slots=True)
class ParseDiagnostic:
    severity: str  # "error" | "warning"
    line: int  # 1-based
    column: int  # 1-based
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class TurtleParseError(SkooError):
    """Raised by strict parsing; carries every diagnostic collected."""

    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


class _Tok(Enum):
    PREFIX = "@prefix"
    IRIREF = "iriref"
    PNAME = "pname"
    A = "a"
    STRING = "string"
    DOT = "."
    SEMI = ";"
    COMMA = ","
    EOF = "eof"


@dataclass(frozen=True, slots=True)
class _Token:
    kind: _Tok
    value: str
    line: int
    column: int


_PNAME_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-")
_ESCAPES = {'"': '"', "'": "'", "\\": "\\", "n": "\n", "r": "\r", "t": "\t"}
_UNESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


class _LexError(Exception):
    def __init__(self, line: int, column: int, message: str):
        self.diagnostic = ParseDiagnostic("error", line, column, message)
        super().__init__(message)


def _tokenize(text: str) -> tuple[list[_Token], ParseDiagnostic | None]:
    """Scan the whole input. On a lexical error, every token produced so far
    is kept (so earlier statements still parse) and scanning stops."""
    tokens: list[_Token] = []
    try:
        line, col = _scan(text, tokens)
        error = None
    except _LexError as exc:
        error = exc.diagnostic
        line, col = error.line, error.column
    tokens.append(_Token(_Tok.EOF, "", line, col))
    return tokens, error


def _scan(text: str, tokens: list[_Token]) -> tuple[int, int]:
    if text.startswith("﻿"):
        text = text[1:]
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(k: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            advance()
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                advance()
            continue
        start_line, start_col = line, col
        if c == "@":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word != "@prefix":
                raise _LexError(start_line, start_col, f"unsupported directive {word!r}")
            tokens.append(_Token(_Tok.PREFIX, word, start_line, start_col))
            advance(j - i)
            continue
        if c == "<":
            j = text.find(">", i + 1)
            if j < 0 or "\n" in text[i:j]:
                raise _LexError(start_line, start_col, "unterminated IRI reference")
            value = text[i + 1 : j]
            tokens.append(_Token(_Tok.IRIREF, value, start_line, start_col))
            advance(j + 1 - i)
            continue
        if c in "\"'":
            quote = c
            j = i + 1
            chars: list[str] = []
            while True:
                if j >= n or text[j] == "\n":
                    raise _LexError(start_line, start_col, "unterminated string literal")
                if text[j] == "\\":
                    if j + 1 >= n or text[j + 1] not in _ESCAPES:
                        raise _LexError(start_line, start_col, "unsupported escape sequence")
                    chars.append(_ESCAPES[text[j + 1]])
                    j += 2
                    continue
                if text[j] == quote:
                    break
                chars.append(text[j])
                j += 1
            tokens.append(_Token(_Tok.STRING, "".join(chars), start_line, start_col))
            advance(j + 1 - i)
            continue
        if c == ".":
            # Distinguish the statement terminator from a dot inside a pname.
            tokens.append(_Token(_Tok.DOT, ".", start_line, start_col))
            advance()
            continue
        if c == ";":
            tokens.append(_Token(_Tok.SEMI, ";", start_line, start_col))
            advance()
            continue
        if c == ",":
            tokens.append(_Token(_Tok.COMMA, ",", start_line, start_col))
            advance()
            continue
        if c in _PNAME_CHARS or c == ":":
            j = i
            while j < n and text[j] in _PNAME_CHARS or (j < n and text[j] == ":"):
                j += 1
            word = text[i:j]
            # A trailing dot ends the statement, it is not part of the name.
            while word.endswith("."):
                word = word[:-1]
                j -= 1
            if word == "a":
                tokens.append(_Token(_Tok.A, word, start_line, start_col))
            elif ":" in word:
                tokens.append(_Token(_Tok.PNAME, word, start_line, start_col))
            else:
                raise _LexError(start_line, start_col, f"unexpected token {word!r}")
            advance(j - i)
            continue
        raise _LexError(start_line, start_col, f"unexpected character {c!r}")
    return line, col


@dataclass(frozen=True, slots=True)
class _RawTriple:
    subject: Iri
    predicate: Iri
    object: Iri | str  # str means a literal
    line: int
    column: int


class _StatementError(Exception):
    def __init__(self, token: _Token, message: str):
        self.diagnostic = ParseDiagnostic("error", token.line, token.column, message)
        # When the failing token was the terminator itself, recovery is
        # already at a statement boundary and must not skip further.
        self.at_boundary = token.kind in (_Tok.DOT, _Tok.EOF)
        super().__init__(message)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.prefixes = PrefixMap()
        self.triples: list[_RawTriple] = []
        self.diagnostics: list[ParseDiagnostic] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind is not _Tok.EOF:
            self.pos += 1
        return tok

    def expect(self, kind: _Tok) -> _Token:
        tok = self.take()
        if tok.kind is not kind:
            raise _StatementError(tok, f"expected {kind.value!r}, found {tok.value!r}")
        return tok

    def skip_statement(self) -> None:
        while self.peek().kind not in (_Tok.DOT, _Tok.EOF):
            self.take()
        if self.peek().kind is _Tok.DOT:
            self.take()

    def resolve_iri(self, tok: _Token) -> Iri:
        if tok.kind is _Tok.IRIREF:
            if not is_valid_iri(tok.value):
                raise _StatementError(tok, f"malformed IRI <{tok.value}>")
            return Iri(tok.value)
        if tok.kind is _Tok.PNAME:
            try:
                return self.prefixes.expand(tok.value)
            except PrefixError as exc:
                raise _StatementError(tok, str(exc)) from exc
        raise _StatementError(tok, f"expected an IRI, found {tok.value!r}")

    def parse_document(self, tolerant: bool) -> None:
        while self.peek().kind is not _Tok.EOF:
            try:
                if self.peek().kind is _Tok.PREFIX:
                    self.parse_prefix()
                else:
                    self.parse_triples()
            except _StatementError as exc:
                self.diagnostics.append(exc.diagnostic)
                if not tolerant:
                    return
                if not exc.at_boundary:
                    self.skip_statement()

    def parse_prefix(self) -> None:
        self.expect(_Tok.PREFIX)
        name_tok = self.expect(_Tok.PNAME)
        if not name_tok.value.endswith(":") or name_tok.value.count(":") != 1:
            raise _StatementError(name_tok, f"bad prefix label {name_tok.value!r}")
        label = name_tok.value[:-1]
        ns_tok = self.expect(_Tok.IRIREF)
        if not is_valid_iri(ns_tok.value):
            raise _StatementError(ns_tok, f"malformed namespace IRI <{ns_tok.value}>")
        self.expect(_Tok.DOT)
        try:
            self.prefixes = self.prefixes.bound(label, ns_tok.value)
        except PrefixError as exc:
            raise _StatementError(name_tok, str(exc)) from exc

    def parse_triples(self) -> None:
        subj_tok = self.take()
        subject = self.resolve_iri(subj_tok)
        while True:
            verb_tok = self.take()
            if verb_tok.kind is _Tok.A:
                predicate = RDF_TYPE
            else:
                predicate = self.resolve_iri(verb_tok)
            while True:
                obj_tok = self.take()
                if obj_tok.kind is _Tok.STRING:
                    obj: Iri | str = obj_tok.value
                else:
                    obj = self.resolve_iri(obj_tok)
                self.triples.append(
                    _RawTriple(subject, predicate, obj, obj_tok.line, obj_tok.column)
                )
                if self.peek().kind is _Tok.COMMA:
                    self.take()
                    continue
                break
            nxt = self.take()
            if nxt.kind is _Tok.SEMI:
                if self.peek().kind is _Tok.DOT:  # tolerate a trailing semicolon
                    self.take()
                    return
                continue
            if nxt.kind is _Tok.DOT:
                return
            raise _StatementError(nxt, f"expected '.', ';' or ',', found {nxt.value!r}")


_AXIOM_PREDICATES = {
    RDFS_SUBCLASSOF: AxiomKind.SUB_CLASS_OF,
    OWL_EQUIVALENT_CLASS: AxiomKind.EQUIVALENT_CLASS,
    OWL_DISJOINT_WITH: AxiomKind.DISJOINT_WITH,
    RDFS_DOMAIN: AxiomKind.DOMAIN,
    RDFS_RANGE: AxiomKind.RANGE,
}


def _assemble(parser: _Parser) -> Ontology:
    """Second phase: routes raw triples into declarations, TBox and ABox.

    Runs after the whole document is read so declaration order does not
    matter for the domain/range kind check.
    """
    classes: set[Iri] = set()
    properties: set[Iri] = set()
    for t in parser.triples:
        if t.predicate == RDF_TYPE and t.object == OWL_CLASS:
            classes.add(t.subject)
        elif t.predicate == RDF_TYPE and t.object == OWL_OBJECT_PROPERTY:
            properties.add(t.subject)

    tbox: set[Axiom] = set()
    abox: set[Assertion] = set()
    for t in parser.triples:
        kind = _AXIOM_PREDICATES.get(t.predicate) if isinstance(t.predicate, Iri) else None
        if kind is not None:
            if not isinstance(t.object, Iri):
                parser.diagnostics.append(
                    ParseDiagnostic("error", t.line, t.column, f"{kind.value} needs an IRI object, found a literal")
                )
                continue
            if kind in (AxiomKind.DOMAIN, AxiomKind.RANGE) and t.subject in classes:
                parser.diagnostics.append(
                    ParseDiagnostic(
                        "error", t.line, t.column,
                        f"{kind.value} subject <{t.subject}> is declared as a class",
                    )
                )
                continue
            tbox.add(Axiom(kind, t.subject, t.object))
        elif t.predicate == RDF_TYPE:
            if t.object in (OWL_CLASS, OWL_OBJECT_PROPERTY):
                continue  # already recorded as a declaration
            if not isinstance(t.object, Iri):
                parser.diagnostics.append(
                    ParseDiagnostic("error", t.line, t.column, "rdf:type needs a class IRI object")
                )
                continue
            abox.add(type_of(t.subject, t.object))
        else:
            abox.add(relation(t.subject, t.predicate, t.object))

    return Ontology(
        prefixes=parser.prefixes,
        tbox=frozenset(tbox),
        abox=frozenset(abox),
        declared_classes=frozenset(classes),
        declared_properties=frozenset(properties),
    )


def parse_turtle(text: str) -> Ontology:
    """Strict parse: raises TurtleParseError on any problem."""
    ontology, diagnostics = parse_turtle_tolerant(text, _stop_on_error=True)
    errors = [d for d in diagnostics if d.severity == "error"]
    if errors:
        raise TurtleParseError(errors)
    return ontology


def parse_turtle_tolerant(
    text: str, _stop_on_error: bool = False
) -> tuple[Ontology, list[ParseDiagnostic]]:
    """Parse keeping every statement completed before an error.

    Returns whatever ontology could be built plus the diagnostics, never
    raises for content problems.
    """
    tokens, lex_error = _tokenize(text)
    parser = _Parser(tokens)
    parser.parse_document(tolerant=not _stop_on_error)
    if lex_error is not None:
        parser.diagnostics.append(lex_error)
    ontology = _assemble(parser)
    return ontology, parser.diagnostics


def _render_term(term: Iri | str, prefixes: PrefixMap) -> str:
    if isinstance(term, Iri):
        compressed = prefixes.compress(term)
        return compressed if compressed is not None else f"<{term.value}>"
    escaped = "".join(_UNESCAPES.get(c, c) for c in term)
    return f'"{escaped}"'


def _triple_view(ontology: Ontology) -> list[tuple[Iri, Iri, Iri | str]]:
    triples: list[tuple[Iri, Iri, Iri | str]] = []
    for cls in ontology.declared_classes:
        triples.append((cls, RDF_TYPE, OWL_CLASS))
    for prop in ontology.declared_properties:
        triples.append((prop, RDF_TYPE, OWL_OBJECT_PROPERTY))
    inverse = {v: k for k, v in _AXIOM_PREDICATES.items()}
    for ax in ontology.tbox:
        triples.append((ax.subject, inverse[ax.kind], ax.object))
    for a in ontology.abox:
        if a.kind is AssertionKind.TYPE_OF:
            triples.append((a.subject, RDF_TYPE, a.object))
        else:
            assert a.predicate is not None
            triples.append((a.subject, a.predicate, a.object))
    return triples


def _sort_key(triple: tuple[Iri, Iri, Iri | str]) -> tuple:
    s, p, o = triple
    okey = (0, o.value) if isinstance(o, Iri) else (1, o)
    return (s.value, p.value, okey)


def serialize_turtle(ontology: Ontology) -> str:
    """Deterministic Turtle rendering: prefixes sorted by label, statements
    sorted by expanded subject/predicate/object, grouped per subject.
    Reparsing the output yields a set-equal ontology."""
    lines: list[str] = []
    bindings = ontology.prefixes.bindings
    for label in sorted(bindings):
        lines.append(f"@prefix {label}: <{bindings[label]}> .")

    triples = sorted(set(_triple_view(ontology)), key=_sort_key)
    if lines and triples:
        lines.append("")

    idx = 0
    while idx < len(triples):
        subject = triples[idx][0]
        group = []
        while idx < len(triples) and triples[idx][0] == subject:
            group.append(triples[idx])
            idx += 1
        parts: list[str] = []
        j = 0
        while j < len(group):
            predicate = group[j][1]
            objects = []
            while j < len(group) and group[j][1] == predicate:
                objects.append(_render_term(group[j][2], ontology.prefixes))
                j += 1
            verb = "a" if predicate == RDF_TYPE else _render_term(predicate, ontology.prefixes)
            parts.append(f"{verb} {' , '.join(objects)}")
        subject_text = _render_term(subject, ontology.prefixes)
        joined = " ;\n    ".join(parts)
        lines.append(f"{subject_text} {joined} .")

    return "\n".join(lines) + ("\n" if lines else "")
