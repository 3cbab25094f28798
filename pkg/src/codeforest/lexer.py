"""Lossless tokenizer for the supported Java subset.

Every byte of the input lands in exactly one token, so concatenating
``token.text`` over the stream reproduces the file verbatim. That
property is what lets later stages report spans (line and byte ranges)
without keeping a second copy of the source.

Token kinds:

* ``keyword``        reserved words, including ``true``/``false``/``null``
* ``identifier``     ``[A-Za-z_$][A-Za-z0-9_$]*`` that is not a keyword
* ``punctuation``    operators and separators, longest-match first
* ``string-literal`` double-quoted, backslash escapes honoured
* ``char-literal``   single-quoted, backslash escapes honoured
* ``number-literal`` tolerant numeric run (hex, float, suffixes)
* ``comment``        ``//`` to end of line, or ``/* ... */``
* ``whitespace``     maximal run of blanks, tabs and newlines

String and char literals must close on their own line, block comments
before end of file; violations raise errors rather than producing
garbage structure downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonUtf8Input, UnterminatedComment, UnterminatedLiteral

KIND_KEYWORD = "keyword"
KIND_IDENTIFIER = "identifier"
KIND_PUNCTUATION = "punctuation"
KIND_STRING = "string-literal"
KIND_CHAR = "char-literal"
KIND_NUMBER = "number-literal"
KIND_COMMENT = "comment"
KIND_WHITESPACE = "whitespace"

TRIVIA_KINDS = frozenset((KIND_COMMENT, KIND_WHITESPACE))

KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    true false null
    """.split()
)

# Multi-character operators, tried longest first so "==" never splits
# into two "=" tokens.
_OPERATORS = (
    ">>>=",
    ">>>", ">>=", "<<=",
    "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
)

ASSIGNMENT_OPERATORS = frozenset(
    ("=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=")
)

_WS = frozenset(" \t\r\n\f\x0b")
_IDENT_START = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$"
)
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")
# Tolerant numeric continuation: hex digits, radix markers, exponents,
# type suffixes, separators and the decimal point.
_NUMBER_CONT = frozenset("0123456789abcdefABCDEFxXlLfFdDeEpP._")


@dataclass(frozen=True)
class Span:
    """Half-open byte range plus 1-based inclusive line range."""

    file_id: str
    line_start: int
    line_end: int
    byte_start: int
    byte_end: int


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: Span


class _Scanner:
    def __init__(self, text: str, file_id: str):
        self.text = text
        self.file_id = file_id
        self.i = 0
        self.line = 1
        self.byte_off = 0
        self.tokens: list[Token] = []

    def emit(self, kind: str, end: int) -> None:
        chunk = self.text[self.i:end]
        newlines = chunk.count("\n")
        # A trailing newline sits on the line it terminates, so it does
        # not advance line_end past it.
        line_end = self.line + (chunk[:-1].count("\n") if chunk else 0)
        nbytes = len(chunk.encode("utf-8"))
        self.tokens.append(
            Token(
                kind,
                chunk,
                Span(self.file_id, self.line, line_end,
                     self.byte_off, self.byte_off + nbytes),
            )
        )
        self.line += newlines
        self.byte_off += nbytes
        self.i = end

    def span_here(self) -> Span:
        return Span(self.file_id, self.line, self.line, self.byte_off, self.byte_off)


def tokenize(source: bytes, file_id: str = "<memory>") -> list[Token]:
    """Split ``source`` into a lossless token stream.

    Raises NonUtf8Input, UnterminatedLiteral or UnterminatedComment.
    """
    try:
        text = source.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise NonUtf8Input(exc.start, file_id) from None

    s = _Scanner(text, file_id)
    n = len(text)
    while s.i < n:
        c = text[s.i]
        if c in _WS:
            j = s.i + 1
            while j < n and text[j] in _WS:
                j += 1
            s.emit(KIND_WHITESPACE, j)
        elif c == "/" and s.i + 1 < n and text[s.i + 1] == "/":
            j = text.find("\n", s.i)
            s.emit(KIND_COMMENT, n if j < 0 else j)
        elif c == "/" and s.i + 1 < n and text[s.i + 1] == "*":
            j = text.find("*/", s.i + 2)
            if j < 0:
                raise UnterminatedComment(s.span_here())
            s.emit(KIND_COMMENT, j + 2)
        elif c == '"' or c == "'":
            s.emit(KIND_STRING if c == '"' else KIND_CHAR, _scan_quoted(s, c))
        elif c in _IDENT_START:
            j = s.i + 1
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            word = text[s.i:j]
            s.emit(KIND_KEYWORD if word in KEYWORDS else KIND_IDENTIFIER, j)
        elif c in _DIGITS:
            j = s.i + 1
            while j < n and text[j] in _NUMBER_CONT:
                j += 1
            s.emit(KIND_NUMBER, j)
        else:
            end = s.i + 1
            for op in _OPERATORS:
                if text.startswith(op, s.i):
                    end = s.i + len(op)
                    break
            s.emit(KIND_PUNCTUATION, end)
    return s.tokens


def _scan_quoted(s: _Scanner, quote: str) -> int:
    """Return the end index of a quoted literal starting at ``s.i``."""
    text = s.text
    j = s.i + 1
    n = len(text)
    while j < n:
        c = text[j]
        if c == "\\" and j + 1 < n:
            j += 2
            continue
        if c == quote:
            return j + 1
        if c == "\n":
            break
        j += 1
    raise UnterminatedLiteral(s.span_here())
