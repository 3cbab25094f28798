"""Exception types raised across the codeforest pipeline.

Every error carries enough context to point a user at the offending
input: lexer and parser errors hold a source span, corpus errors hold
paths, model errors hold the class names involved.
"""

from __future__ import annotations


class CodeforestError(Exception):
    """Base class for all errors raised by this package."""


class NonUtf8Input(CodeforestError):
    """Source bytes are not valid UTF-8."""

    def __init__(self, byte_offset: int, file_id: str = "<memory>"):
        self.byte_offset = byte_offset
        self.file_id = file_id
        super().__init__(f"{file_id}: invalid UTF-8 at byte offset {byte_offset}")


class UnterminatedLiteral(CodeforestError):
    """A string or character literal is not closed before end of line/file."""

    def __init__(self, span):
        self.span = span
        super().__init__(f"{span.file_id}:{span.line_start}: unterminated literal")


class UnterminatedComment(CodeforestError):
    """A block comment is not closed before end of file."""

    def __init__(self, span):
        self.span = span
        super().__init__(f"{span.file_id}:{span.line_start}: unterminated block comment")


class UnbalancedBraces(CodeforestError):
    """Braces do not balance inside a compilation unit."""

    def __init__(self, span):
        self.span = span
        super().__init__(f"{span.file_id}:{span.line_start}: unbalanced braces")


class MissingClassName(CodeforestError):
    """A class or interface keyword is not followed by a name."""

    def __init__(self, span):
        self.span = span
        super().__init__(f"{span.file_id}:{span.line_start}: class keyword without a name")


class RootNotFound(CodeforestError):
    """The corpus root directory does not exist or is not a directory."""

    def __init__(self, root: str):
        self.root = root
        super().__init__(f"corpus root not found: {root}")


class DuplicateClassName(CodeforestError):
    """Two classes in the same package share a name."""

    def __init__(self, package: str, name: str):
        self.package = package
        self.name = name
        super().__init__(f"duplicate class {name!r} in package {package!r}")


class InheritanceCycle(CodeforestError):
    """Resolved inheritance edges contain a cycle."""

    def __init__(self, participants: list[str]):
        self.participants = list(participants)
        super().__init__("inheritance cycle: " + " -> ".join(self.participants))


class DegenerateSegment(CodeforestError):
    """A channel polyline contains two consecutive coincident points."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"degenerate channel segment at point {index}")


class SceneTooLarge(CodeforestError):
    """A mesh exceeds what a glTF accessor can index."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"accessor count {count} exceeds glTF limits")


class UnknownKey(CodeforestError):
    """A config file names a key this tool does not define."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"unknown config key: {key}")


class NonPositiveValue(CodeforestError):
    """A config value is outside its allowed range."""

    def __init__(self, key: str, value, reason: str = "must be positive"):
        self.key = key
        self.value = value
        super().__init__(f"config key {key} {reason}, got {value}")
