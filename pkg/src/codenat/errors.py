"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class CodenatError(Exception):
    """Base class for all errors raised by this package."""


class LexError(CodenatError):
    """Lexing failed; carries the 1-based source position of the problem."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, col {col}")
        self.line = line
        self.col = col


class UnterminatedString(LexError):
    pass


class UnterminatedComment(LexError):
    pass


class SegmentError(CodenatError):
    pass


class UnbalancedBraces(SegmentError):
    pass


class MalformedHeader(SegmentError):
    pass


class CfgError(CodenatError):
    pass


class UnknownGotoTarget(CfgError):
    pass


class DisconnectedBlock(CfgError):
    pass


class NoPath(CfgError):
    pass


class DiffError(CodenatError):
    pass


class MalformedHunkHeader(DiffError):
    pass


class RecordParse(CodenatError):
    """A single corpus line could not be parsed; the stream keeps going."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"record at line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class StageError(CodenatError):
    """Wraps an error from one pipeline stage so callers can tag records."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause
