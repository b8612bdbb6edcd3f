"""Lossless tokenizer for a single C/C++ function.

The function does not have to compile: preprocessor lines stay opaque,
macros are never expanded, and anything unrecognized falls through as
punctuation instead of failing. The only hard errors are literals or
comments left open at end of input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UnterminatedComment, UnterminatedString


class TokenKind(Enum):
    Identifier = "Identifier"
    Keyword = "Keyword"
    Operator = "Operator"
    Punct = "Punct"
    NumberLit = "NumberLit"
    StringLit = "StringLit"
    CharLit = "CharLit"
    PreprocLine = "PreprocLine"
    Comment = "Comment"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int  # 1-based
    col: int   # 1-based
    offset: int  # 0-based absolute offset into the source


KEYWORDS = frozenset({
    # C
    "auto", "break", "case", "char", "const", "continue", "default", "do",
    "double", "else", "enum", "extern", "float", "for", "goto", "if",
    "inline", "int", "long", "register", "restrict", "return", "short",
    "signed", "sizeof", "static", "struct", "switch", "typedef", "union",
    "unsigned", "void", "volatile", "while", "_Bool", "_Complex",
    "_Imaginary", "_Atomic", "_Noreturn", "_Thread_local", "_Alignas",
    "_Alignof", "_Static_assert", "_Generic",
    # C++ additions that matter for declarations and control flow
    "bool", "catch", "class", "constexpr", "delete", "explicit", "export",
    "false", "friend", "mutable", "namespace", "new", "noexcept",
    "nullptr", "operator", "private", "protected", "public", "template",
    "this", "throw", "true", "try", "typename", "using", "virtual",
    "wchar_t",
})

# Longest first so the scanner can take the first hit.
MULTI_CHAR_OPERATORS = (
    "<<=", ">>=", "...", "->*", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "++", "--",
    "->", "::", ".*", "##",
)
SINGLE_CHAR_OPERATORS = frozenset("+-*/%&|^~!<>=?:.")
PUNCT_CHARS = frozenset("()[]{};,")

_IDENT_START = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$"
)
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")


def lex(source: str, recover: bool = False) -> list[Token]:
    """Tokenize `source`, preserving every non-whitespace byte in some token.

    With `recover=True` an unterminated string, char literal, or comment is
    emitted as a truncated token instead of raising; used when re-lexing
    single lines that were cut out of a larger function.
    """
    tokens: list[Token] = []
    n = len(source)
    i = 0
    line = 1
    col = 1

    def advance_over(text: str) -> None:
        nonlocal line, col
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)

    def emit(kind: TokenKind, start: int, end: int, at_line: int, at_col: int) -> None:
        tokens.append(Token(kind, source[start:end], at_line, at_col, start))

    while i < n:
        ch = source[i]

        if ch in " \t\r\n\v\f":
            advance_over(ch)
            i += 1
            continue

        tok_line, tok_col = line, col

        # Preprocessor line: '#' as first non-whitespace char of its line,
        # consumed to end of line honoring trailing-backslash continuations.
        if ch == "#" and _at_line_start(source, i):
            j = i
            while j < n:
                if source[j] == "\n":
                    k = j - 1
                    while k >= 0 and source[k] in " \t\r":
                        k -= 1
                    if k >= 0 and source[k] == "\\":
                        j += 1
                        continue
                    break
                j += 1
            emit(TokenKind.PreprocLine, i, j, tok_line, tok_col)
            advance_over(source[i:j])
            i = j
            continue

        if ch == "/" and i + 1 < n and source[i + 1] == "/":
            j = source.find("\n", i)
            j = n if j == -1 else j
            emit(TokenKind.Comment, i, j, tok_line, tok_col)
            advance_over(source[i:j])
            i = j
            continue

        if ch == "/" and i + 1 < n and source[i + 1] == "*":
            j = source.find("*/", i + 2)
            if j == -1:
                if not recover:
                    raise UnterminatedComment("unterminated comment", tok_line, tok_col)
                j = n
            else:
                j += 2
            emit(TokenKind.Comment, i, j, tok_line, tok_col)
            advance_over(source[i:j])
            i = j
            continue

        if ch == '"' or (ch == "'" and not _is_digit_separator(tokens, source, i)):
            kind = TokenKind.StringLit if ch == '"' else TokenKind.CharLit
            j = i + 1
            closed = False
            while j < n:
                c = source[j]
                if c == "\\" and j + 1 < n:
                    j += 2
                    continue
                if c == ch:
                    j += 1
                    closed = True
                    break
                if c == "\n":
                    break
                j += 1
            if not closed and not recover:
                what = "string" if ch == '"' else "char literal"
                raise UnterminatedString(f"unterminated {what}", tok_line, tok_col)
            emit(kind, i, j, tok_line, tok_col)
            advance_over(source[i:j])
            i = j
            continue

        if ch in _DIGITS or (ch == "." and i + 1 < n and source[i + 1] in _DIGITS):
            # pp-number: digits, identifier chars, '.', exponent signs, and
            # C++14 digit separators.
            j = i + 1
            while j < n:
                c = source[j]
                if c in _IDENT_CONT or c == ".":
                    if c in "eEpP" and j + 1 < n and source[j + 1] in "+-":
                        j += 2
                        continue
                    j += 1
                elif c == "'" and j + 1 < n and source[j + 1] in _IDENT_CONT:
                    j += 2
                else:
                    break
            emit(TokenKind.NumberLit, i, j, tok_line, tok_col)
            advance_over(source[i:j])
            i = j
            continue

        if ch in _IDENT_START:
            j = i + 1
            while j < n and source[j] in _IDENT_CONT:
                j += 1
            word = source[i:j]
            kind = TokenKind.Keyword if word in KEYWORDS else TokenKind.Identifier
            emit(kind, i, j, tok_line, tok_col)
            advance_over(word)
            i = j
            continue

        op = _match_operator(source, i)
        if op is not None:
            emit(TokenKind.Operator, i, i + len(op), tok_line, tok_col)
            advance_over(op)
            i += len(op)
            continue

        # Everything else (brackets, semicolons, stray bytes) is punctuation.
        emit(TokenKind.Punct, i, i + 1, tok_line, tok_col)
        advance_over(ch)
        i += 1

    return tokens


def _at_line_start(source: str, i: int) -> bool:
    j = i - 1
    while j >= 0 and source[j] in " \t":
        j -= 1
    return j < 0 or source[j] == "\n"


def _is_digit_separator(tokens: list[Token], source: str, i: int) -> bool:
    # 1'000'000: a quote glued to a just-emitted number with an alnum after
    # it continues that number; the pp-number scanner consumes these itself,
    # so this only matters when a quote directly follows a finished number.
    if not tokens or tokens[-1].kind is not TokenKind.NumberLit:
        return False
    prev = tokens[-1]
    return prev.offset + len(prev.text) == i and i + 1 < len(source) and source[i + 1] in _IDENT_CONT


def _match_operator(source: str, i: int) -> str | None:
    for op in MULTI_CHAR_OPERATORS:
        if source.startswith(op, i):
            return op
    if source[i] in SINGLE_CHAR_OPERATORS:
        return source[i]
    return None


def reconstruct(source: str, tokens: list[Token]) -> str:
    """Rebuild the source from tokens plus the original inter-token gaps.

    Used by tests to check the lossless-lexing invariant; the gaps between
    consecutive tokens must be pure whitespace.
    """
    out: list[str] = []
    pos = 0
    for tok in tokens:
        out.append(source[pos:tok.offset])
        out.append(tok.text)
        pos = tok.offset + len(tok.text)
    out.append(source[pos:])
    return "".join(out)
