"""Parser for the ``.syl`` argument format.

One statement per line. Sentence forms (keywords are case-insensitive, the
trailing period is optional)::

    All S are P            universal affirmative
    No S is P / No S are P universal negative
    Some S are P           particular affirmative
    Some S are not P       particular negative
    NAME is a P            singular statement ("a"/"an" optional)

Symbolic forms, where ``~`` marks a complement::

    X <= ~Y                inclusion
    X == Y                 equality (premises only)

Exactly one line starts with ``therefore:`` or ``∴``; it is the conclusion.
Lines starting with ``#`` are comments. Two comment pragmas are understood:
``# alias: man = men`` makes two spellings denote one term, and
``# reading: <text>`` attaches a plain-language reading of the conclusion.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

__all__ = [
    "Form",
    "Operand",
    "Proposition",
    "Argument",
    "ParseError",
    "parse_proposition",
    "parse_argument",
    "format_proposition",
]

GRAMMAR_FORMS = (
    "All S are P",
    "No S is P",
    "Some S are P",
    "Some S are not P",
    "NAME is a P",
    "X <= Y (with optional ~ complement marks)",
    "X == Y",
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Form(enum.Enum):
    A = "A"
    E = "E"
    I = "I"  # noqa: E741
    O = "O"  # noqa: E741
    SINGULAR = "Singular"
    SUBSET = "SymbolicSubset"
    EQUAL = "SymbolicEqual"


CATEGORICAL = (Form.A, Form.E, Form.I, Form.O)


@dataclass(frozen=True)
class Operand:
    """A term name, possibly complemented (symbolic forms only)."""

    name: str
    complement: bool = False

    def __str__(self) -> str:
        return f"~{self.name}" if self.complement else self.name


@dataclass(frozen=True)
class Proposition:
    form: Form
    subject: Operand
    predicate: Operand
    source_line: int | None = field(default=None, compare=False)
    text: str | None = field(default=None, compare=False)

    def __str__(self) -> str:
        return format_proposition(self)


@dataclass(frozen=True)
class Argument:
    premises: tuple[Proposition, ...]
    conclusion: Proposition
    aliases: dict[str, str] = field(default_factory=dict, compare=False, hash=False)
    reading: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.premises:
            raise ValueError("an argument needs at least one premise")
        if self.conclusion.form is Form.EQUAL:
            raise ValueError("an equality cannot be a conclusion")

    def propositions(self) -> tuple[Proposition, ...]:
        return (*self.premises, self.conclusion)


_KEYWORDS = {"all", "no", "some", "are", "is", "not"}
_ARTICLES = ("a ", "an ")

_PATTERNS = [
    # "are not" must be tried before plain "are"
    (Form.O, re.compile(r"^some\s+(?P<s>.+?)\s+(?:are|is)\s+not\s+(?P<p>.+)$", re.I)),
    (Form.I, re.compile(r"^some\s+(?P<s>.+?)\s+(?:are|is)\s+(?P<p>.+)$", re.I)),
    (Form.A, re.compile(r"^all\s+(?P<s>.+?)\s+(?:are|is)\s+(?P<p>.+)$", re.I)),
    (Form.E, re.compile(r"^no\s+(?P<s>.+?)\s+(?:is|are)\s+(?P<p>.+)$", re.I)),
    (Form.SINGULAR, re.compile(r"^(?P<s>.+?)\s+is\s+(?P<p>.+)$", re.I)),
]


def _strip_article(text: str) -> str:
    lowered = text.lower()
    for article in _ARTICLES:
        if lowered.startswith(article):
            return text[len(article):].strip()
    return text


def _name(text: str, line: int | None) -> str:
    name = " ".join(text.split())
    if not name:
        raise ParseError("empty term name", line)
    if any(ch in name for ch in "~<="):
        raise ParseError(f"unexpected symbol in term name {name!r}", line)
    return name


def _operand(text: str, line: int | None) -> Operand:
    text = text.strip()
    complement = text.startswith("~")
    if complement:
        text = text[1:].strip()
        if text.startswith("~"):
            raise ParseError("a complement mark may appear only once per operand", line)
    return Operand(_name(text, line), complement)


def parse_proposition(line: str, lineno: int | None = None) -> Proposition:
    """Parse one statement. ``lineno`` is attached to the result and to errors."""
    text = " ".join(line.split())
    if text.endswith("."):
        text = text[:-1].rstrip()
    if not text:
        raise ParseError("empty statement", lineno)

    for op, form in (("<=", Form.SUBSET), ("==", Form.EQUAL)):
        if op in text:
            left, _, right = text.partition(op)
            if op in right:
                raise ParseError(f"more than one {op!r} in statement", lineno)
            return Proposition(form, _operand(left, lineno), _operand(right, lineno),
                               lineno, line.strip())

    for form, pattern in _PATTERNS:
        m = pattern.match(text)
        if m is None:
            continue
        subject = m.group("s")
        predicate = m.group("p")
        if form in (Form.E, Form.SINGULAR):
            predicate = _strip_article(predicate)
        if form is Form.SINGULAR and subject.split()[0].lower() in _KEYWORDS:
            break
        return Proposition(form, Operand(_name(subject, lineno)),
                           Operand(_name(predicate, lineno)), lineno, line.strip())

    raise ParseError(
        f"cannot read {line.strip()!r}; expected one of: " + "; ".join(GRAMMAR_FORMS),
        lineno,
    )


def format_proposition(p: Proposition) -> str:
    s, q = p.subject, p.predicate
    match p.form:
        case Form.A:
            return f"All {s} are {q}."
        case Form.E:
            return f"No {s} is {q}."
        case Form.I:
            return f"Some {s} are {q}."
        case Form.O:
            return f"Some {s} are not {q}."
        case Form.SINGULAR:
            return f"{s} is {q}."
        case Form.SUBSET:
            return f"{s} <= {q}"
        case Form.EQUAL:
            return f"{s} == {q}"


_CONCLUSION = re.compile(r"^(?:therefore\s*:|∴)\s*", re.I)
_ALIAS = re.compile(r"^#\s*alias\s*:\s*(?P<variant>[^=]+?)\s*=\s*(?P<canonical>.+?)\s*$", re.I)
_READING = re.compile(r"^#\s*reading\s*:\s*(?P<text>.+?)\s*$", re.I)


def parse_argument(text: str) -> Argument:
    premises: list[Proposition] = []
    conclusions: list[Proposition] = []
    aliases: dict[str, str] = {}
    reading = None
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if m := _ALIAS.match(line):
                aliases[m.group("variant")] = m.group("canonical")
            elif m := _READING.match(line):
                reading = m.group("text")
            continue
        m = _CONCLUSION.match(line)
        if m:
            prop = parse_proposition(line[m.end():], lineno)
            if prop.form is Form.EQUAL:
                raise ParseError("an equality cannot be the conclusion", lineno)
            conclusions.append(prop)
        else:
            premises.append(parse_proposition(line, lineno))

    if len(conclusions) != 1:
        # point at the second conclusion, or at the end of the input
        where = conclusions[1].source_line if len(conclusions) > 1 else max(lineno, 1)
        raise ParseError(
            f"expected exactly one 'therefore:' line, found {len(conclusions)}", where
        )
    if not premises:
        raise ParseError("an argument needs at least one premise",
                         conclusions[0].source_line)
    return Argument(tuple(premises), conclusions[0], aliases, reading)
