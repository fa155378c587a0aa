"""Brute-force semantic checker over finite region models.

With ``k`` terms there are ``2**k`` Venn regions. None of the statement forms
can tell two elements of the same region apart, so a model is fully described
by which regions are inhabited: ``2**(2**k)`` patterns in all, 65536 for four
terms. Every pattern is evaluated at once as a boolean matrix.

This module shares nothing with the chain solver beyond the parsed
propositions and term-name normalization.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import TermTable
from .parser import Argument, Form, Operand, Proposition

MAX_TERMS = 4


class NotApplicable(ValueError):
    """The argument has more terms than the oracle enumerates."""


@dataclass(frozen=True)
class RegionModel:
    """Which Venn regions over ``terms`` are inhabited.

    Region ``r`` lies inside term ``i`` iff bit ``i`` of ``r`` is set.
    """

    terms: tuple[str, ...]
    region_nonempty: tuple[bool, ...]

    def __post_init__(self):
        if len(self.terms) > MAX_TERMS:
            raise ValueError(f"at most {MAX_TERMS} terms, got {len(self.terms)}")
        if len(self.region_nonempty) != 2 ** len(self.terms):
            raise ValueError("need one flag per region")

    def elements(self) -> dict[int, str]:
        """One element per inhabited region, named a, b, c, ... in region order."""
        return dict(zip(
            (r for r, full in enumerate(self.region_nonempty) if full),
            string.ascii_lowercase,
        ))

    def domain(self) -> frozenset[str]:
        return frozenset(self.elements().values())

    def universe(self) -> dict[str, frozenset[str]]:
        elements = self.elements()
        return {
            name: frozenset(e for r, e in elements.items() if r >> i & 1)
            for i, name in enumerate(self.terms)
        }

    def to_json(self) -> dict[str, list[str]]:
        return {name: sorted(members) for name, members in self.universe().items()}


def argument_terms(arg: Argument) -> TermTable:
    table = TermTable(arg.aliases)
    for p in arg.propositions():
        table.intern(p.subject.name)
        table.intern(p.predicate.name)
    return table


@lru_cache(maxsize=None)
def _patterns(k: int) -> np.ndarray:
    """Boolean matrix (2**2**k, 2**k): row n is pattern n, column r region r."""
    n_regions = 2 ** k
    idx = np.arange(2 ** n_regions, dtype=np.uint32)[:, None]
    bits = (idx >> np.arange(n_regions, dtype=np.uint32)) & 1
    out = bits.astype(bool)
    out.setflags(write=False)
    return out


def _regions_in(operand: Operand, table: TermTable, k: int) -> np.ndarray:
    term = table.lookup(operand.name)
    if term is None or term.id >= k:
        raise KeyError(f"term {operand.name!r} is not in the model")
    inside = ((np.arange(2 ** k) >> term.id) & 1).astype(bool)
    return ~inside if operand.complement else inside


def _evaluate(p: Proposition, table: TermTable, patterns: np.ndarray) -> np.ndarray:
    k = int(np.log2(patterns.shape[1]))
    s = _regions_in(p.subject, table, k)
    q = _regions_in(p.predicate, table, k)

    def some(mask: np.ndarray) -> np.ndarray:
        return patterns[:, mask].any(axis=1)

    match p.form:
        case Form.A | Form.SUBSET:
            return ~some(s & ~q)
        case Form.E:
            return ~some(s & q)
        case Form.I:
            return some(s & q)
        case Form.O:
            return some(s & ~q)
        case Form.SINGULAR:
            return (patterns[:, s].sum(axis=1) == 1) & ~some(s & ~q)
        case Form.EQUAL:
            return ~some(s ^ q)
    raise AssertionError(p.form)


def eval_proposition(p: Proposition, m: RegionModel,
                     aliases: dict[str, str] | None = None) -> bool:
    table = TermTable(aliases)
    for name in m.terms:
        table.intern(name)
    row = np.array([m.region_nonempty], dtype=bool)
    return bool(_evaluate(p, table, row)[0])


def find_counterexample(arg: Argument, max_terms: int = MAX_TERMS) -> RegionModel | None:
    """First pattern, in ascending order, where every premise holds and the
    conclusion fails; ``None`` when the argument is valid."""
    table = argument_terms(arg)
    k = len(table)
    if k > min(max_terms, MAX_TERMS):
        raise NotApplicable(f"{k} terms; the oracle enumerates at most {min(max_terms, MAX_TERMS)}")
    patterns = _patterns(k)
    ok = np.ones(len(patterns), dtype=bool)
    for p in arg.premises:
        ok &= _evaluate(p, table, patterns)
    ok &= ~_evaluate(arg.conclusion, table, patterns)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return None
    return RegionModel(tuple(t.name for t in table), tuple(bool(b) for b in patterns[hits[0]]))


def is_valid(arg: Argument, max_terms: int = MAX_TERMS) -> bool:
    return find_counterexample(arg, max_terms) is None


def eval_extensional(p: Proposition, universe: dict[str, frozenset],
                     domain: frozenset | None = None,
                     aliases: dict[str, str] | None = None) -> bool:
    """Evaluate ``p`` on explicit sets.

    Complements are taken relative to ``domain``, which defaults to the union
    of the given sets.
    """
    table = TermTable(aliases)
    sets = {table.intern(name): members for name, members in universe.items()}
    if domain is None:
        domain = frozenset().union(*universe.values())

    def ext(o: Operand) -> frozenset:
        members = sets[table.lookup(o.name)]
        return domain - members if o.complement else members

    s, q = ext(p.subject), ext(p.predicate)
    match p.form:
        case Form.A | Form.SUBSET:
            return s <= q
        case Form.E:
            return not (s & q)
        case Form.I:
            return bool(s & q)
        case Form.O:
            return bool(s - q)
        case Form.SINGULAR:
            return len(s) == 1 and s <= q
        case Form.EQUAL:
            return s == q
    raise AssertionError(p.form)


# standard syllogistic forms ------------------------------------------------

MOODS = tuple("".join(m) for m in itertools.product("AEIO", repeat=3))
FIGURES = (1, 2, 3, 4)

# (major premise, minor premise) as (subject, predicate) pairs
_FIGURE_LAYOUT = {
    1: (("M", "P"), ("S", "M")),
    2: (("P", "M"), ("S", "M")),
    3: (("M", "P"), ("M", "S")),
    4: (("P", "M"), ("M", "S")),
}


def standard_form(mood: str, figure: int) -> Argument:
    """Instantiate a mood and figure over the placeholder terms S, M, P."""
    major, minor = _FIGURE_LAYOUT[figure]
    pairs = (major, minor, ("S", "P"))
    props = tuple(
        Proposition(Form(letter), Operand(s), Operand(p))
        for letter, (s, p) in zip(mood, pairs)
    )
    return Argument(props[:2], props[2])


@dataclass(frozen=True)
class FormRow:
    mood: str
    figure: int
    oracle_valid: bool
    solver_valid: bool

    @property
    def agree(self) -> bool:
        return self.oracle_valid == self.solver_valid


def classify_all_forms() -> list[FormRow]:
    """All 256 forms, figure-major then mood in lexicographic order."""
    from .solver import decide

    rows = []
    for figure in FIGURES:
        for mood in MOODS:
            arg = standard_form(mood, figure)
            rows.append(FormRow(mood, figure, is_valid(arg),
                                decide(arg, with_countermodel=False).valid))
    return rows


def forms_csv(rows: list[FormRow]) -> str:
    lines = ["mood,figure,oracle,solver,agree"]
    flag = {True: "true", False: "false"}
    for r in rows:
        lines.append(f"{r.mood},{r.figure},{flag[r.oracle_valid]},"
                     f"{flag[r.solver_valid]},{flag[r.agree]}")
    return "\n".join(lines) + "\n"
