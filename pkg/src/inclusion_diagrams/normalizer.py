"""Translate propositions into inclusion constraints.

    All S are P        S ⊆ P
    No S is P          S ⊆ non-P
    Some S are P       w ⊆ S and w ⊆ P, w a fresh nonempty witness
    Some S are not P   w ⊆ S and w ⊆ non-P
    N is a P           N ⊆ P, N a singleton (hence nonempty)
    X <= Y             X ⊆ Y
    X == Y             X ⊆ Y and Y ⊆ X

Writing a particular statement as a witness included in both of its sets
makes "some S are P" and "some P are S" the same constraint, so the
subset-swap equivalence needs no rewriting step of its own.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Atom, EdgeProvenance, InclusionGraph, Node, Rewrite, TermTable, Witness
from .parser import Argument, Form, Operand, Proposition


@dataclass(frozen=True)
class DesugarRecord:
    proposition_index: int
    emitted_edges: tuple[tuple[Node, Node], ...]
    emitted_witness: int | None = None


def operand_atom(operand: Operand, terms: TermTable) -> Atom:
    return Atom(terms.intern(operand.name), not operand.complement)


def desugar(p: Proposition, g: InclusionGraph, index: int) -> DesugarRecord:
    """Add the constraints of premise number ``index`` (0-based) to ``g``."""
    terms = g.terms
    s = operand_atom(p.subject, terms)
    q = operand_atom(p.predicate, terms)
    direct = EdgeProvenance(index, Rewrite.DIRECT)

    match p.form:
        case Form.A | Form.SUBSET | Form.SINGULAR:
            if p.form is Form.SINGULAR:
                terms.mark_singleton(s.term)
                g.mark_nonempty(s)
            g.add_edge_closed(s, q, direct)
            return DesugarRecord(index, ((s, q),))
        case Form.E:
            nq = Atom(q.term, False)
            g.add_edge_closed(s, nq, direct)
            return DesugarRecord(index, ((s, nq),))
        case Form.I | Form.O:
            if p.form is Form.O:
                q = Atom(q.term, False)
            w = Witness(len(g.witnesses()), f"some {s.label}")
            g.mark_nonempty(w)
            extract = EdgeProvenance(index, Rewrite.WITNESS_EXTRACTION)
            g.add_edge_closed(w, s, extract)
            g.add_edge_closed(w, q, extract)
            return DesugarRecord(index, ((w, s), (w, q)), w.witness_id)
        case Form.EQUAL:
            g.add_edge_closed(s, q, EdgeProvenance(index, Rewrite.EQUALITY_LEFT_TO_RIGHT))
            g.add_edge_closed(q, s, EdgeProvenance(index, Rewrite.EQUALITY_RIGHT_TO_LEFT))
            return DesugarRecord(index, ((s, q), (q, s)))
    raise AssertionError(p.form)


def build_graph(arg: Argument) -> tuple[InclusionGraph, list[DesugarRecord]]:
    """Graph of the premises only; the conclusion never contributes edges.

    All argument terms, conclusion included, are interned in first-appearance
    order so term ids do not depend on which premises mention them.
    """
    g = InclusionGraph(TermTable(arg.aliases))
    for prop in arg.propositions():
        g.terms.intern(prop.subject.name)
        g.terms.intern(prop.predicate.name)
    records = [desugar(p, g, i) for i, p in enumerate(arg.premises)]
    return g, records
