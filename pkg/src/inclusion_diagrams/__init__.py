"""Decide categorical syllogisms and inclusion arguments by chaining set inclusions."""

from .core import Atom, EdgeProvenance, InclusionGraph, Rewrite, TermId, TermTable, Witness, negate
from .normalizer import DesugarRecord, build_graph, desugar
from .oracle import (
    NotApplicable,
    RegionModel,
    classify_all_forms,
    eval_proposition,
    find_counterexample,
    forms_csv,
)
from .parser import Argument, Form, Operand, ParseError, Proposition, parse_argument, parse_proposition
from .render import DiagramLayout, emit_ascii, emit_svg, layout_chain
from .solver import Proof, Verdict, decide, explain, reachable

__version__ = "0.1.0"

__all__ = [
    "Argument", "Atom", "DesugarRecord", "DiagramLayout", "EdgeProvenance", "Form",
    "InclusionGraph", "NotApplicable", "Operand", "ParseError", "Proof", "Proposition",
    "RegionModel", "Rewrite", "TermId", "TermTable", "Verdict", "Witness",
    "build_graph", "classify_all_forms", "decide", "desugar", "emit_ascii", "emit_svg",
    "eval_proposition", "explain", "find_counterexample", "forms_csv", "layout_chain",
    "negate", "parse_argument", "parse_proposition", "reachable",
]
