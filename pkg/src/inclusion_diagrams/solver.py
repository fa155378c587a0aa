"""Validity by inclusion chains.

An argument is valid when its conclusion, read as an inclusion, is obtained
by chaining premise inclusions (after contraposition closure). Particular
conclusions additionally need a nonempty node below both of their sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import (
    EQUALITY_REWRITES,
    Atom,
    EdgeProvenance,
    InclusionGraph,
    Node,
    Rewrite,
    Witness,
    negate,
    node_key,
)
from .normalizer import DesugarRecord, build_graph, operand_atom
from .oracle import MAX_TERMS, NotApplicable, RegionModel, argument_terms, find_counterexample
from .parser import Argument, Form, Proposition

Path = tuple[Node, ...]


def reachable(g: InclusionGraph, src: Node, dst: Node) -> Path | None:
    """Shortest inclusion path from ``src`` to ``dst``, or ``None``.

    Among shortest paths the one whose successive edges are smallest by
    (premise index, node key) wins. ``src == dst`` gives the one-node path.
    """
    if src == dst:
        return (src,)
    if src not in g.nodes or dst not in g.nodes:
        return None
    dist = {dst: 0}
    queue = deque([dst])
    while queue and src not in dist:
        n = queue.popleft()
        for p in g.predecessors(n):
            if p not in dist:
                dist[p] = dist[n] + 1
                queue.append(p)
    if src not in dist:
        return None
    path = [src]
    while path[-1] != dst:
        here = dist[path[-1]]
        path.append(next(v for v, _ in g.successors(path[-1]) if dist.get(v) == here - 1))
    return tuple(path)


def path_steps(g: InclusionGraph, path: Path) -> tuple[EdgeProvenance, ...]:
    return tuple(g.provenance(a, b) for a, b in zip(path, path[1:]))


def _complements(path: Path) -> int:
    return sum(1 for n in path if isinstance(n, Atom) and not n.positive)


@dataclass(frozen=True)
class Proof:
    """A chain of inclusions establishing the conclusion.

    ``orientation`` says how the chain is read back as the conclusion:
    ``"forward"`` (it is the conclusion), ``"converse"`` (a universal negative
    obtained with subject and predicate exchanged) or ``"subject"`` (a
    particular whose chain runs to the subject instead of the predicate).
    """

    chain: Path
    steps: tuple[EdgeProvenance, ...]
    labels: tuple[str, ...]
    conclusion_reading: str
    orientation: str = "forward"
    side_chain: Path = ()
    side_steps: tuple[EdgeProvenance, ...] = ()
    substitution: tuple[int, Node] | None = None

    @property
    def premises_used(self) -> tuple[int, ...]:
        """0-based premise indices along the chain, in chain order."""
        return tuple(s.premise_index for s in self.steps)


@dataclass
class Verdict:
    valid: bool
    proof: Proof | None = None
    countermodel: RegionModel | None = None
    note: str | None = None
    graph: InclusionGraph | None = field(default=None, repr=False)
    records: list[DesugarRecord] = field(default_factory=list, repr=False)

    @property
    def status(self) -> str:
        return "valid" if self.valid else "invalid"


def _incl(a: str, b: str) -> str:
    return f"({a} ⊆ {b})"


def _universal_proof(g: InclusionGraph, path: Path, orientation: str = "forward") -> Proof:
    steps = path_steps(g, path)
    substitution = None
    # a leading equality is applied as a substitution of the subject
    while len(path) > 2 and steps[0].rewrite in EQUALITY_REWRITES:
        if substitution is None:
            substitution = (steps[0].premise_index, path[0])
        path, steps = path[1:], steps[1:]
    labels = tuple(n.label for n in path)
    first = substitution[1].label if substitution else labels[0]
    return Proof(path, steps, labels, _incl(first, labels[-1]), orientation,
                 substitution=substitution)


def _particular_proof(g: InclusionGraph, s: Atom, q: Atom) -> Proof | None:
    best = None
    for w in sorted(g.nonempty, key=node_key):
        to_s = reachable(g, w, s)
        to_q = reachable(g, w, q) if to_s else None
        if to_s and to_q:
            score = (len(to_s) + len(to_q), _complements(to_s) + _complements(to_q))
            if best is None or score < best[0]:
                best = (score, w, to_s, to_q)
    if best is None:
        return None
    _, w, to_s, to_q = best
    if len(to_s) > len(to_q):
        spine, side, orientation = to_s, to_q, "subject"
    else:
        spine, side, orientation = to_q, to_s, "forward"

    head = w.label
    if isinstance(w, Witness) and len(side) == 2:
        head = f"some {side[-1].label}"
    labels = (head, *(n.label for n in spine[1:]))
    reading = f"{_incl(head, labels[-1])} with {_incl(head, side[-1].label)}"
    return Proof(spine, path_steps(g, spine), labels, reading, orientation,
                 side, path_steps(g, side))


def prove(g: InclusionGraph, conclusion: Proposition) -> Proof | None:
    terms = g.terms
    s = operand_atom(conclusion.subject, terms)
    q = operand_atom(conclusion.predicate, terms)
    match conclusion.form:
        case Form.A | Form.SUBSET:
            path = reachable(g, s, q)
            return _universal_proof(g, path) if path else None
        case Form.SINGULAR:
            if not terms.is_singleton(s.term):
                return None
            path = reachable(g, s, q)
            return _universal_proof(g, path) if path else None
        case Form.E:
            candidates = []
            for rank, (a, b, orient) in enumerate(
                ((s, negate(q), "forward"), (q, negate(s), "converse"))
            ):
                path = reachable(g, a, b)
                if path:
                    candidates.append(((len(path), _complements(path), rank), path, orient))
            if not candidates:
                return None
            _, path, orient = min(candidates, key=lambda c: c[0])
            return _universal_proof(g, path, orient)
        case Form.I:
            return _particular_proof(g, s, q)
        case Form.O:
            return _particular_proof(g, s, negate(q))
    raise AssertionError(conclusion.form)


def decide(arg: Argument, *, max_oracle_terms: int = MAX_TERMS,
           with_countermodel: bool = True) -> Verdict:
    g, records = build_graph(arg)
    proof = prove(g, arg.conclusion)
    if proof is not None:
        return Verdict(True, proof, graph=g, records=records)

    verdict = Verdict(False, graph=g, records=records)
    if with_countermodel:
        k = len(argument_terms(arg))
        try:
            verdict.countermodel = find_counterexample(arg, max_oracle_terms)
        except NotApplicable:
            verdict.note = (f"countermodel omitted: {k} terms exceed the "
                            f"oracle limit of {min(max_oracle_terms, MAX_TERMS)}")
        else:
            if verdict.countermodel is None:
                verdict.note = ("the oracle finds no countermodel: the premises entail "
                                "the conclusion although no inclusion chain shows it")
    return verdict


# traces ---------------------------------------------------------------------

def _translation(p: Proposition, g: InclusionGraph) -> str:
    """Set-notation reading of a proposition."""
    terms = g.terms
    s = operand_atom(p.subject, terms).label
    q = operand_atom(p.predicate, terms)
    match p.form:
        case Form.A | Form.SUBSET:
            return _incl(s, q.label)
        case Form.E:
            return _incl(s, negate(q).label)
        case Form.I:
            return _incl(f"some {s}", q.label)
        case Form.O:
            return _incl(f"some {s}", negate(q).label)
        case Form.SINGULAR:
            return f"{_incl(s, q.label)} with {s} a single element"
        case Form.EQUAL:
            return f"({s} = {q.label})"
    raise AssertionError(p.form)


def _rule_for_contraposition(original: tuple[Node, Node]) -> str:
    uses_double = any(isinstance(n, Atom) and not n.positive for n in original)
    return "(2) and (1)" if uses_double else "(2)"


def _step_rewrites(arg: Argument, g: InclusionGraph, path: Path,
                   labels: tuple[str, ...], steps: tuple[EdgeProvenance, ...]) -> list[str]:
    lines = []
    for i, ((a, b), prov) in enumerate(zip(zip(path, path[1:]), steps)):
        k = prov.premise_index + 1
        src_label, dst_label = labels[i], labels[i + 1]
        if prov.rewrite is Rewrite.CONTRAPOSITION:
            original = (negate(b), negate(a))
            lines.append(
                f"premise {k}) by {_rule_for_contraposition(original)}: "
                f"{_incl(original[0].label, original[1].label)} ↔ {_incl(src_label, dst_label)}"
            )
        elif prov.rewrite is Rewrite.WITNESS_EXTRACTION and isinstance(a, Witness):
            # (some X ⊆ X) holds by definition and needs no citation
            if src_label not in (a.label, f"some {dst_label}"):
                source = arg.premises[prov.premise_index]
                lines.append(
                    f"premise {k}) by (3): {_translation(source, g)} ↔ "
                    f"{_incl(src_label, dst_label)}"
                )
        elif prov.rewrite in EQUALITY_REWRITES:
            lines.append(f"premise {k}) {_translation(arg.premises[prov.premise_index], g)} "
                         f"gives {_incl(src_label, dst_label)}")
    return lines


def _chain_lines(path: Path, labels: tuple[str, ...], steps) -> list[str]:
    links = [_incl(a, b) for a, b in zip(labels, labels[1:])]
    order = ", ".join(f"{s.premise_index + 1})" for s in steps)
    if not links:
        return [f"Chain: every set is included in itself, {_incl(labels[0], labels[0])}"]
    if len(links) == 1:
        return [f"Chain: {links[0]} is premise {order}"]
    rule = "(4)" if len(links) == 2 else "(5)"
    conj = " ∧ ".join(links)
    return [
        f"Premises in chain order: {order}",
        f"Conjunction: {conj}",
        f"By {rule}: ({conj}) → {_incl(labels[0], labels[-1])}",
    ]


def explain(arg: Argument, v: Verdict) -> str:
    g = v.graph
    if g is None:
        g, _ = build_graph(arg)
    out = ["Premises:"]
    for i, p in enumerate(arg.premises, start=1):
        out.append(f"  {i}) {p.text or p}  {_translation(p, g)}")
    c = arg.conclusion
    out.append(f"Conclusion: {c.text or c}  {_translation(c, g)}")

    if not v.valid:
        out.append("No inclusion chain leads from the conclusion's subject to its predicate; "
                   "no inclusion diagram can be built.")
        if v.countermodel is not None:
            out.append("Countermodel (one element per inhabited region):")
            for name, members in v.countermodel.to_json().items():
                out.append(f"  {name} = {{{', '.join(members)}}}")
        if v.note:
            out.append(f"Note: {v.note}")
        out.append("Verdict: invalid")
        return "\n".join(out) + "\n"

    proof = v.proof
    rewrites = _step_rewrites(arg, g, proof.chain, proof.labels, proof.steps)
    if proof.side_chain:
        side_labels = (proof.labels[0], *(n.label for n in proof.side_chain[1:]))
        rewrites += _step_rewrites(arg, g, proof.side_chain, side_labels, proof.side_steps)
    if rewrites:
        out.append("Rewrites:")
        out.extend(f"  {r}" for r in rewrites)
    out.extend(_chain_lines(proof.chain, proof.labels, proof.steps))

    labels = proof.labels
    head, tail = labels[0], labels[-1]
    if proof.side_chain:
        side_labels = (head, *(n.label for n in proof.side_chain[1:]))
        if len(side_labels) > 2:
            out.append("Side chain: " + " ∧ ".join(
                _incl(a, b) for a, b in zip(side_labels, side_labels[1:])))
        out.append(f"{head} is nonempty")
        if proof.orientation == "subject":
            s = operand_atom(c.subject, g.terms).label
            q_atom = operand_atom(c.predicate, g.terms)
            q = (q_atom if c.form is Form.I else negate(q_atom)).label
            if len(side_labels) == 2:
                out.append(f"By (3): {_incl(head, tail)} ↔ {_incl(f'some {s}', q)}")
    elif proof.orientation == "converse":
        s = operand_atom(c.subject, g.terms)
        q = operand_atom(c.predicate, g.terms)
        out.append(f"By (2) and (1): {_incl(head, tail)} ↔ {_incl(s.label, negate(q).label)}")
    if proof.substitution is not None:
        k, original = proof.substitution
        out.append(f"By premise {k + 1}) {_translation(arg.premises[k], g)}, "
                   f"{original.label} may replace {head}: {_incl(original.label, tail)}")
    out.append(f"Therefore: {c.text or c}")
    if arg.reading:
        out.append(f"Reading: {arg.reading}")
    out.append("Verdict: valid")
    return "\n".join(out) + "\n"
