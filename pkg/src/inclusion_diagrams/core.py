"""Terms, atoms, witness nodes and the inclusion graph shared by every engine.

A complement is a polarity bit on :class:`Atom`, so a doubly complemented set
cannot even be written down. Witness nodes stand for the unnamed nonempty
subsets introduced by particular and singular statements; they never get a
complement.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Union


def normalize_name(name: str) -> str:
    """Identity key for a term name: whitespace collapsed, case folded."""
    return " ".join(name.split()).casefold()


@dataclass(frozen=True, order=True)
class TermId:
    id: int
    name: str = field(compare=False)


class TermTable:
    """Interns term names into dense ids in first-appearance order.

    ``aliases`` maps variant spellings (for instance ``"man"``) onto the
    canonical display name of a term (``"men"``).
    """

    def __init__(self, aliases: dict[str, str] | None = None):
        self._by_key: dict[str, TermId] = {}
        self._terms: list[TermId] = []
        self._aliases = {normalize_name(k): " ".join(v.split())
                         for k, v in (aliases or {}).items()}
        self.singletons: set[TermId] = set()

    def _resolve(self, name: str) -> tuple[str, str]:
        display = " ".join(name.split())
        if not display:
            raise ValueError("term name is empty")
        display = self._aliases.get(normalize_name(display), display)
        return normalize_name(display), display

    def intern(self, name: str) -> TermId:
        key, display = self._resolve(name)
        term = self._by_key.get(key)
        if term is None:
            term = TermId(len(self._terms), display)
            self._by_key[key] = term
            self._terms.append(term)
        return term

    def lookup(self, name: str) -> TermId | None:
        key, _ = self._resolve(name)
        return self._by_key.get(key)

    def mark_singleton(self, term: TermId) -> None:
        self.singletons.add(term)

    def is_singleton(self, term: TermId) -> bool:
        return term in self.singletons

    def __iter__(self) -> Iterator[TermId]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, index: int) -> TermId:
        return self._terms[index]


@dataclass(frozen=True, order=True)
class Atom:
    term: TermId
    positive: bool = True

    @property
    def label(self) -> str:
        return self.term.name if self.positive else f"non-{self.term.name}"

    def __str__(self) -> str:
        return self.label


def negate(a: Atom) -> Atom:
    return Atom(a.term, not a.positive)


@dataclass(frozen=True)
class Witness:
    """An unnamed nonempty subset introduced by one premise."""

    witness_id: int
    label: str = field(compare=False)

    def __str__(self) -> str:
        return self.label


Node = Union[Atom, Witness]


def node_key(node: Node) -> tuple[int, int, int]:
    """Total order on nodes used for deterministic tie-breaking."""
    if isinstance(node, Atom):
        return (0, node.term.id, 0 if node.positive else 1)
    return (1, node.witness_id, 0)


class Rewrite(enum.Enum):
    DIRECT = "direct"
    CONTRAPOSITION = "contraposition"
    EQUALITY_LEFT_TO_RIGHT = "equality_left_to_right"
    EQUALITY_RIGHT_TO_LEFT = "equality_right_to_left"
    WITNESS_EXTRACTION = "witness_extraction"


EQUALITY_REWRITES = (Rewrite.EQUALITY_LEFT_TO_RIGHT, Rewrite.EQUALITY_RIGHT_TO_LEFT)


@dataclass(frozen=True)
class EdgeProvenance:
    premise_index: int
    rewrite: Rewrite


class InclusionGraph:
    """Inclusion edges between nodes, kept closed under contraposition.

    Edges are stored with the provenance of the first premise that produced
    them; adding an edge that already exists does nothing.
    """

    def __init__(self, terms: TermTable | None = None):
        self.terms = terms if terms is not None else TermTable()
        self.nodes: set[Node] = set()
        self.edges: dict[tuple[Node, Node], EdgeProvenance] = {}
        self.nonempty: set[Node] = set()
        self._succ: dict[Node, list[Node]] = defaultdict(list)
        self._pred: dict[Node, list[Node]] = defaultdict(list)

    def _add(self, src: Node, dst: Node, prov: EdgeProvenance) -> bool:
        if (src, dst) in self.edges:
            return False
        self.nodes.update((src, dst))
        self.edges[src, dst] = prov
        self._succ[src].append(dst)
        self._pred[dst].append(src)
        return True

    def add_edge_closed(self, src: Node, dst: Node, prov: EdgeProvenance) -> None:
        self._add(src, dst, prov)
        if isinstance(src, Atom) and isinstance(dst, Atom):
            self._add(negate(dst), negate(src),
                      EdgeProvenance(prov.premise_index, Rewrite.CONTRAPOSITION))

    def mark_nonempty(self, node: Node) -> None:
        self.nodes.add(node)
        self.nonempty.add(node)

    def has_edge(self, src: Node, dst: Node) -> bool:
        return (src, dst) in self.edges

    def provenance(self, src: Node, dst: Node) -> EdgeProvenance:
        return self.edges[src, dst]

    def successors(self, node: Node) -> list[tuple[Node, EdgeProvenance]]:
        """Outgoing edges ordered by (premise index, target node key)."""
        out = [(dst, self.edges[node, dst]) for dst in self._succ.get(node, ())]
        out.sort(key=lambda e: (e[1].premise_index, node_key(e[0])))
        return out

    def predecessors(self, node: Node) -> list[Node]:
        return list(self._pred.get(node, ()))

    def atoms(self) -> list[Atom]:
        return sorted((n for n in self.nodes if isinstance(n, Atom)), key=node_key)

    def witnesses(self) -> list[Witness]:
        return sorted((n for n in self.nodes if isinstance(n, Witness)), key=node_key)

    def __len__(self) -> int:
        return len(self.edges)
