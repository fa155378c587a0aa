import pytest

from inclusion_diagrams import corpus
from inclusion_diagrams.core import Atom, InclusionGraph, Rewrite, TermTable, Witness, negate
from inclusion_diagrams.normalizer import build_graph, desugar
from inclusion_diagrams.parser import parse_argument, parse_proposition


def atom(g, name, positive=True):
    return Atom(g.terms.lookup(name), positive)


def fresh(*lines):
    g = InclusionGraph(TermTable())
    records = [desugar(parse_proposition(line), g, i) for i, line in enumerate(lines)]
    return g, records


def test_universal_negative():
    g, (rec,) = fresh("No intellectual is superstitious")
    c2, c3 = atom(g, "intellectual"), atom(g, "superstitious")
    assert rec.emitted_edges == ((c2, negate(c3)),)
    assert g.has_edge(c3, negate(c2))
    assert len(g) == 2


def test_universal_affirmative():
    g, (rec,) = fresh("All men are rational")
    assert rec.emitted_edges == ((atom(g, "men"), atom(g, "rational")),)
    assert rec.emitted_witness is None
    assert not g.nonempty


def test_particular_affirmative():
    g, (rec,) = fresh("Some engineers are wealthy")
    w = Witness(rec.emitted_witness, "")
    assert rec.emitted_edges == ((w, atom(g, "engineers")), (w, atom(g, "wealthy")))
    assert g.nonempty == {w}
    assert g.witnesses()[0].label == "some engineers"
    assert all(p.rewrite is Rewrite.WITNESS_EXTRACTION for p in g.edges.values())
    assert len(g) == 2


def test_particular_negative():
    g, (rec,) = fresh("Some animals are not vertebrates")
    w = Witness(rec.emitted_witness, "")
    assert g.has_edge(w, negate(atom(g, "vertebrates")))
    assert not g.has_edge(w, atom(g, "vertebrates"))


def test_equality():
    g, (rec,) = fresh("bone == satisfies_dog")
    b, s = atom(g, "bone"), atom(g, "satisfies_dog")
    assert set(rec.emitted_edges) == {(b, s), (s, b)}
    assert g.provenance(b, s).rewrite is Rewrite.EQUALITY_LEFT_TO_RIGHT
    assert g.provenance(s, b).rewrite is Rewrite.EQUALITY_RIGHT_TO_LEFT


def test_singular():
    g, (rec,) = fresh("Socrates is a man")
    s = atom(g, "Socrates")
    assert g.terms.is_singleton(s.term)
    assert s in g.nonempty
    assert rec.emitted_edges == ((s, atom(g, "man")),)


def test_witness_ids_unique():
    g, recs = fresh("Some a are b", "Some b are not c", "Some c are a")
    assert [r.emitted_witness for r in recs] == [0, 1, 2]


def test_example3_graph():
    g, _ = build_graph(corpus.load("example03"))
    c1, c2, c3 = (atom(g, n) for n in ("Spaniards", "men", "rational"))
    assert set(g.edges) == {(c2, c3), (negate(c3), negate(c2)),
                            (c1, c2), (negate(c2), negate(c1))}


def test_bone_graph():
    g, records = build_graph(corpus.load("bone"))
    positive = [a for a in g.atoms() if a.positive]
    assert len(positive) == 7
    assert sum(len(r.emitted_edges) for r in records) == 7
    assert len(g) >= 7


def test_records_align_and_edges_present(corpus_name):
    arg = corpus.load(corpus_name)
    g, records = build_graph(arg)
    assert [r.proposition_index for r in records] == list(range(len(arg.premises)))
    for r in records:
        for edge in r.emitted_edges:
            assert g.has_edge(*edge)


@pytest.mark.parametrize("other", [
    "All x are y", "Some Germans are artists", "No artists are Germans", "q <= ~r",
])
def test_conclusion_contributes_nothing(other):
    base = corpus.load("example14")
    swapped = parse_argument(corpus.text("example14").rsplit("therefore:", 1)[0]
                             + f"therefore: {other}\n")
    g1, _ = build_graph(base)
    g2, _ = build_graph(swapped)
    assert set(g1.edges) == set(g2.edges)
    assert g1.nonempty == g2.nonempty


def test_particular_symmetry():
    g1, _ = fresh("Some engineers are wealthy")
    g2, _ = fresh("Some wealthy are engineers")
    targets = lambda g: {g.terms[d.term.id].name.lower() for _, d in g.edges}  # noqa: E731
    assert targets(g1) == targets(g2) == {"engineers", "wealthy"}
