import itertools

import pytest

from inclusion_diagrams import corpus
from inclusion_diagrams.oracle import (
    NotApplicable,
    RegionModel,
    argument_terms,
    classify_all_forms,
    eval_extensional,
    eval_proposition,
    find_counterexample,
    forms_csv,
    standard_form,
)
from inclusion_diagrams.parser import parse_argument, parse_proposition

# The fifteen forms valid without existential import, by their traditional names.
BOOLEAN_VALID = {
    ("AAA", 1), ("EAE", 1), ("AII", 1), ("EIO", 1),            # Barbara Celarent Darii Ferio
    ("EAE", 2), ("AEE", 2), ("EIO", 2), ("AOO", 2),            # Cesare Camestres Festino Baroco
    ("IAI", 3), ("AII", 3), ("OAO", 3), ("EIO", 3),            # Disamis Datisi Bocardo Ferison
    ("AEE", 4), ("IAI", 4), ("EIO", 4),                        # Calemes Dimaris Fresison
}


def model_from_sets(terms, sets):
    """Region pattern of explicit sets; the domain is the union of the sets."""
    domain = set().union(*sets.values())
    flags = [False] * 2 ** len(terms)
    for x in domain:
        r = sum(1 << i for i, t in enumerate(terms) if x in sets[t])
        flags[r] = True
    return RegionModel(tuple(terms), tuple(flags))


def brute_force_counterexample(arg):
    """Reference search: build each pattern's explicit universe and test the
    propositions on plain Python sets, in ascending pattern order."""
    terms = [t.name for t in argument_terms(arg)]
    n_regions = 2 ** len(terms)
    for pattern in range(2 ** n_regions):
        regions = [r for r in range(n_regions) if pattern >> r & 1]
        universe = {t: frozenset(r for r in regions if r >> i & 1) for i, t in enumerate(terms)}
        domain = frozenset(regions)
        if all(eval_extensional(p, universe, domain, arg.aliases) for p in arg.premises) \
                and not eval_extensional(arg.conclusion, universe, domain, arg.aliases):
            return pattern
    return None


def pattern_index(m):
    return sum(1 << r for r, full in enumerate(m.region_nonempty) if full)


class TestEvalProposition:
    def test_region_example(self):
        # poets∩visionaries∖professors and professors∩visionaries∖poets inhabited
        terms = ("professors", "visionaries", "poets")
        flags = [False] * 8
        flags[0b110] = flags[0b011] = True
        m = RegionModel(terms, tuple(flags))
        assert eval_proposition(parse_proposition("All poets are visionaries"), m)
        assert eval_proposition(parse_proposition("Some professors are visionaries"), m)
        assert not eval_proposition(parse_proposition("Some poets are professors"), m)
        explicit = model_from_sets(terms, {"poets": {"x"}, "visionaries": {"x", "y"},
                                           "professors": {"y"}})
        assert explicit == m

    def test_empty_model(self):
        m = RegionModel(("X", "Y"), (False,) * 4)
        assert eval_proposition(parse_proposition("All X are Y"), m)
        assert not eval_proposition(parse_proposition("Some X are Y"), m)

    @pytest.mark.parametrize("pattern", range(16))
    def test_identity(self, pattern):
        m = RegionModel(("X", "Y"), tuple(bool(pattern >> r & 1) for r in range(4)))
        assert eval_proposition(parse_proposition("All X are X"), m)

    def test_singular(self):
        one = RegionModel(("Socrates", "men"), (False, False, False, True))
        two = RegionModel(("Socrates", "men"), (False, True, False, True))
        p = parse_proposition("Socrates is men")
        assert eval_proposition(p, one)
        assert not eval_proposition(p, two)

    def test_complement_uses_whole_domain(self):
        # element outside both terms lives in non-x but not in y
        m = RegionModel(("x", "y"), (True, False, False, False))
        p = parse_proposition("~x <= y")
        assert not eval_proposition(p, m)
        assert not eval_extensional(p, m.universe(), m.domain())

    def test_missing_term(self):
        with pytest.raises(KeyError):
            eval_proposition(parse_proposition("All a are b"), RegionModel(("a",), (True, True)))


class TestCounterexample:
    def test_invalid_syllogism(self):
        arg = corpus.load("invalid_syllogism")
        m = find_counterexample(arg)
        assert m is not None
        assert all(eval_proposition(p, m) for p in arg.premises)
        assert not eval_proposition(arg.conclusion, m)
        assert pattern_index(m) == brute_force_counterexample(arg)

    def test_invalid_syllogism_hand_model(self):
        arg = corpus.load("invalid_syllogism")
        sets = {"poets": {"a"}, "visionaries": {"a", "b"}, "professors": {"b"}}
        m = model_from_sets(("professors", "visionaries", "poets"), sets)
        assert all(eval_proposition(p, m) for p in arg.premises)
        assert not eval_proposition(arg.conclusion, m)
        assert all(eval_extensional(p, sets) for p in arg.premises)
        assert not eval_extensional(arg.conclusion, sets)

    def test_valid_example3(self):
        assert find_counterexample(corpus.load("example03")) is None

    def test_particular_does_not_give_universal(self):
        arg = parse_argument("Some X are Y.\ntherefore: All X are Y.\n")
        m = find_counterexample(arg)
        assert m is not None
        assert pattern_index(m) == brute_force_counterexample(arg)
        universe = m.universe()
        assert universe["X"] - universe["Y"]

    def test_too_many_terms(self):
        arg = parse_argument("All a are b\nAll c are d\ntherefore: All a are e\n")
        with pytest.raises(NotApplicable):
            find_counterexample(arg)

    @pytest.mark.parametrize("name", [n for n in corpus.NAMES if n != "bone"])
    def test_corpus_against_brute_force(self, name):
        arg = corpus.load(name)
        m = find_counterexample(arg)
        expected = brute_force_counterexample(arg)
        assert (None if m is None else pattern_index(m)) == expected

    def test_four_terms(self):
        arg = parse_argument("All a are b\nAll b are c\nSome d are a\n"
                             "therefore: Some d are not c\n")
        m = find_counterexample(arg)
        assert pattern_index(m) == brute_force_counterexample(arg)


@pytest.fixture(scope="module")
def rows():
    return classify_all_forms()


class TestStandardForms:
    def test_row_order(self, rows):
        assert len(rows) == 256
        assert (rows[0].mood, rows[0].figure) == ("AAA", 1)
        assert (rows[-1].mood, rows[-1].figure) == ("OOO", 4)
        assert [r.figure for r in rows] == sorted(r.figure for r in rows)

    def test_barbara(self, rows):
        assert rows[0].oracle_valid and rows[0].solver_valid

    def test_invalid_syllogism_form(self, rows):
        row = next(r for r in rows if (r.mood, r.figure) == ("IAI", 2))
        assert not row.oracle_valid and not row.solver_valid

    def test_fifteen_valid(self, rows):
        valid = {(r.mood, r.figure) for r in rows if r.oracle_valid}
        assert len(valid) == 15
        assert valid == BOOLEAN_VALID

    def test_full_agreement(self, rows):
        assert [r for r in rows if not r.agree] == []

    def test_oracle_matches_brute_force(self, rows):
        for r in rows:
            arg = standard_form(r.mood, r.figure)
            assert (brute_force_counterexample(arg) is None) == r.oracle_valid

    def test_csv(self, rows):
        text = forms_csv(rows)
        lines = text.splitlines()
        assert len(lines) == 257
        assert lines[0] == "mood,figure,oracle,solver,agree"
        assert lines[1] == "AAA,1,true,true,true"


def test_universe_reconstruction():
    m = RegionModel(("a", "b"), (True, False, True, True))
    assert m.universe() == {"a": frozenset({"c"}), "b": frozenset({"b", "c"})}
    assert m.domain() == frozenset("abc")
    assert m.to_json() == {"a": ["c"], "b": ["b", "c"]}


def test_standard_form_layout():
    arg = standard_form("IAI", 2)
    assert [str(p) for p in arg.propositions()] == [
        "Some P are M.", "All S are M.", "Some S are P."]
    assert list(itertools.islice((t.name for t in argument_terms(arg)), 3)) == ["P", "M", "S"]
