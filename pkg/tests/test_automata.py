import json

import pytest
from hypothesis import given, settings

from pointed_regex.automata import (
    Dfa,
    build,
    build_derivative_dfa,
    build_derivative_quotient_dfa,
    build_pointed_dfa,
    build_quotient_dfa,
    canonical_form,
    export_dict,
    export_dot,
    export_json,
    isomorphic,
    minimize,
    run_dfa,
)
from pointed_regex.derivatives import derivative_match
from pointed_regex.errors import AlphabetMismatchError
from pointed_regex.oracle import all_words, member_oracle
from pointed_regex.readback import canon
from pointed_regex.syntax import EMPTY, EPS, Pre, Sym, carrier_pre, nullable, parse, parse_pre, symbol_count

from .strategies import regexes

ACBC = parse("(ac+bc)*")
FIG1 = parse("(a+\\e)(b*a+b)b")
a = Sym("a")


def test_pointed_acbc_states():
    d = build_pointed_dfa(ACBC)
    assert d.size == 4
    assert set(d.labels) == {
        parse_pre("(^ac+^bc)*|•"),
        parse_pre("(a^c+bc)*"),
        parse_pre("(ac+b^c)*"),
        Pre(ACBC, False),
    }
    assert d.start in d.finals


@pytest.mark.parametrize(
    "r, pointed, quotient, derivative, derivative_quotient",
    [
        (ACBC, 4, 3, 8, 3),
        (FIG1, 9, 9, 12, 9),
        (a, 3, 3, 3, 3),
        (EMPTY, 1, 1, 1, 1),
        (EPS, 1, 1, 1, 1),
    ],
)
def test_state_counts(r, pointed, quotient, derivative, derivative_quotient):
    assert build_pointed_dfa(r).size == pointed
    assert build_quotient_dfa(r).size == quotient
    assert build_derivative_dfa(r).size == derivative
    assert build_derivative_quotient_dfa(r).size == derivative_quotient


def test_trivial_automata():
    assert not build_pointed_dfa(EMPTY).finals
    eps = build_quotient_dfa(EPS)
    assert eps.finals == {eps.start}
    assert build_derivative_quotient_dfa(EMPTY).finals == frozenset()


def test_labels_share_carrier():
    for p in build_pointed_dfa(FIG1).labels:
        assert carrier_pre(p) == FIG1


def test_derivative_labels_are_canonical():
    for r in build_derivative_dfa(FIG1).labels:
        assert canon(r) == r


def test_run_dfa():
    d = build_pointed_dfa(FIG1)
    assert run_dfa(d, "ab")
    assert not run_dfa(d, "")
    assert not run_dfa(build_pointed_dfa(a), "z")


def test_minimality_examples():
    fig = build_pointed_dfa(FIG1)
    assert isomorphic(minimize(fig), fig)
    assert build_quotient_dfa(FIG1).size == minimize(fig).size
    acbc = build_pointed_dfa(ACBC)
    assert minimize(acbc).size < acbc.size
    one = build_pointed_dfa(EMPTY)
    assert isomorphic(minimize(one), one)


def test_quotients_isomorphic_on_examples():
    for r in [ACBC, a, FIG1, EMPTY]:
        assert isomorphic(build_quotient_dfa(r), build_derivative_quotient_dfa(r))


def _relabel(d: Dfa, perm: list[int]) -> Dfa:
    inv = {old: new for new, old in enumerate(perm)}
    return Dfa(
        alphabet=d.alphabet,
        labels=tuple(d.labels[old] for old in perm),
        start=inv[d.start],
        finals=frozenset(inv[f] for f in d.finals),
        trans=tuple(tuple(inv[t] for t in d.trans[old]) for old in perm),
    )


def test_isomorphic():
    d = build_pointed_dfa(FIG1)
    assert isomorphic(d, d)
    assert isomorphic(d, _relabel(d, list(reversed(range(d.size)))))
    assert canonical_form(d) == canonical_form(_relabel(d, list(reversed(range(d.size)))))
    assert not isomorphic(build_pointed_dfa(EPS), build_pointed_dfa(EMPTY))
    with pytest.raises(AlphabetMismatchError):
        isomorphic(build_pointed_dfa(a), build_pointed_dfa(Sym("b")))


def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa(alphabet=("a",), labels=(None,), start=1, finals=frozenset(), trans=((0,),))
    with pytest.raises(ValueError):
        Dfa(alphabet=("a",), labels=(None,), start=0, finals=frozenset(), trans=((),))


def test_build_dispatch():
    assert build(ACBC, "quotient").size == 3
    with pytest.raises(ValueError):
        build(ACBC, "glushkov")


def test_export_dot():
    dot = export_dot(build_quotient_dfa(ACBC))
    assert sum(1 for line in dot.splitlines() if line.lstrip().startswith("q") and "->" not in line) == 3
    assert "doublecircle" in dot
    assert dot == export_dot(build_quotient_dfa(ACBC))
    sink = export_dot(build_pointed_dfa(EMPTY))
    assert "doublecircle" not in sink
    assert "  q0 [label=\"\\\\0\", shape=circle];" in sink.splitlines()
    loop = Dfa(alphabet=("a", "b"), labels=(None,), start=0, finals=frozenset(), trans=((0, 0),))
    lines = export_dot(loop).splitlines()
    assert '  q0 -> q0 [label="a"];' in lines and '  q0 -> q0 [label="b"];' in lines


def test_export_json():
    d = build_quotient_dfa(ACBC)
    doc = json.loads(export_json(d))
    assert list(doc) == ["version", "source", "construction", "alphabet", "states", "start", "transitions"]
    assert doc == export_dict(d)
    assert doc["alphabet"] == ["a", "b", "c"]
    assert len(doc["states"]) == 3
    assert len(doc["transitions"]) == 9
    assert doc["source"] == "(ac+bc)*"


@given(regexes(6))
@settings(max_examples=100, deadline=None)
def test_engines_agree(r):
    dfas = [build_pointed_dfa(r), build_quotient_dfa(r), build_derivative_dfa(r), build_derivative_quotient_dfa(r)]
    for w in all_words("abc", 4):
        expected = member_oracle(r, w)
        assert all(run_dfa(d, w) == expected for d in dfas)
        assert derivative_match(r, w) == expected


@given(regexes())
@settings(max_examples=100, deadline=None)
def test_state_bound_and_monotone_quotient(r):
    pointed = build_pointed_dfa(r)
    assert pointed.size <= 2 ** (symbol_count(r) + 1)
    assert minimize(pointed).size <= build_quotient_dfa(r).size <= pointed.size


@given(regexes())
@settings(max_examples=100, deadline=None)
def test_quotients_isomorphic(r):
    assert isomorphic(build_quotient_dfa(r), build_derivative_quotient_dfa(r))


@given(regexes(6))
@settings(max_examples=100, deadline=None)
def test_minimize_sound_and_idempotent(r):
    d = build_pointed_dfa(r)
    m = minimize(d)
    assert isomorphic(minimize(m), m)
    assert run_dfa(m, "") == nullable(r)
    for w in all_words("abc", 4):
        assert run_dfa(m, w) == run_dfa(d, w)
