import pytest
from hypothesis import given

from pointed_regex.errors import ParseError
from pointed_regex.pointed import embed
from pointed_regex.syntax import (
    EMPTY,
    EPS,
    Cat,
    Pre,
    PSym,
    Star,
    Sum,
    Sym,
    carrier,
    carrier_pre,
    is_pointless,
    nullable,
    parse,
    parse_item,
    parse_pre,
    render,
    render_item,
    render_pre,
    structural_compare,
    symbol_count,
    symbols,
)

from .strategies import items, pres, regexes

a, b, c = Sym("a"), Sym("b"), Sym("c")


def test_precedence():
    assert parse("(a+b)*c") == Cat(Star(Sum(a, b)), c)
    assert parse("a+bc*") == Sum(a, Cat(b, Star(c)))
    assert parse("ab+c") == Sum(Cat(a, b), c)


def test_left_associative():
    assert parse("a+b+c") == Sum(Sum(a, b), c)
    assert parse("abc") == Cat(Cat(a, b), c)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("\\e", EPS),
        ("\\0", EMPTY),
        ("\\+", Sym("+")),
        ("\\^a", Cat(Sym("^"), a)),
        ("a**", Star(Star(a))),
        ("7", Sym("7")),
    ],
)
def test_atoms(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text, message, offset",
    [
        ("a(b", "unbalanced parenthesis", 1),
        ("ab)", "unbalanced parenthesis", 2),
        ("\\q", "unknown escape", 0),
        ("a\\", "dangling escape", 1),
        ("", "empty expression", 0),
        ("a+", "empty expression", 2),
        ("()", "empty expression", 1),
        ("*a", "nothing to repeat", 0),
        ("a.b", "expected a symbol", 1),
        ("^a", "points are not allowed", 0),
    ],
)
def test_parse_errors(text, message, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert message in info.value.message
    assert info.value.offset == offset


def test_render_examples():
    assert render(Star(Sum(a, b))) == "(a+b)*"
    assert render_item(Cat(PSym("a"), b)) == "^ab"
    assert render_pre(Pre(a, True)) == "a|•"
    assert render_item(Star(PSym("b"))) == "(^b)*"
    assert render(Sum(a, Sum(b, c))) == "a+(b+c)"
    assert render(Cat(a, Cat(b, c))) == "a(bc)"
    assert render(Cat(Sum(EPS, EMPTY), Sym("*"))) == "(\\e+\\0)\\*"


def test_pre_round_trip():
    p = Pre(Cat(Star(PSym("b")), PSym("a")), True)
    assert parse_pre(render_pre(p)) == p
    assert parse_pre("(^b)*^a") == Pre(Cat(Star(PSym("b")), PSym("a")), False)


@given(regexes())
def test_parse_render_round_trip(r):
    assert parse(render(r)) == r


@given(items())
def test_item_round_trip(e):
    assert parse_item(render_item(e)) == e


@given(pres())
def test_pre_render_round_trip(p):
    assert parse_pre(render_pre(p)) == p


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a*", True),
        ("a+\\e", True),
        ("(a+\\e)(b*a+b)b", False),
        ("\\0", False),
        ("\\0*", True),
        ("(a+\\e)b*", True),
    ],
)
def test_nullable(text, expected):
    assert nullable(parse(text)) is expected


def test_carrier():
    e = parse_item("(^a+\\e)((^b)*^a+^b)b")
    assert carrier(e) == parse("(a+\\e)(b*a+b)b")
    assert carrier(PSym("a")) == a
    plain = parse("(ac+bc)*")
    assert carrier(plain) == plain
    assert carrier_pre(Pre(PSym("a"), True)) == a


@given(regexes())
def test_carrier_of_embed(r):
    assert carrier(embed(r)) == r
    assert is_pointless(embed(r))


def test_symbols_and_count():
    r = parse("(a+\\e)(b*a+b)b")
    assert symbols(r) == ("a", "b")
    assert symbol_count(r) == 5
    assert symbols(EPS) == ()


def test_structural_compare_examples():
    assert structural_compare(EMPTY, EPS) == -1
    assert structural_compare(a, a) == 0
    ab, a_or_b = parse("ab"), parse("a+b")
    # Sum ranks below Cat, so children are never consulted
    assert structural_compare(ab, a_or_b) == 1
    assert structural_compare(a_or_b, ab) == -1
    assert structural_compare(Cat(c, c), Sum(a, a)) == 1


@given(regexes(), regexes())
def test_compare_antisymmetric_and_total(r1, r2):
    x, y = structural_compare(r1, r2), structural_compare(r2, r1)
    assert x == -y
    assert (x == 0) == (r1 == r2)


@given(regexes(4), regexes(4), regexes(4))
def test_compare_transitive(r1, r2, r3):
    if structural_compare(r1, r2) <= 0 and structural_compare(r2, r3) <= 0:
        assert structural_compare(r1, r3) <= 0


def test_hash_consistent_with_equality():
    x, y = parse("(ab+c)*a"), parse("(ab+c)*a")
    assert x == y and hash(x) == hash(y)
    assert len({x, y, parse("(ab+c)*b")}) == 2
