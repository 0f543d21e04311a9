"""Regular expressions and pointed items: AST, concrete syntax, structural helpers.

A pointed item is a regex whose symbol leaves may be replaced by ``PSym``
(a symbol with a point in front of it).  Plain regexes are simply items
without any ``PSym`` leaf, so the same node classes serve both.

Concrete syntax::

    expr   := term ('+' term)*
    term   := factor+
    factor := atom '*'*
    atom   := literal | '\\0' | '\\e' | '\\' reserved | '^' literal | '(' expr ')'

Literals are ASCII letters and digits.  Reserved characters are
``( ) + * \\ ^ |`` and may be used as symbols when escaped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .errors import ParseError

RESERVED = frozenset("()+*\\^|")
FIN_SUFFIX = "|•"


@dataclass(frozen=True, slots=True)
class EmptySet:
    def __repr__(self):
        return "EmptySet()"


@dataclass(frozen=True, slots=True)
class Epsilon:
    def __repr__(self):
        return "Epsilon()"


@dataclass(frozen=True, slots=True)
class Sym:
    char: str


@dataclass(frozen=True, slots=True)
class PSym:
    """A pointed symbol: the position just before ``char``."""

    char: str


@dataclass(frozen=True, slots=True)
class Sum:
    left: "Item"
    right: "Item"
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def _children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Cat:
    left: "Item"
    right: "Item"
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def _children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Star:
    inner: "Item"
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def _children(self):
        return (self.inner,)


def _cached_hash(self):
    h = self._hash
    if not h:
        h = hash((type(self).__name__, *self._children())) or 1
        object.__setattr__(self, "_hash", h)
    return h


# composite nodes memoise their hash: the caches below hash whole trees constantly
for _cls in (Sum, Cat, Star):
    _cls.__hash__ = _cached_hash


Item = Union[EmptySet, Epsilon, Sym, PSym, Sum, Cat, Star]
# A Regex is an Item with no PSym leaf; the distinction is not enforced by type.
Regex = Item

EMPTY = EmptySet()
EPS = Epsilon()


@dataclass(frozen=True, slots=True)
class Pre:
    """A pointed regular expression: an item plus the trailing-point flag."""

    item: Item
    fin: bool = False


def is_literal_char(c: str) -> bool:
    return len(c) == 1 and c.isascii() and c.isalnum()


def is_symbol_char(c: str) -> bool:
    return is_literal_char(c) or c in RESERVED


# -- structural utilities ---------------------------------------------------

def nullable(r: Item) -> bool:
    """True iff the empty word belongs to the language of the carrier of ``r``."""
    if isinstance(r, Epsilon | Star):
        return True
    if isinstance(r, Sum):
        return nullable(r.left) or nullable(r.right)
    if isinstance(r, Cat):
        return nullable(r.left) and nullable(r.right)
    return False


def carrier(e: Item) -> Item:
    """Erase every point of ``e``."""
    if isinstance(e, PSym):
        return Sym(e.char)
    if isinstance(e, Sum):
        return Sum(carrier(e.left), carrier(e.right))
    if isinstance(e, Cat):
        return Cat(carrier(e.left), carrier(e.right))
    if isinstance(e, Star):
        return Star(carrier(e.inner))
    return e


def carrier_pre(p: Pre) -> Item:
    return carrier(p.item)


def is_pointless(e: Item) -> bool:
    if isinstance(e, PSym):
        return False
    if isinstance(e, Sum | Cat):
        return is_pointless(e.left) and is_pointless(e.right)
    if isinstance(e, Star):
        return is_pointless(e.inner)
    return True


def symbols(r: Item) -> tuple[str, ...]:
    """Distinct symbols occurring in ``r``, sorted."""
    found: set[str] = set()
    stack = [r]
    while stack:
        node = stack.pop()
        if isinstance(node, Sym | PSym):
            found.add(node.char)
        elif isinstance(node, Sum | Cat):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Star):
            stack.append(node.inner)
    return tuple(sorted(found))


def symbol_count(r: Item) -> int:
    """Number of symbol occurrences (pointed or not)."""
    if isinstance(r, Sym | PSym):
        return 1
    if isinstance(r, Sum | Cat):
        return symbol_count(r.left) + symbol_count(r.right)
    if isinstance(r, Star):
        return symbol_count(r.inner)
    return 0


_RANK = {EmptySet: 0, Epsilon: 1, Sym: 2, PSym: 3, Sum: 4, Cat: 5, Star: 6}


@lru_cache(maxsize=1 << 18)
def sort_key(r: Item) -> tuple:
    """Key realising the structural order: constructor rank, symbol, then children."""
    rank = _RANK[type(r)]
    if isinstance(r, Sym | PSym):
        return (rank, r.char)
    if isinstance(r, Sum | Cat):
        return (rank, sort_key(r.left), sort_key(r.right))
    if isinstance(r, Star):
        return (rank, sort_key(r.inner))
    return (rank,)


def structural_compare(r1: Item, r2: Item) -> int:
    """Three-way structural comparison; returns -1, 0 or 1."""
    if r1 == r2:
        return 0
    k1, k2 = sort_key(r1), sort_key(r2)
    return -1 if k1 < k2 else 1


# -- parsing ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, allow_points: bool):
        self.text = text
        self.pos = 0
        self.allow_points = allow_points

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Item:
        if not self.text:
            raise ParseError("empty expression", 0)
        node = self.expr()
        c = self.peek()
        if c == ")":
            raise ParseError("unbalanced parenthesis", self.pos)
        if c is not None:
            raise ParseError(f"unexpected character {c!r}", self.pos)
        return node

    def expr(self) -> Item:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = Sum(node, self.term())
        return node

    def term(self) -> Item:
        node = None
        while True:
            c = self.peek()
            if c is None or c in "+)":
                break
            f = self.factor()
            node = f if node is None else Cat(node, f)
        if node is None:
            raise ParseError("empty expression", self.pos)
        return node

    def factor(self) -> Item:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def literal(self) -> str:
        start = self.pos
        c = self.peek()
        if c is None:
            raise ParseError("expected a symbol", start)
        if c == "\\":
            nxt = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else None
            if nxt is None:
                raise ParseError("dangling escape", start)
            if nxt not in RESERVED:
                raise ParseError(f"unknown escape \\{nxt}", start)
            self.pos += 2
            return nxt
        if is_literal_char(c):
            self.pos += 1
            return c
        raise ParseError(f"expected a symbol, found {c!r}", start)

    def atom(self) -> Item:
        start = self.pos
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise ParseError("unbalanced parenthesis", start)
            self.pos += 1
            return node
        if c == "*":
            raise ParseError("nothing to repeat", start)
        if c == "^":
            if not self.allow_points:
                raise ParseError("points are not allowed in a plain regex", start)
            self.pos += 1
            return PSym(self.literal())
        if c == "\\":
            nxt = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else None
            if nxt == "0":
                self.pos += 2
                return EMPTY
            if nxt == "e":
                self.pos += 2
                return EPS
        return Sym(self.literal())


def parse(text: str) -> Item:
    """Parse a plain regular expression."""
    return _Parser(text, allow_points=False).parse()


def parse_item(text: str) -> Item:
    """Parse a pointed item (``^a`` marks a pointed symbol)."""
    return _Parser(text, allow_points=True).parse()


def parse_pre(text: str) -> Pre:
    """Parse a pre: a pointed item optionally followed by ``|•``."""
    if text.endswith(FIN_SUFFIX):
        return Pre(parse_item(text[: -len(FIN_SUFFIX)]), True)
    return Pre(parse_item(text), False)


# -- rendering --------------------------------------------------------------

_SUM, _CAT, _STAR, _ATOM = 0, 1, 2, 3


def _sym_text(c: str) -> str:
    return "\\" + c if c in RESERVED else c


def _prec(e: Item) -> int:
    if isinstance(e, Sum):
        return _SUM
    if isinstance(e, Cat):
        return _CAT
    # a pointed symbol is parenthesised under a star: "(^b)*"
    if isinstance(e, Star | PSym):
        return _STAR
    return _ATOM


def _render(e: Item, level: int) -> str:
    if isinstance(e, EmptySet):
        text = "\\0"
    elif isinstance(e, Epsilon):
        text = "\\e"
    elif isinstance(e, Sym):
        text = _sym_text(e.char)
    elif isinstance(e, PSym):
        text = "^" + _sym_text(e.char)
    elif isinstance(e, Sum):
        text = _render(e.left, _SUM) + "+" + _render(e.right, _CAT)
    elif isinstance(e, Cat):
        text = _render(e.left, _CAT) + _render(e.right, _STAR)
    elif isinstance(e, Star):
        text = _render(e.inner, _ATOM) + "*"
    else:
        raise TypeError(f"not a regex node: {e!r}")
    return f"({text})" if _prec(e) < level else text


def render(r: Item) -> str:
    return _render(r, _SUM)


def render_item(e: Item) -> str:
    return _render(e, _SUM)


def render_pre(p: Pre) -> str:
    return render_item(p.item) + (FIN_SUFFIX if p.fin else "")
