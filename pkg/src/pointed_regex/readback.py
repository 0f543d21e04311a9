"""Read-back of pointed expressions into sets of plain regexes.

Sets of regexes are read additively and represented as sorted, duplicate
free tuples (``RegexSet``), so set equality is tuple equality.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import LimitExceededError
from .oracle import MAX_ENUM_LEN, member_oracle
from .syntax import EPS, Cat, Item, Pre, PSym, Star, Sum, Sym, carrier, nullable, sort_key

RegexSet = tuple  # tuple[Item, ...], sorted by sort_key, no duplicates


def regex_set(elems: Iterable[Item]) -> RegexSet:
    return tuple(sorted(set(elems), key=sort_key))


def set_union(*sets: RegexSet) -> RegexSet:
    return regex_set(r for s in sets for r in s)


def set_concat_right(s: RegexSet, r: Item) -> RegexSet:
    return regex_set(Cat(x, r) for x in s)


def _eps(b: bool) -> RegexSet:
    return (EPS,) if b else ()


@lru_cache(maxsize=1 << 18)
def readback(e: Item) -> RegexSet:
    if isinstance(e, PSym):
        return (Sym(e.char),)
    if isinstance(e, Sum):
        return set_union(readback(e.left), readback(e.right))
    if isinstance(e, Cat):
        return set_union(set_concat_right(readback(e.left), carrier(e.right)), readback(e.right))
    if isinstance(e, Star):
        return set_concat_right(readback(e.inner), Star(carrier(e.inner)))
    return ()


def readback_pre(p: Pre) -> RegexSet:
    return set_union(readback(p.item), _eps(p.fin))


@lru_cache(maxsize=1 << 18)
def nf(r: Item) -> RegexSet:
    """Look-ahead normal form: summands each starting with a symbol."""
    if isinstance(r, Sym | PSym):
        return (Sym(r.char),)
    if isinstance(r, Sum):
        return set_union(nf(r.left), nf(r.right))
    if isinstance(r, Cat):
        head = set_concat_right(nf(r.left), r.right)
        return set_union(head, nf(r.right)) if nullable(r.left) else head
    if isinstance(r, Star):
        return set_concat_right(nf(r.inner), r)
    return ()


def nf_eps(r: Item) -> RegexSet:
    return set_union(nf(r), _eps(nullable(r)))


def nf_eps_set(s: RegexSet) -> RegexSet:
    """``nf_eps`` lifted to a set by taking the union of images."""
    return set_union(*(nf_eps(r) for r in s))


def _summands(r: Item, out: list) -> None:
    if isinstance(r, Sum):
        _summands(r.left, out)
        _summands(r.right, out)
    else:
        out.append(r)


def _factors(r: Item, out: list) -> None:
    if isinstance(r, Cat):
        _factors(r.left, out)
        _factors(r.right, out)
    else:
        out.append(r)


def _right_nest(ctor, parts: list) -> Item:
    node = parts[-1]
    for part in reversed(parts[:-1]):
        node = ctor(part, node)
    return node


@lru_cache(maxsize=1 << 18)
def canon(r: Item) -> Item:
    """Canonical representative modulo ACI of sum and associativity of concatenation.

    No unit or absorption law for the empty set or epsilon is applied.
    """
    if isinstance(r, Sum):
        parts: list = []
        _summands(r, parts)
        return _right_nest(Sum, list(regex_set(canon(p) for p in parts)))
    if isinstance(r, Cat):
        parts = []
        _factors(r, parts)
        flat: list = []
        # a collapsed sum such as ab+ab yields a fresh Cat to splice in
        for p in parts:
            _factors(canon(p), flat)
        return _right_nest(Cat, flat)
    if isinstance(r, Star):
        return Star(canon(r.inner))
    return r


def canon_set(s: RegexSet) -> RegexSet:
    return regex_set(canon(r) for r in s)


def lp_member(p: Pre, w: str) -> bool:
    """Membership in the language of a pre, decided through its read-back."""
    if len(w) > MAX_ENUM_LEN:
        raise LimitExceededError(f"word length {len(w)} exceeds {MAX_ENUM_LEN}")
    return any(member_oracle(r, w) for r in readback_pre(p))
