"""Brzozowski derivatives and the derivative-based matcher."""

from __future__ import annotations

from functools import lru_cache

from .dfa import Dfa, explore
from .readback import RegexSet, canon, regex_set
from .syntax import EMPTY, EPS, Cat, Item, PSym, Star, Sum, Sym, nullable, render, symbols

DEFAULT_MAX_STATES = 1 << 17


@lru_cache(maxsize=1 << 18)
def derive_char(r: Item, a: str) -> Item:
    """Raw syntactic derivative of ``r`` by ``a``; nothing is simplified."""
    if isinstance(r, Sym | PSym):
        return EPS if r.char == a else EMPTY
    if isinstance(r, Sum):
        return Sum(derive_char(r.left, a), derive_char(r.right, a))
    if isinstance(r, Cat):
        head = Cat(derive_char(r.left, a), r.right)
        return Sum(head, derive_char(r.right, a)) if nullable(r.left) else head
    if isinstance(r, Star):
        return Cat(derive_char(r.inner, a), r)
    return EMPTY


def derive_word(r: Item, w: str) -> Item:
    for a in w:
        r = derive_char(r, a)
    return r


def derive_set(s: RegexSet, a: str) -> RegexSet:
    return regex_set(derive_char(r, a) for r in s)


def derivative_match(r: Item, w: str) -> bool:
    # canonicalising between steps keeps the expression from growing
    r = canon(r)
    for a in w:
        r = canon(derive_char(r, a))
    return nullable(r)


def _step(r: Item, a: str) -> Item:
    return canon(derive_char(r, a))


def build_derivative_dfa(r: Item, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    """Derivative automaton of ``r``; states are derivatives modulo :func:`canon`."""
    if max_states < 1:
        raise ValueError("max_states must be at least 1")
    return explore(
        canon(r),
        symbols(r),
        _step,
        nullable,
        max_states=max_states,
        construction="derivative",
        source=render(r),
    )
