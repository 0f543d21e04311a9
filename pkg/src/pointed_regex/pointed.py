"""Broadcasting points, the lifted constructors and the ``move`` transition.

``broadcast`` is co-recursive with ``cat_lift`` and ``star_lift``: when the
trailing point of a left operand survives, it is broadcast into what follows.
"""

from __future__ import annotations

from .syntax import EMPTY, EPS, Cat, EmptySet, Epsilon, Item, Pre, PSym, Star, Sum, Sym


def embed(r: Item) -> Item:
    """A plain regex read as a pointed item with no points (the identity)."""
    return r


def plus_lift(p1: Pre, p2: Pre) -> Pre:
    return Pre(Sum(p1.item, p2.item), p1.fin or p2.fin)


def cat_lift(p1: Pre, p2: Pre) -> Pre:
    if not p1.fin:
        return Pre(Cat(p1.item, p2.item), p2.fin)
    b = broadcast(p2.item)
    return Pre(Cat(p1.item, b.item), p2.fin or b.fin)


def star_lift(p: Pre) -> Pre:
    if not p.fin:
        return Pre(Star(p.item), False)
    return Pre(Star(broadcast(p.item).item), True)


def broadcast(e: Item) -> Pre:
    """Propagate an initial point through ``e`` (the syntactic epsilon-closure)."""
    if isinstance(e, EmptySet):
        return Pre(EMPTY, False)
    if isinstance(e, Epsilon):
        return Pre(EPS, True)
    if isinstance(e, Sym | PSym):
        return Pre(PSym(e.char), False)
    if isinstance(e, Sum):
        return plus_lift(broadcast(e.left), broadcast(e.right))
    if isinstance(e, Cat):
        return cat_lift(broadcast(e.left), Pre(e.right, False))
    if isinstance(e, Star):
        return Pre(Star(broadcast(e.inner).item), True)
    raise TypeError(f"not a pointed item: {e!r}")


def broadcast_pre(p: Pre) -> Pre:
    b = broadcast(p.item)
    return Pre(b.item, p.fin or b.fin)


def move(e: Item, a: str) -> Pre:
    """Advance every point standing before an ``a``; erase all the others."""
    if isinstance(e, PSym):
        return Pre(Sym(e.char), e.char == a)
    if isinstance(e, Sum):
        return plus_lift(move(e.left, a), move(e.right, a))
    if isinstance(e, Cat):
        return cat_lift(move(e.left, a), move(e.right, a))
    if isinstance(e, Star):
        return star_lift(move(e.inner, a))
    # empty set, epsilon, plain symbol
    return Pre(e, False)


def move_pre(p: Pre, a: str) -> Pre:
    # the trailing point cannot consume anything
    return move(p.item, a)


def move_star(p: Pre, w: str) -> Pre:
    for a in w:
        p = move_pre(p, a)
    return p


def is_final(p: Pre) -> bool:
    return p.fin


def initial_pre(r: Item) -> Pre:
    """Start state of the pointed automaton of ``r``."""
    return broadcast(embed(r))
