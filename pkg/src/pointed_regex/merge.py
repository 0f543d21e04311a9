"""Merging the points of two pointed expressions over the same carrier.

A position is pointed in ``merge_items(e1, e2)`` iff it is pointed in
``e1`` or in ``e2``.  This is the syntactic counterpart of taking the
union of two sets of NFA states.
"""

from __future__ import annotations

from .errors import CarrierMismatchError
from .syntax import Cat, Item, Pre, PSym, Star, Sum, Sym, render_item


def _mismatch(e1: Item, e2: Item) -> CarrierMismatchError:
    return CarrierMismatchError(
        f"cannot merge {render_item(e1)} and {render_item(e2)}: carriers differ"
    )


def merge_items(e1: Item, e2: Item) -> Item:
    if isinstance(e1, Sym | PSym) and isinstance(e2, Sym | PSym):
        if e1.char != e2.char:
            raise _mismatch(e1, e2)
        return PSym(e1.char) if isinstance(e1, PSym) or isinstance(e2, PSym) else e1
    if type(e1) is not type(e2):
        raise _mismatch(e1, e2)
    if isinstance(e1, Sum):
        return Sum(merge_items(e1.left, e2.left), merge_items(e1.right, e2.right))
    if isinstance(e1, Cat):
        return Cat(merge_items(e1.left, e2.left), merge_items(e1.right, e2.right))
    if isinstance(e1, Star):
        return Star(merge_items(e1.inner, e2.inner))
    return e1


def merge_pres(p1: Pre, p2: Pre) -> Pre:
    return Pre(merge_items(p1.item, p2.item), p1.fin or p2.fin)
