"""Seeded random regexes, pointed items and pres for test corpora."""

from __future__ import annotations

import random

from .syntax import EMPTY, EPS, Cat, Item, Pre, PSym, Star, Sum, Sym

STAR_PROB = 0.25
EPS_PROB = 0.08
EMPTY_PROB = 0.04


def random_regex(rng: random.Random, max_leaves: int, alphabet: str = "abc") -> Item:
    """A random regex with between 1 and ``max_leaves`` leaves.

    A single-leaf result is always a bare atom; stars wrap proper subterms
    of larger trees only.
    """
    if max_leaves < 1:
        raise ValueError("max_leaves must be at least 1")
    n = rng.randint(1, max_leaves)
    if n == 1:
        return _leaf(rng, alphabet)
    return _tree(rng, n, alphabet, top=True)


def _leaf(rng: random.Random, alphabet: str) -> Item:
    x = rng.random()
    if x < EMPTY_PROB:
        return EMPTY
    if x < EMPTY_PROB + EPS_PROB:
        return EPS
    return Sym(rng.choice(alphabet))


def _tree(rng: random.Random, n: int, alphabet: str, top: bool = False) -> Item:
    if n == 1:
        node = _leaf(rng, alphabet)
    else:
        k = rng.randint(1, n - 1)
        ctor = Sum if rng.random() < 0.45 else Cat
        node = ctor(_tree(rng, k, alphabet), _tree(rng, n - k, alphabet))
    if rng.random() < STAR_PROB and not (top and n == 1):
        node = Star(node)
    return node


def random_pointing(rng: random.Random, r: Item, prob: float = 0.4) -> Item:
    """Point each symbol occurrence of ``r`` independently with probability ``prob``."""
    if isinstance(r, Sym | PSym):
        return PSym(r.char) if rng.random() < prob else Sym(r.char)
    if isinstance(r, Sum):
        return Sum(random_pointing(rng, r.left, prob), random_pointing(rng, r.right, prob))
    if isinstance(r, Cat):
        return Cat(random_pointing(rng, r.left, prob), random_pointing(rng, r.right, prob))
    if isinstance(r, Star):
        return Star(random_pointing(rng, r.inner, prob))
    return r


def random_item(rng: random.Random, max_leaves: int, alphabet: str = "abc") -> Item:
    return random_pointing(rng, random_regex(rng, max_leaves, alphabet))


def random_pre(rng: random.Random, r: Item) -> Pre:
    """A random pre whose carrier is ``r``."""
    return Pre(random_pointing(rng, r), rng.random() < 0.5)


def regex_corpus(seed: int, count: int, max_leaves: int, alphabet: str = "abc") -> list[Item]:
    rng = random.Random(seed)
    return [random_regex(rng, max_leaves, alphabet) for _ in range(count)]
