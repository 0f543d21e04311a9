"""Brute-force ground truth for ``L(r)``.

Deliberately naive and independent of the pointed and derivative engines:
membership is decided by span search over the word, enumeration by
evaluating the language equations on length-truncated finite sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import LimitExceededError
from .syntax import Cat, Epsilon, Item, PSym, Star, Sum, Sym, carrier, symbols

MAX_ENUM_LEN = 12


@dataclass(frozen=True)
class LanguageSample:
    max_len: int
    words: tuple[str, ...]

    def __contains__(self, w: str) -> bool:
        return w in self.words


def word_order(w: str) -> tuple[int, str]:
    return (len(w), w)


def member_oracle(r: Item, w: str) -> bool:
    """Decide ``w in L(r)`` by memoised span search.

    ``ends(node, i)`` is the set of positions ``j`` such that ``w[i:j]`` is
    in the language of ``node``.  Star only iterates on non-empty steps.
    """
    memo: dict[tuple[int, int], frozenset[int]] = {}
    n = len(w)

    def ends(node: Item, i: int) -> frozenset[int]:
        key = (id(node), i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(node, Epsilon):
            out = frozenset((i,))
        elif isinstance(node, Sym | PSym):
            out = frozenset((i + 1,)) if i < n and w[i] == node.char else frozenset()
        elif isinstance(node, Sum):
            out = ends(node.left, i) | ends(node.right, i)
        elif isinstance(node, Cat):
            out = frozenset(k for j in ends(node.left, i) for k in ends(node.right, j))
        elif isinstance(node, Star):
            acc = {i}
            for j in ends(node.inner, i):
                if j > i:
                    acc |= ends(node, j)
            out = frozenset(acc)
        else:
            out = frozenset()
        memo[key] = out
        return out

    # the tree is kept alive for the whole call, so id() keys are stable
    return n in ends(r, 0)


def _truncated_language(r: Item, max_len: int) -> frozenset[str]:
    if isinstance(r, Epsilon):
        return frozenset(("",))
    if isinstance(r, Sym | PSym):
        return frozenset((r.char,)) if max_len >= 1 else frozenset()
    if isinstance(r, Sum):
        return _truncated_language(r.left, max_len) | _truncated_language(r.right, max_len)
    if isinstance(r, Cat):
        left = _truncated_language(r.left, max_len)
        right = _truncated_language(r.right, max_len)
        return frozenset(u + v for u in left for v in right if len(u) + len(v) <= max_len)
    if isinstance(r, Star):
        base = [u for u in _truncated_language(r.inner, max_len) if u]
        result = {""}
        frontier = {""}
        while frontier:
            frontier = {
                u + v for u in frontier for v in base if len(u) + len(v) <= max_len
            } - result
            result |= frontier
        return frozenset(result)
    return frozenset()


def enumerate_language(r: Item, max_len: int) -> LanguageSample:
    """All words of ``L(r)`` of length at most ``max_len``, shortlex-sorted."""
    if max_len > MAX_ENUM_LEN:
        raise LimitExceededError(f"max_len {max_len} exceeds {MAX_ENUM_LEN}")
    if max_len < 0:
        raise LimitExceededError("max_len must be non-negative")
    words = _truncated_language(carrier(r), max_len)
    return LanguageSample(max_len, tuple(sorted(words, key=word_order)))


def all_words(alphabet, max_len: int):
    """Every word over ``alphabet`` of length ``<= max_len``, in shortlex order."""
    alphabet = sorted(alphabet)
    for n in range(max_len + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


def enumerate_by_membership(r: Item, max_len: int) -> LanguageSample:
    """Same result as :func:`enumerate_language`, computed word by word."""
    if max_len > MAX_ENUM_LEN:
        raise LimitExceededError(f"max_len {max_len} exceeds {MAX_ENUM_LEN}")
    r = carrier(r)
    words = [w for w in all_words(symbols(r), max_len) if member_oracle(r, w)]
    return LanguageSample(max_len, tuple(words))


def same_language_up_to(r1: Item, r2: Item, max_len: int) -> bool:
    # words with a symbol foreign to a regex are never in its language,
    # so comparing each regex over its own symbols is comparing over the union
    return enumerate_language(r1, max_len).words == enumerate_language(r2, max_len).words
