"""DFA data model and construction-independent machinery.

States are dense indices in discovery (breadth-first) order.  Each state
keeps a label, either a :class:`Pre` or a plain regex, for display.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Hashable

from .errors import AlphabetMismatchError, StateBudgetExceeded
from .syntax import Pre, render, render_pre

EXPORT_VERSION = 1


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple[str, ...]
    labels: tuple[Any, ...]
    start: int
    finals: frozenset[int]
    trans: tuple[tuple[int, ...], ...]  # trans[state][alphabet index]
    construction: str = ""
    source: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if not 0 <= self.start < n:
            raise ValueError("start state out of range")
        if any(not 0 <= f < n for f in self.finals):
            raise ValueError("final state out of range")
        if len(self.trans) != n or any(
            len(row) != len(self.alphabet) or any(not 0 <= t < n for t in row)
            for row in self.trans
        ):
            raise ValueError("transition table is not total")

    @property
    def size(self) -> int:
        return len(self.labels)

    def step(self, state: int, a: str) -> int | None:
        try:
            col = self.alphabet.index(a)
        except ValueError:
            return None
        return self.trans[state][col]


def label_text(label: Any) -> str:
    if isinstance(label, Pre):
        return render_pre(label)
    if label is None:
        return ""
    return render(label)


def explore(
    start,
    alphabet,
    step: Callable[[Any, str], Any],
    is_final: Callable[[Any], bool],
    key: Callable[[Any], Hashable] = lambda s: s,
    max_states: int | None = None,
    construction: str = "",
    source: str = "",
) -> Dfa:
    """Breadth-first worklist closure of ``start`` under ``step``.

    A successor whose ``key`` matches an already known state is redirected to
    that state's representative; otherwise it becomes a new representative.
    """
    alphabet = tuple(alphabet)
    reps = [start]
    index = {key(start): 0}
    rows: list[tuple[int, ...]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for a in alphabet:
            nxt = step(reps[i], a)
            k = key(nxt)
            j = index.get(k)
            if j is None:
                if max_states is not None and len(reps) >= max_states:
                    raise StateBudgetExceeded(f"more than {max_states} states")
                j = index[k] = len(reps)
                reps.append(nxt)
                queue.append(j)
            row.append(j)
        rows.append(tuple(row))
    # BFS pops states in index order, so rows line up with reps
    finals = frozenset(i for i, s in enumerate(reps) if is_final(s))
    return Dfa(alphabet, tuple(reps), 0, finals, tuple(rows), construction, source)


def run_dfa(d: Dfa, w: str) -> bool:
    state = d.start
    for a in w:
        state = d.step(state, a)
        if state is None:
            return False
    return state in d.finals


def _bfs_order(d: Dfa) -> list[int]:
    seen = {d.start: 0}
    order = [d.start]
    for s in order:
        for t in d.trans[s]:
            if t not in seen:
                seen[t] = len(order)
                order.append(t)
    return order


def _renumber(d: Dfa, order: list[int], labels=None, construction=None) -> Dfa:
    pos = {s: i for i, s in enumerate(order)}
    return Dfa(
        d.alphabet,
        tuple(labels) if labels is not None else tuple(d.labels[s] for s in order),
        0,
        frozenset(pos[s] for s in order if s in d.finals),
        tuple(tuple(pos[t] for t in d.trans[s]) for s in order),
        d.construction if construction is None else construction,
        d.source,
    )


def canonical_form(d: Dfa) -> tuple:
    """Label-free shape of the accessible part, invariant under renumbering."""
    c = _renumber(d, _bfs_order(d))
    return (c.alphabet, c.finals, c.trans)


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatchError(f"{d1.alphabet} != {d2.alphabet}")
    return canonical_form(d1) == canonical_form(d2)


def minimize(d: Dfa) -> Dfa:
    """Moore-style partition refinement from the final/non-final split.

    Unreachable states are dropped first.  Each block is labelled by its
    earliest reachable member; the result is numbered breadth-first.
    """
    d = _renumber(d, _bfs_order(d))
    block = [1 if s in d.finals else 0 for s in range(d.size)]
    n_blocks = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new_block = []
        for s in range(d.size):
            sig = (block[s], tuple(block[t] for t in d.trans[s]))
            new_block.append(sigs.setdefault(sig, len(sigs)))
        block = new_block
        if len(sigs) == n_blocks:
            break
        n_blocks = len(sigs)
    rep: dict[int, int] = {}
    for s in range(d.size):
        rep.setdefault(block[s], s)
    reps = sorted(rep.values())
    quotient = Dfa(
        d.alphabet,
        tuple(d.labels[s] for s in reps),
        reps.index(rep[block[d.start]]),
        frozenset(i for i, s in enumerate(reps) if s in d.finals),
        tuple(tuple(reps.index(rep[block[t]]) for t in d.trans[s]) for s in reps),
        d.construction + "+min" if d.construction else "min",
        d.source,
    )
    return _renumber(quotient, _bfs_order(quotient))


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(d: Dfa) -> str:
    lines = [
        f"digraph {_dot_quote(d.construction or 'dfa')} {{",
        "  rankdir=LR;",
        "  node [shape=circle];",
        "  start [shape=point];",
        f"  start -> q{d.start};",
    ]
    for i, label in enumerate(d.labels):
        shape = "doublecircle" if i in d.finals else "circle"
        lines.append(f"  q{i} [label={_dot_quote(label_text(label))}, shape={shape}];")
    for i, row in enumerate(d.trans):
        for a, j in sorted(zip(d.alphabet, row)):
            lines.append(f"  q{i} -> q{j} [label={_dot_quote(a)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dict(d: Dfa) -> dict:
    return {
        "version": EXPORT_VERSION,
        "source": d.source,
        "construction": d.construction,
        "alphabet": list(d.alphabet),
        "states": [
            {"index": i, "label": label_text(label), "final": i in d.finals}
            for i, label in enumerate(d.labels)
        ],
        "start": d.start,
        "transitions": [
            {"from": i, "symbol": a, "to": j}
            for i, row in enumerate(d.trans)
            for a, j in sorted(zip(d.alphabet, row))
        ],
    }


def export_json(d: Dfa) -> str:
    return json.dumps(export_dict(d), indent=2, ensure_ascii=False) + "\n"
