"""Automata built from pointed expressions, and their quotients.

``build_pointed_dfa`` closes the broadcast start state under ``move``.
The two quotient constructions identify states with equal canonical
read-back (pointed side) or equal canonical look-ahead normal form
(derivative side); for every regex they yield isomorphic automata.
"""

from __future__ import annotations

from .derivatives import DEFAULT_MAX_STATES, build_derivative_dfa, derive_char
from .dfa import (
    Dfa,
    canonical_form,
    explore,
    export_dict,
    export_dot,
    export_json,
    isomorphic,
    label_text,
    minimize,
    run_dfa,
)
from .pointed import initial_pre, is_final, move_pre
from .readback import canon, canon_set, nf_eps, readback_pre
from .syntax import Item, nullable, render, symbols

__all__ = [
    "Dfa",
    "build_pointed_dfa",
    "build_quotient_dfa",
    "build_derivative_dfa",
    "build_derivative_quotient_dfa",
    "build",
    "CONSTRUCTIONS",
    "run_dfa",
    "minimize",
    "isomorphic",
    "canonical_form",
    "export_dot",
    "export_json",
    "export_dict",
    "label_text",
]


def readback_key(p):
    return canon_set(readback_pre(p))


def nf_key(r):
    return canon_set(nf_eps(r))


def build_pointed_dfa(r: Item) -> Dfa:
    """Accessible part of the automaton whose states are pres over ``r``."""
    return explore(
        initial_pre(r),
        symbols(r),
        move_pre,
        is_final,
        construction="pointed",
        source=render(r),
    )


def build_quotient_dfa(r: Item) -> Dfa:
    """Pointed automaton quotiented by equality of canonical read-back."""
    return explore(
        initial_pre(r),
        symbols(r),
        move_pre,
        is_final,
        key=readback_key,
        construction="quotient",
        source=render(r),
    )


def _derivative_step(r: Item, a: str) -> Item:
    return canon(derive_char(r, a))


def build_derivative_quotient_dfa(r: Item, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    """Derivative automaton quotiented by equality of canonical ``nf_eps``."""
    return explore(
        canon(r),
        symbols(r),
        _derivative_step,
        nullable,
        key=nf_key,
        max_states=max_states,
        construction="derivative-quotient",
        source=render(r),
    )


CONSTRUCTIONS = {
    "pointed": build_pointed_dfa,
    "quotient": build_quotient_dfa,
    "derivative": build_derivative_dfa,
    "derivative-quotient": build_derivative_quotient_dfa,
}


def build(r: Item, construction: str = "pointed") -> Dfa:
    try:
        builder = CONSTRUCTIONS[construction]
    except KeyError:
        raise ValueError(f"unknown construction {construction!r}") from None
    return builder(r)
