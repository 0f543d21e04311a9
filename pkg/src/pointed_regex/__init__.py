"""Pointed regular expressions, Brzozowski derivatives and the automata built from them."""

from .automata import (
    CONSTRUCTIONS,
    Dfa,
    build,
    build_derivative_dfa,
    build_derivative_quotient_dfa,
    build_pointed_dfa,
    build_quotient_dfa,
    isomorphic,
    minimize,
    run_dfa,
)
from .derivatives import derivative_match, derive_char, derive_word
from .errors import (
    AlphabetMismatchError,
    CarrierMismatchError,
    LimitExceededError,
    ParseError,
    RegexError,
    StateBudgetExceeded,
)
from .merge import merge_items, merge_pres
from .oracle import enumerate_language, member_oracle
from .pointed import broadcast, embed, initial_pre, is_final, move, move_pre, move_star
from .readback import canon, canon_set, lp_member, nf, nf_eps, readback, readback_pre
from .syntax import (
    EMPTY,
    EPS,
    Cat,
    Pre,
    PSym,
    Star,
    Sum,
    Sym,
    parse,
    parse_item,
    parse_pre,
    render,
    render_item,
    render_pre,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTRUCTIONS",
    "Dfa",
    "build",
    "build_derivative_dfa",
    "build_derivative_quotient_dfa",
    "build_pointed_dfa",
    "build_quotient_dfa",
    "isomorphic",
    "minimize",
    "run_dfa",
    "derivative_match",
    "derive_char",
    "derive_word",
    "AlphabetMismatchError",
    "CarrierMismatchError",
    "LimitExceededError",
    "ParseError",
    "RegexError",
    "StateBudgetExceeded",
    "merge_items",
    "merge_pres",
    "enumerate_language",
    "member_oracle",
    "broadcast",
    "embed",
    "initial_pre",
    "is_final",
    "move",
    "move_pre",
    "move_star",
    "canon",
    "canon_set",
    "lp_member",
    "nf",
    "nf_eps",
    "readback",
    "readback_pre",
    "EMPTY",
    "EPS",
    "Cat",
    "Pre",
    "PSym",
    "Star",
    "Sum",
    "Sym",
    "parse",
    "parse_item",
    "parse_pre",
    "render",
    "render_item",
    "render_pre",
]
