"""Solitaire Clobber on lines and cycles.

Boards are strings over x (black), o (white) and - (empty). Moves are
(from, direction) pairs with direction "L" or "R".
"""

from ._clobber import (
    ClobberError,
    apply,
    canonical_form,
    check_upper_bound,
    encode,
    generate_family,
    legal_moves,
    oracle_strategy,
    oracle_value,
    replay,
    solve,
    sweep_max,
    value_from_word,
)

__all__ = [
    "ClobberError",
    "apply",
    "canonical_form",
    "check_upper_bound",
    "encode",
    "generate_family",
    "legal_moves",
    "oracle_strategy",
    "oracle_value",
    "replay",
    "solve",
    "sweep_max",
    "value_from_word",
]
