"""Two-engine chess teams with arbitrating managers.

Core pieces: a rules kernel (``board``), built-in engines of tunable
strength (``engines``), a UCI client for external engines (``uci``), the
team match protocol (``team``), expert and learned routing managers
(``sme``, ``model``, ``training``), and the statistics / attention analyses
(``analysis``). The ``teamchess`` CLI drives end-to-end experiments.
"""

from .board import (
    BLACK,
    WHITE,
    BoardState,
    FenError,
    IllegalMoveError,
    Move,
    Outcome,
    apply_move,
    format_fen,
    game_result,
    is_attacked,
    is_check,
    legal_moves,
    move_from_uci,
    parse_fen,
    perft,
    position_key,
    shuffle_position,
    startpos,
)

__version__ = "0.1.0"
