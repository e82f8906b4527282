"""Rules-of-chess kernel: positions, FEN, legal moves, attacks, adjudication.

Square indexing is 0 = a1 .. 63 = h8, rank-major. Colors are WHITE = +1 and
BLACK = -1; square contents are signed piece codes (positive white, negative
black, 0 empty). All state values are immutable; every operation is a pure
function, safe to share across workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple, Optional

WHITE = 1
BLACK = -1

PAWN, KNIGHT, BISHOP, ROOK, QUEEN, KING = 1, 2, 3, 4, 5, 6

PIECE_CHARS = {PAWN: "p", KNIGHT: "n", BISHOP: "b", ROOK: "r", QUEEN: "q", KING: "k"}
CHAR_PIECES = {c: k for k, c in PIECE_CHARS.items()}

# castling-right bits
CASTLE_WK, CASTLE_WQ, CASTLE_BK, CASTLE_BQ = 1, 2, 4, 8
ALL_CASTLING = CASTLE_WK | CASTLE_WQ | CASTLE_BK | CASTLE_BQ

FILES = "abcdefgh"
START_FEN = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1"

PLY_CAP_DEFAULT = 300


class FenError(ValueError):
    """Malformed FEN; message names the offending field."""


class IllegalMoveError(ValueError):
    """Move not legal in the given position."""


def square(file: int, rank: int) -> int:
    return rank * 8 + file


def square_name(sq: int) -> str:
    return FILES[sq & 7] + str((sq >> 3) + 1)


def parse_square(name: str) -> int:
    if len(name) != 2 or name[0] not in FILES or name[1] not in "12345678":
        raise ValueError(f"bad square name: {name!r}")
    return square(FILES.index(name[0]), int(name[1]) - 1)


class Move(NamedTuple):
    """A move as from/to square indices plus an optional promotion piece kind."""

    from_sq: int
    to_sq: int
    promotion: int = 0

    def uci(self) -> str:
        promo = PIECE_CHARS[self.promotion] if self.promotion else ""
        return square_name(self.from_sq) + square_name(self.to_sq) + promo


def move_from_uci(text: str) -> Move:
    if len(text) not in (4, 5):
        raise ValueError(f"bad UCI move: {text!r}")
    frm = parse_square(text[0:2])
    to = parse_square(text[2:4])
    promo = 0
    if len(text) == 5:
        kind = CHAR_PIECES.get(text[4].lower())
        if kind is None or kind in (PAWN, KING):
            raise ValueError(f"bad promotion piece in {text!r}")
        promo = kind
    return Move(frm, to, promo)


@dataclass(frozen=True, slots=True)
class BoardState:
    """A full chess position.

    ``placement`` is a 64-tuple of signed piece codes. ``en_passant`` is the
    capture target square after a double pawn push, or None.
    """

    placement: tuple
    side_to_move: int
    castling: int
    en_passant: Optional[int]
    halfmove_clock: int
    fullmove_number: int


@dataclass(frozen=True, slots=True)
class Outcome:
    """Terminal game result relative to a stated color (``pov``)."""

    kind: str  # "win" | "draw" | "loss"
    reason: str  # checkmate | stalemate | fifty-move | threefold | ply-cap | adjudicated
    pov: int  # WHITE or BLACK

    def score(self) -> float:
        return {"win": 1.0, "draw": 0.5, "loss": 0.0}[self.kind]

    def for_color(self, color: int) -> "Outcome":
        if color == self.pov or self.kind == "draw":
            return replace(self, pov=color)
        flipped = "win" if self.kind == "loss" else "loss"
        return Outcome(flipped, self.reason, color)


# ---------------------------------------------------------------------------
# precomputed attack geometry
# ---------------------------------------------------------------------------

def _build_tables():
    knight = []
    king = []
    rays = []  # rays[sq] = 8 tuples of squares marching outward; 0-3 ortho, 4-7 diag
    ortho = ((0, 1), (0, -1), (1, 0), (-1, 0))
    diag = ((1, 1), (1, -1), (-1, 1), (-1, -1))
    for sq in range(64):
        f, r = sq & 7, sq >> 3
        kn = []
        for df, dr in ((1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2)):
            nf, nr = f + df, r + dr
            if 0 <= nf < 8 and 0 <= nr < 8:
                kn.append(square(nf, nr))
        knight.append(tuple(kn))
        kg = []
        for df, dr in ortho + diag:
            nf, nr = f + df, r + dr
            if 0 <= nf < 8 and 0 <= nr < 8:
                kg.append(square(nf, nr))
        king.append(tuple(kg))
        sq_rays = []
        for df, dr in ortho + diag:
            ray = []
            nf, nr = f + df, r + dr
            while 0 <= nf < 8 and 0 <= nr < 8:
                ray.append(square(nf, nr))
                nf += df
                nr += dr
            sq_rays.append(tuple(ray))
        rays.append(tuple(sq_rays))
    # pawn_attackers[color][sq] = squares from which a pawn of `color` attacks sq
    pawn_attackers = {WHITE: [], BLACK: []}
    for sq in range(64):
        f, r = sq & 7, sq >> 3
        w, b = [], []
        for df in (-1, 1):
            nf = f + df
            if 0 <= nf < 8:
                if r - 1 >= 0:
                    w.append(square(nf, r - 1))
                if r + 1 < 8:
                    b.append(square(nf, r + 1))
        pawn_attackers[WHITE].append(tuple(w))
        pawn_attackers[BLACK].append(tuple(b))
    return (
        tuple(knight),
        tuple(king),
        tuple(rays),
        {c: tuple(v) for c, v in pawn_attackers.items()},
    )


KNIGHT_MOVES, KING_MOVES, RAYS, PAWN_ATTACKERS = _build_tables()


def _attacked(placement, sq: int, by: int) -> bool:
    """Pseudo-legal attack test on a raw placement sequence."""
    for src in KNIGHT_MOVES[sq]:
        if placement[src] == by * KNIGHT:
            return True
    for src in KING_MOVES[sq]:
        if placement[src] == by * KING:
            return True
    pawn = by * PAWN
    for src in PAWN_ATTACKERS[by][sq]:
        if placement[src] == pawn:
            return True
    rays = RAYS[sq]
    rook, queen, bishop = by * ROOK, by * QUEEN, by * BISHOP
    for d in range(4):
        for dst in rays[d]:
            p = placement[dst]
            if p:
                if p == rook or p == queen:
                    return True
                break
    for d in range(4, 8):
        for dst in rays[d]:
            p = placement[dst]
            if p:
                if p == bishop or p == queen:
                    return True
                break
    return False


def is_attacked(state: BoardState, sq: int, by: int) -> bool:
    """True iff any piece of color ``by`` pseudo-legally attacks ``sq``.

    Pins and king legality are deliberately ignored; occupancy of ``sq``
    itself does not matter.
    """
    return _attacked(state.placement, sq, by)


def _king_square(placement, color: int) -> int:
    target = color * KING
    for sq in range(64):
        if placement[sq] == target:
            return sq
    raise ValueError("no king on board")


def is_check(state: BoardState) -> bool:
    """True iff the side to move is in check."""
    return _attacked(
        state.placement, _king_square(state.placement, state.side_to_move), -state.side_to_move
    )


# ---------------------------------------------------------------------------
# move generation
# ---------------------------------------------------------------------------

_PROMO_KINDS = (QUEEN, ROOK, BISHOP, KNIGHT)


def _pseudo_moves(state: BoardState) -> list:
    """Pseudo-legal moves for the side to move (self-check ignored)."""
    placement = state.placement
    us = state.side_to_move
    moves = []
    push = moves.append
    ep = state.en_passant
    for sq in range(64):
        p = placement[sq]
        if p == 0 or (p > 0) != (us > 0):
            continue
        kind = p if p > 0 else -p
        if kind == PAWN:
            rank = sq >> 3
            fwd = sq + 8 * us
            if 0 <= fwd < 64 and placement[fwd] == 0:
                to_rank = fwd >> 3
                if to_rank in (0, 7):
                    for pk in _PROMO_KINDS:
                        push(Move(sq, fwd, pk))
                else:
                    push(Move(sq, fwd))
                    if (us == WHITE and rank == 1) or (us == BLACK and rank == 6):
                        fwd2 = sq + 16 * us
                        if placement[fwd2] == 0:
                            push(Move(sq, fwd2))
            f = sq & 7
            for df in (-1, 1):
                nf = f + df
                if not 0 <= nf < 8:
                    continue
                to = sq + 8 * us + df
                if not 0 <= to < 64:
                    continue
                tp = placement[to]
                if tp != 0 and (tp > 0) != (us > 0):
                    to_rank = to >> 3
                    if to_rank in (0, 7):
                        for pk in _PROMO_KINDS:
                            push(Move(sq, to, pk))
                    else:
                        push(Move(sq, to))
                elif ep is not None and to == ep:
                    push(Move(sq, to))
        elif kind == KNIGHT:
            for to in KNIGHT_MOVES[sq]:
                tp = placement[to]
                if tp == 0 or (tp > 0) != (us > 0):
                    push(Move(sq, to))
        elif kind == KING:
            for to in KING_MOVES[sq]:
                tp = placement[to]
                if tp == 0 or (tp > 0) != (us > 0):
                    push(Move(sq, to))
        else:
            if kind == ROOK:
                dirs = range(4)
            elif kind == BISHOP:
                dirs = range(4, 8)
            else:
                dirs = range(8)
            rays = RAYS[sq]
            for d in dirs:
                for to in rays[d]:
                    tp = placement[to]
                    if tp == 0:
                        push(Move(sq, to))
                    else:
                        if (tp > 0) != (us > 0):
                            push(Move(sq, to))
                        break
    _add_castling(state, moves)
    return moves


def _add_castling(state: BoardState, moves: list) -> None:
    placement = state.placement
    us = state.side_to_move
    them = -us
    if us == WHITE:
        king_sq, k_bit, q_bit, rank0 = 4, CASTLE_WK, CASTLE_WQ, 0
    else:
        king_sq, k_bit, q_bit, rank0 = 60, CASTLE_BK, CASTLE_BQ, 56
    rights = state.castling
    if not rights & (k_bit | q_bit):
        return
    if placement[king_sq] != us * KING:
        return
    if _attacked(placement, king_sq, them):
        return
    if rights & k_bit and placement[rank0 + 7] == us * ROOK:
        if (
            placement[rank0 + 5] == 0
            and placement[rank0 + 6] == 0
            and not _attacked(placement, rank0 + 5, them)
            and not _attacked(placement, rank0 + 6, them)
        ):
            moves.append(Move(king_sq, rank0 + 6))
    if rights & q_bit and placement[rank0] == us * ROOK:
        if (
            placement[rank0 + 1] == 0
            and placement[rank0 + 2] == 0
            and placement[rank0 + 3] == 0
            and not _attacked(placement, rank0 + 2, them)
            and not _attacked(placement, rank0 + 3, them)
        ):
            moves.append(Move(king_sq, rank0 + 2))


def _apply_to_list(placement: list, state: BoardState, m: Move) -> None:
    """Mutate ``placement`` (a list copy) to reflect ``m``. Board part only."""
    us = state.side_to_move
    p = placement[m.from_sq]
    placement[m.from_sq] = 0
    kind = p if p > 0 else -p
    if kind == PAWN and state.en_passant is not None and m.to_sq == state.en_passant and placement[m.to_sq] == 0:
        placement[m.to_sq - 8 * us] = 0  # en-passant victim
    if m.promotion:
        placement[m.to_sq] = us * m.promotion
    else:
        placement[m.to_sq] = p
    if kind == KING and abs(m.to_sq - m.from_sq) == 2:  # castle: hop the rook
        rank0 = m.from_sq & ~7
        if m.to_sq > m.from_sq:
            placement[rank0 + 5] = placement[rank0 + 7]
            placement[rank0 + 7] = 0
        else:
            placement[rank0 + 3] = placement[rank0]
            placement[rank0] = 0


def legal_moves(state: BoardState) -> list:
    """Exactly the legal moves; empty means checkmate or stalemate."""
    placement = state.placement
    us = state.side_to_move
    them = -us
    king_sq = _king_square(placement, us)
    out = []
    scratch = list(placement)
    for m in _pseudo_moves(state):
        # undo log keeps the scratch list reusable across candidates
        touched = [(m.from_sq, scratch[m.from_sq]), (m.to_sq, scratch[m.to_sq])]
        p = scratch[m.from_sq]
        kind = p if p > 0 else -p
        if kind == PAWN and state.en_passant is not None and m.to_sq == state.en_passant and scratch[m.to_sq] == 0:
            victim = m.to_sq - 8 * us
            touched.append((victim, scratch[victim]))
        if kind == KING and abs(m.to_sq - m.from_sq) == 2:
            rank0 = m.from_sq & ~7
            if m.to_sq > m.from_sq:
                touched.append((rank0 + 5, scratch[rank0 + 5]))
                touched.append((rank0 + 7, scratch[rank0 + 7]))
            else:
                touched.append((rank0 + 3, scratch[rank0 + 3]))
                touched.append((rank0, scratch[rank0]))
        _apply_to_list(scratch, state, m)
        ksq = m.to_sq if kind == KING else king_sq
        if not _attacked(scratch, ksq, them):
            out.append(m)
        for idx, old in touched:
            scratch[idx] = old
    return out


def apply_move(state: BoardState, m: Move) -> BoardState:
    """Apply a legal move, returning the successor position.

    Raises IllegalMoveError when ``m`` is not legal in ``state``.
    """
    placement = state.placement
    us = state.side_to_move
    p = placement[m.from_sq]
    if p == 0 or (p > 0) != (us > 0):
        raise IllegalMoveError(f"{m.uci()}: no {('white' if us > 0 else 'black')} piece on {square_name(m.from_sq)}")
    if m not in (c for c in _pseudo_moves(state) if c.from_sq == m.from_sq):
        raise IllegalMoveError(f"{m.uci()} is not pseudo-legal here")
    kind = p if p > 0 else -p
    new_placement = list(placement)
    _apply_to_list(new_placement, state, m)
    king_sq = _king_square(new_placement, us)
    if _attacked(new_placement, king_sq, -us):
        raise IllegalMoveError(f"{m.uci()} leaves the king attacked")
    return _finish_apply(state, m, p, kind, new_placement)


def _finish_apply(state: BoardState, m: Move, p: int, kind: int, new_placement: list) -> BoardState:
    us = state.side_to_move
    captured = state.placement[m.to_sq] != 0 or (
        kind == PAWN and state.en_passant is not None and m.to_sq == state.en_passant
    )
    ep = None
    if kind == PAWN and abs(m.to_sq - m.from_sq) == 16:
        ep = (m.from_sq + m.to_sq) // 2
    rights = state.castling
    if rights:
        if kind == KING:
            rights &= ~(CASTLE_WK | CASTLE_WQ) if us == WHITE else ~(CASTLE_BK | CASTLE_BQ)
        for sq in (m.from_sq, m.to_sq):
            if sq == 0:
                rights &= ~CASTLE_WQ
            elif sq == 7:
                rights &= ~CASTLE_WK
            elif sq == 56:
                rights &= ~CASTLE_BQ
            elif sq == 63:
                rights &= ~CASTLE_BK
    halfmove = 0 if (captured or kind == PAWN) else state.halfmove_clock + 1
    fullmove = state.fullmove_number + (1 if us == BLACK else 0)
    return BoardState(
        placement=tuple(new_placement),
        side_to_move=-us,
        castling=rights,
        en_passant=ep,
        halfmove_clock=halfmove,
        fullmove_number=fullmove,
    )


def _apply_trusted(state: BoardState, m: Move) -> BoardState:
    """Apply without legality re-validation; callers guarantee m is legal."""
    p = state.placement[m.from_sq]
    kind = p if p > 0 else -p
    new_placement = list(state.placement)
    _apply_to_list(new_placement, state, m)
    return _finish_apply(state, m, p, kind, new_placement)


def legal_children(state: BoardState):
    """Yield (move, successor) pairs; the fast path for search and perft."""
    for m in legal_moves(state):
        yield m, _apply_trusted(state, m)


def perft(state: BoardState, depth: int) -> int:
    """Count leaf nodes of the legal move tree at ``depth``."""
    if depth <= 0:
        return 1
    moves = legal_moves(state)
    if depth == 1:
        return len(moves)
    total = 0
    for m in moves:
        total += perft(_apply_trusted(state, m), depth - 1)
    return total


# ---------------------------------------------------------------------------
# FEN
# ---------------------------------------------------------------------------

def parse_fen(text: str) -> BoardState:
    """Parse a 6-field FEN record, validating position invariants."""
    fields = text.split()
    if len(fields) != 6:
        raise FenError(f"expected 6 FEN fields, got {len(fields)}")
    placement_f, side_f, castling_f, ep_f, half_f, full_f = fields

    ranks = placement_f.split("/")
    if len(ranks) != 8:
        raise FenError(f"placement: expected 8 ranks, got {len(ranks)}")
    placement = [0] * 64
    for i, rank_text in enumerate(ranks):
        rank = 7 - i
        file = 0
        for ch in rank_text:
            if ch.isdigit():
                if ch == "0" or ch == "9":
                    raise FenError(f"placement: bad run length {ch!r} in rank {rank + 1}")
                file += int(ch)
            else:
                kind = CHAR_PIECES.get(ch.lower())
                if kind is None:
                    raise FenError(f"placement: illegal piece letter {ch!r}")
                if file >= 8:
                    raise FenError(f"placement: rank {rank + 1} longer than 8 squares")
                placement[square(file, rank)] = kind if ch.isupper() else -kind
                file += 1
        if file != 8:
            raise FenError(f"placement: rank {rank + 1} has {file} squares, expected 8")

    for color, name in ((WHITE, "white"), (BLACK, "black")):
        kings = sum(1 for p in placement if p == color * KING)
        if kings != 1:
            raise FenError(f"placement: expected exactly one {name} king, found {kings}")

    if side_f == "w":
        side = WHITE
    elif side_f == "b":
        side = BLACK
    else:
        raise FenError(f"side: expected 'w' or 'b', got {side_f!r}")

    rights = 0
    if castling_f != "-":
        bits = {"K": CASTLE_WK, "Q": CASTLE_WQ, "k": CASTLE_BK, "q": CASTLE_BQ}
        for ch in castling_f:
            if ch not in bits or rights & bits[ch]:
                raise FenError(f"castling: bad field {castling_f!r}")
            rights |= bits[ch]
    home = {
        CASTLE_WK: (4, KING), CASTLE_WQ: (4, KING),
        CASTLE_BK: (60, -KING), CASTLE_BQ: (60, -KING),
    }
    rook_home = {CASTLE_WK: (7, ROOK), CASTLE_WQ: (0, ROOK), CASTLE_BK: (63, -ROOK), CASTLE_BQ: (56, -ROOK)}
    for bit in (CASTLE_WK, CASTLE_WQ, CASTLE_BK, CASTLE_BQ):
        if rights & bit:
            ksq, kp = home[bit]
            rsq, rp = rook_home[bit]
            if placement[ksq] != kp or placement[rsq] != rp:
                raise FenError("castling: rights inconsistent with king/rook home squares")

    if ep_f == "-":
        ep = None
    else:
        try:
            ep = parse_square(ep_f)
        except ValueError:
            raise FenError(f"en-passant: bad square {ep_f!r}") from None
        if (ep >> 3) not in (2, 5):
            raise FenError("en-passant: square must lie on rank 3 or 6")
        if placement[ep] != 0:
            raise FenError("en-passant: square must be empty")

    try:
        halfmove = int(half_f)
        if halfmove < 0:
            raise ValueError
    except ValueError:
        raise FenError(f"halfmove: bad count {half_f!r}") from None
    try:
        fullmove = int(full_f)
        if fullmove < 1:
            raise ValueError
    except ValueError:
        raise FenError(f"fullmove: bad count {full_f!r}") from None

    return BoardState(tuple(placement), side, rights, ep, halfmove, fullmove)


def format_fen(state: BoardState) -> str:
    """Canonical 6-field FEN text for ``state``."""
    rows = []
    for rank in range(7, -1, -1):
        row = ""
        run = 0
        for file in range(8):
            p = state.placement[square(file, rank)]
            if p == 0:
                run += 1
            else:
                if run:
                    row += str(run)
                    run = 0
                ch = PIECE_CHARS[abs(p)]
                row += ch.upper() if p > 0 else ch
        if run:
            row += str(run)
        rows.append(row)
    castle = "".join(
        ch for ch, bit in (("K", CASTLE_WK), ("Q", CASTLE_WQ), ("k", CASTLE_BK), ("q", CASTLE_BQ))
        if state.castling & bit
    ) or "-"
    ep = square_name(state.en_passant) if state.en_passant is not None else "-"
    return " ".join(
        (
            "/".join(rows),
            "w" if state.side_to_move == WHITE else "b",
            castle,
            ep,
            str(state.halfmove_clock),
            str(state.fullmove_number),
        )
    )


def startpos() -> BoardState:
    return parse_fen(START_FEN)


# ---------------------------------------------------------------------------
# adjudication
# ---------------------------------------------------------------------------

def position_key(state: BoardState) -> tuple:
    """Repetition key: placement, side to move, castling rights, ep square."""
    return (state.placement, state.side_to_move, state.castling, state.en_passant)


def game_result(
    state: BoardState,
    history: Iterable[tuple],
    ply_cap: int = PLY_CAP_DEFAULT,
) -> Optional[Outcome]:
    """Adjudicate ``state``; ``history`` holds position keys of all prior plies.

    Returns None while the game continues. Outcomes are from the point of
    view of the side to move.
    """
    us = state.side_to_move
    if not legal_moves(state):
        if is_check(state):
            return Outcome("loss", "checkmate", us)
        return Outcome("draw", "stalemate", us)
    if state.halfmove_clock >= 100:
        return Outcome("draw", "fifty-move", us)
    history = list(history)
    key = position_key(state)
    if history.count(key) >= 2:
        return Outcome("draw", "threefold", us)
    if len(history) >= ply_cap:
        return Outcome("draw", "ply-cap", us)
    return None


def shuffle_position(state: BoardState, seed: int) -> BoardState:
    """Permute all 64 square contents uniformly at random under ``seed``.

    The result preserves the piece multiset and the side to move but may be
    an illegal chess position; castling rights and the en-passant square are
    cleared. Analysis control only -- never feed it to move generation.
    """
    rng = random.Random(seed)
    perm = list(range(64))
    rng.shuffle(perm)
    placement = tuple(state.placement[perm[i]] for i in range(64))
    return BoardState(
        placement=placement,
        side_to_move=state.side_to_move,
        castling=0,
        en_passant=None,
        halfmove_clock=state.halfmove_clock,
        fullmove_number=state.fullmove_number,
    )
