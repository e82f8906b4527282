"""Slow, independent rules reference used as a cross-check oracle.

Written from first principles with a deliberately different design from
``board``: a dict keyed by (file, rank) coordinates, copy-based move
application, and legality decided by "could any opposing reply capture the
king". It shares nothing with the fast kernel except the FEN text format.
Used by selfcheck and the test suite; far too slow for play.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

Coord = Tuple[int, int]  # (file 0-7, rank 0-7)

_DIAG = ((1, 1), (1, -1), (-1, 1), (-1, -1))
_ORTHO = ((1, 0), (-1, 0), (0, 1), (0, -1))
_KNIGHT = ((1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2))


class RefPosition:
    """Mutable-by-copy reference position."""

    def __init__(self, pieces: Dict[Coord, str], turn: str, castling: str, ep: Optional[Coord],
                 halfmove: int, fullmove: int):
        self.pieces = pieces  # coord -> piece letter, uppercase white
        self.turn = turn  # "w" | "b"
        self.castling = castling  # subset of "KQkq" or ""
        self.ep = ep
        self.halfmove = halfmove
        self.fullmove = fullmove

    def copy(self) -> "RefPosition":
        return RefPosition(dict(self.pieces), self.turn, self.castling, self.ep,
                           self.halfmove, self.fullmove)


def ref_parse_fen(fen: str) -> RefPosition:
    board_f, turn, castling, ep_f, half, full = fen.split()[:6]
    pieces: Dict[Coord, str] = {}
    for i, row in enumerate(board_f.split("/")):
        rank = 7 - i
        file = 0
        for ch in row:
            if ch.isdigit():
                file += int(ch)
            else:
                pieces[(file, rank)] = ch
                file += 1
    ep = None
    if ep_f != "-":
        ep = ("abcdefgh".index(ep_f[0]), int(ep_f[1]) - 1)
    return RefPosition(pieces, turn, "" if castling == "-" else castling, ep, int(half), int(full))


def _is_white(piece: str) -> bool:
    return piece.isupper()


def _own(pos: RefPosition, piece: str) -> bool:
    return _is_white(piece) == (pos.turn == "w")


def ref_attacks(pos: RefPosition, attacker_white: bool) -> set:
    """Every coordinate attacked by the given color (pseudo-legal)."""
    out = set()
    for (f, r), piece in pos.pieces.items():
        if _is_white(piece) != attacker_white:
            continue
        kind = piece.lower()
        if kind == "p":
            dr = 1 if attacker_white else -1
            for df in (-1, 1):
                t = (f + df, r + dr)
                if 0 <= t[0] < 8 and 0 <= t[1] < 8:
                    out.add(t)
        elif kind == "n":
            for df, dr in _KNIGHT:
                t = (f + df, r + dr)
                if 0 <= t[0] < 8 and 0 <= t[1] < 8:
                    out.add(t)
        elif kind == "k":
            for df, dr in _ORTHO + _DIAG:
                t = (f + df, r + dr)
                if 0 <= t[0] < 8 and 0 <= t[1] < 8:
                    out.add(t)
        else:
            if kind == "r":
                dirs = _ORTHO
            elif kind == "b":
                dirs = _DIAG
            else:
                dirs = _ORTHO + _DIAG
            for df, dr in dirs:
                tf, tr = f + df, r + dr
                while 0 <= tf < 8 and 0 <= tr < 8:
                    out.add((tf, tr))
                    if (tf, tr) in pos.pieces:
                        break
                    tf += df
                    tr += dr
    return out


def _pseudo(pos: RefPosition) -> List[Tuple[Coord, Coord, str]]:
    """(from, to, promotion) triples ignoring self-check."""
    white = pos.turn == "w"
    moves: List[Tuple[Coord, Coord, str]] = []
    for (f, r), piece in list(pos.pieces.items()):
        if _is_white(piece) != white:
            continue
        kind = piece.lower()
        if kind == "p":
            dr = 1 if white else -1
            start = 1 if white else 6
            last = 7 if white else 0
            one = (f, r + dr)
            if one not in pos.pieces and 0 <= one[1] < 8:
                if one[1] == last:
                    for promo in "qrbn":
                        moves.append(((f, r), one, promo))
                else:
                    moves.append(((f, r), one, ""))
                    two = (f, r + 2 * dr)
                    if r == start and two not in pos.pieces:
                        moves.append(((f, r), two, ""))
            for df in (-1, 1):
                t = (f + df, r + dr)
                if not (0 <= t[0] < 8 and 0 <= t[1] < 8):
                    continue
                victim = pos.pieces.get(t)
                if victim is not None and _is_white(victim) != white:
                    if t[1] == last:
                        for promo in "qrbn":
                            moves.append(((f, r), t, promo))
                    else:
                        moves.append(((f, r), t, ""))
                elif pos.ep is not None and t == pos.ep:
                    moves.append(((f, r), t, ""))
        elif kind == "n":
            for df, dr2 in _KNIGHT:
                t = (f + df, r + dr2)
                if 0 <= t[0] < 8 and 0 <= t[1] < 8:
                    victim = pos.pieces.get(t)
                    if victim is None or _is_white(victim) != white:
                        moves.append(((f, r), t, ""))
        elif kind == "k":
            for df, dr2 in _ORTHO + _DIAG:
                t = (f + df, r + dr2)
                if 0 <= t[0] < 8 and 0 <= t[1] < 8:
                    victim = pos.pieces.get(t)
                    if victim is None or _is_white(victim) != white:
                        moves.append(((f, r), t, ""))
        else:
            dirs = _ORTHO if kind == "r" else _DIAG if kind == "b" else _ORTHO + _DIAG
            for df, dr2 in dirs:
                tf, tr = f + df, r + dr2
                while 0 <= tf < 8 and 0 <= tr < 8:
                    victim = pos.pieces.get((tf, tr))
                    if victim is None:
                        moves.append(((f, r), (tf, tr), ""))
                    else:
                        if _is_white(victim) != white:
                            moves.append(((f, r), (tf, tr), ""))
                        break
                    tf += df
                    tr += dr2
    # castling
    rank = 0 if white else 7
    kside = "K" if white else "k"
    qside = "Q" if white else "q"
    danger = ref_attacks(pos, not white)
    if kside in pos.castling and pos.pieces.get((4, rank), "").lower() == "k" \
            and pos.pieces.get((7, rank), "") == ("R" if white else "r"):
        if all((f, rank) not in pos.pieces for f in (5, 6)) \
                and all((f, rank) not in danger for f in (4, 5, 6)):
            moves.append(((4, rank), (6, rank), ""))
    if qside in pos.castling and pos.pieces.get((4, rank), "").lower() == "k" \
            and pos.pieces.get((0, rank), "") == ("R" if white else "r"):
        if all((f, rank) not in pos.pieces for f in (1, 2, 3)) \
                and all((f, rank) not in danger for f in (2, 3, 4)):
            moves.append(((4, rank), (2, rank), ""))
    return moves


def ref_apply(pos: RefPosition, move: Tuple[Coord, Coord, str]) -> RefPosition:
    (ff, fr), (tf, tr), promo = move
    nxt = pos.copy()
    white = pos.turn == "w"
    piece = nxt.pieces.pop((ff, fr))
    captured = (tf, tr) in nxt.pieces
    if piece.lower() == "p" and pos.ep is not None and (tf, tr) == pos.ep and not captured:
        del nxt.pieces[(tf, fr)]  # en passant: victim sits beside the mover
        captured = True
    if promo:
        nxt.pieces[(tf, tr)] = promo.upper() if white else promo
    else:
        nxt.pieces[(tf, tr)] = piece
    if piece.lower() == "k" and abs(tf - ff) == 2:
        if tf == 6:
            nxt.pieces[(5, fr)] = nxt.pieces.pop((7, fr))
        else:
            nxt.pieces[(3, fr)] = nxt.pieces.pop((0, fr))
    # castling-right bookkeeping
    drop = ""
    if piece == "K":
        drop += "KQ"
    elif piece == "k":
        drop += "kq"
    for corner, letters in (((0, 0), "Q"), ((7, 0), "K"), ((0, 7), "q"), ((7, 7), "k")):
        if (ff, fr) == corner or (tf, tr) == corner:
            drop += letters
    nxt.castling = "".join(ch for ch in nxt.castling if ch not in drop)
    nxt.ep = None
    if piece.lower() == "p" and abs(tr - fr) == 2:
        nxt.ep = (ff, (fr + tr) // 2)
    nxt.halfmove = 0 if (captured or piece.lower() == "p") else pos.halfmove + 1
    if not white:
        nxt.fullmove = pos.fullmove + 1
    nxt.turn = "b" if white else "w"
    return nxt


def _king_coord(pos: RefPosition, white: bool) -> Coord:
    target = "K" if white else "k"
    for coord, piece in pos.pieces.items():
        if piece == target:
            return coord
    raise ValueError("reference position has no king")


def ref_legal_moves(pos: RefPosition) -> List[Tuple[Coord, Coord, str]]:
    white = pos.turn == "w"
    legal = []
    for move in _pseudo(pos):
        nxt = ref_apply(pos, move)
        if _king_coord(nxt, white) not in ref_attacks(nxt, not white):
            legal.append(move)
    return legal


def ref_move_uci(move: Tuple[Coord, Coord, str]) -> str:
    (ff, fr), (tf, tr), promo = move
    return f"{'abcdefgh'[ff]}{fr + 1}{'abcdefgh'[tf]}{tr + 1}{promo}"


def ref_legal_ucis(fen: str) -> set:
    return {ref_move_uci(m) for m in ref_legal_moves(ref_parse_fen(fen))}


def ref_perft(fen: str, depth: int) -> int:
    def walk(pos: RefPosition, d: int) -> int:
        if d == 0:
            return 1
        total = 0
        for move in ref_legal_moves(pos):
            total += walk(ref_apply(pos, move), d - 1)
        return total

    return walk(ref_parse_fen(fen), depth)


def ref_attacked_squares(fen: str, by_white: bool) -> set:
    """Attacked square names, for cross-checking the fast attack map."""
    pos = ref_parse_fen(fen)
    return {f"{'abcdefgh'[f]}{r + 1}" for (f, r) in ref_attacks(pos, by_white)}
