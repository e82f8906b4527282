"""Built-in dependency-free engines of tunable strength and style.

Three kinds: seeded-random, greedy (one-ply static argmax) and fixed-depth
alpha-beta negamax, each parameterized by an evaluation profile. A
"specialist" wrapper that switches strength on material balance supports
experiments that need members with a known, constructed relative advantage.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional
from urllib.parse import parse_qsl

from .board import (
    BISHOP,
    BLACK,
    KING,
    KNIGHT,
    PAWN,
    QUEEN,
    ROOK,
    WHITE,
    BoardState,
    KING_MOVES,
    KNIGHT_MOVES,
    RAYS,
    Move,
    _apply_trusted,
    format_fen,
    is_check,
    legal_moves,
)
from .scores import MATE_SCORE, EvalScore, score_from_search
from .seeds import derive_seed


@dataclass(frozen=True)
class EvalProfile:
    """Static evaluation weights: material, piece-square tables, mobility, tempo.

    Tables are 64-tuples in centipawns from white's perspective (a1 = index 0);
    black mirrors vertically. Kings carry no material weight -- they are never
    traded, so the term would be constant.
    """

    name: str
    material: tuple = (0, 100, 320, 330, 500, 900, 0)  # indexed by piece kind
    pst: dict = field(default_factory=dict)  # piece kind -> 64-tuple, optional
    mobility_weight: int = 0
    tempo_bonus: int = 0


def _table(rows) -> tuple:
    """Build a 64-tuple from 8 rows written rank 8 first (as boards are drawn)."""
    flat = []
    for rank in range(7, -1, -1):
        flat.extend(rows[7 - rank])
    return tuple(flat)


_PAWN_PST = _table([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [40, 40, 40, 40, 40, 40, 40, 40],
    [12, 14, 18, 24, 24, 18, 14, 12],
    [6, 8, 12, 20, 20, 12, 8, 6],
    [2, 2, 8, 16, 16, 8, 2, 2],
    [2, 0, 4, 6, 6, 4, 0, 2],
    [2, 4, 4, -8, -8, 4, 4, 2],
    [0, 0, 0, 0, 0, 0, 0, 0],
])

_KNIGHT_PST = _table([
    [-30, -20, -15, -15, -15, -15, -20, -30],
    [-20, -8, 0, 0, 0, 0, -8, -20],
    [-15, 0, 8, 12, 12, 8, 0, -15],
    [-15, 2, 12, 16, 16, 12, 2, -15],
    [-15, 0, 12, 16, 16, 12, 0, -15],
    [-15, 2, 8, 12, 12, 8, 2, -15],
    [-20, -8, 0, 2, 2, 0, -8, -20],
    [-30, -20, -15, -15, -15, -15, -20, -30],
])

_BISHOP_PST = _table([
    [-10, -5, -5, -5, -5, -5, -5, -10],
    [-5, 0, 0, 0, 0, 0, 0, -5],
    [-5, 0, 4, 8, 8, 4, 0, -5],
    [-5, 4, 4, 8, 8, 4, 4, -5],
    [-5, 0, 8, 8, 8, 8, 0, -5],
    [-5, 8, 8, 8, 8, 8, 8, -5],
    [-5, 4, 0, 0, 0, 0, 4, -5],
    [-10, -5, -5, -5, -5, -5, -5, -10],
])

_ROOK_PST = _table([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [4, 8, 8, 8, 8, 8, 8, 4],
    [-4, 0, 0, 0, 0, 0, 0, -4],
    [-4, 0, 0, 0, 0, 0, 0, -4],
    [-4, 0, 0, 0, 0, 0, 0, -4],
    [-4, 0, 0, 0, 0, 0, 0, -4],
    [-4, 0, 0, 0, 0, 0, 0, -4],
    [0, 0, 0, 4, 4, 2, 0, 0],
])

_QUEEN_PST = _table([
    [-10, -5, -5, -2, -2, -5, -5, -10],
    [-5, 0, 0, 0, 0, 0, 0, -5],
    [-5, 0, 2, 2, 2, 2, 0, -5],
    [-2, 0, 2, 4, 4, 2, 0, -2],
    [-2, 0, 2, 4, 4, 2, 0, -2],
    [-5, 0, 2, 2, 2, 2, 0, -5],
    [-5, 0, 0, 0, 0, 0, 0, -5],
    [-10, -5, -5, -2, -2, -5, -5, -10],
])

_KING_PST = _table([
    [-30, -30, -30, -30, -30, -30, -30, -30],
    [-30, -30, -30, -30, -30, -30, -30, -30],
    [-25, -25, -25, -25, -25, -25, -25, -25],
    [-20, -20, -20, -20, -20, -20, -20, -20],
    [-15, -15, -15, -15, -15, -15, -15, -15],
    [-10, -10, -10, -12, -12, -10, -10, -10],
    [4, 4, 0, -8, -8, 0, 4, 4],
    [8, 12, 6, 0, 0, 6, 12, 8],
])

_FULL_PST = {
    PAWN: _PAWN_PST,
    KNIGHT: _KNIGHT_PST,
    BISHOP: _BISHOP_PST,
    ROOK: _ROOK_PST,
    QUEEN: _QUEEN_PST,
    KING: _KING_PST,
}

PROFILES = {
    "material": EvalProfile(name="material"),
    # "L-style": positionally blind but values activity
    "lstyle": EvalProfile(name="lstyle", mobility_weight=4),
    # "M-style": placement-driven with a tempo nudge
    "mstyle": EvalProfile(name="mstyle", pst=_FULL_PST, tempo_bonus=10),
    # adversary default: modest centralization only
    "neutral": EvalProfile(
        name="neutral", pst={KNIGHT: _KNIGHT_PST, PAWN: _PAWN_PST}
    ),
}


def material_balance(state: BoardState) -> int:
    """White-minus-black material in centipawns (standard weights, no king)."""
    weights = (0, 100, 320, 330, 500, 900, 0)
    total = 0
    for p in state.placement:
        if p > 0:
            total += weights[p]
        elif p < 0:
            total -= weights[-p]
    return total


def _pseudo_move_count(placement, color: int) -> int:
    """Cheap mobility: pseudo-legal move count for ``color`` (no castling)."""
    count = 0
    for sq in range(64):
        p = placement[sq]
        if p == 0 or (p > 0) != (color > 0):
            continue
        kind = p if p > 0 else -p
        if kind == PAWN:
            fwd = sq + 8 * color
            if 0 <= fwd < 64 and placement[fwd] == 0:
                count += 1
                rank = sq >> 3
                if (color == WHITE and rank == 1) or (color == BLACK and rank == 6):
                    if placement[sq + 16 * color] == 0:
                        count += 1
            f = sq & 7
            for df in (-1, 1):
                if 0 <= f + df < 8:
                    to = sq + 8 * color + df
                    if 0 <= to < 64:
                        tp = placement[to]
                        if tp != 0 and (tp > 0) != (color > 0):
                            count += 1
        elif kind == KNIGHT:
            for to in KNIGHT_MOVES[sq]:
                tp = placement[to]
                if tp == 0 or (tp > 0) != (color > 0):
                    count += 1
        elif kind == KING:
            for to in KING_MOVES[sq]:
                tp = placement[to]
                if tp == 0 or (tp > 0) != (color > 0):
                    count += 1
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
                        count += 1
                    else:
                        if (tp > 0) != (color > 0):
                            count += 1
                        break
    return count


def static_eval(state: BoardState, profile: EvalProfile) -> int:
    """Static evaluation in centipawns from the side-to-move's perspective."""
    placement = state.placement
    material = profile.material
    pst = profile.pst
    white_score = 0
    for sq in range(64):
        p = placement[sq]
        if p == 0:
            continue
        if p > 0:
            white_score += material[p]
            table = pst.get(p)
            if table is not None:
                white_score += table[sq]
        else:
            kind = -p
            white_score -= material[kind]
            table = pst.get(kind)
            if table is not None:
                white_score -= table[sq ^ 56]  # vertical mirror for black
    score = white_score if state.side_to_move == WHITE else -white_score
    if profile.mobility_weight:
        us = state.side_to_move
        score += profile.mobility_weight * (
            _pseudo_move_count(placement, us) - _pseudo_move_count(placement, -us)
        )
    score += profile.tempo_bonus
    return score


def negamax(state: BoardState, depth: int, profile: EvalProfile,
            alpha: int = -MATE_SCORE * 2, beta: int = MATE_SCORE * 2, ply: int = 0) -> int:
    """Alpha-beta negamax value at fixed depth, side-to-move perspective.

    Mates score MATE_SCORE - plies-from-root. No quiescence: depth means
    exactly ``depth`` plies. Move order is the sorted (from, to, promotion)
    triple, so values and choices are platform-independent.
    """
    moves = legal_moves(state)
    if not moves:
        return -(MATE_SCORE - ply) if is_check(state) else 0
    if depth <= 0:
        return static_eval(state, profile)
    moves.sort()
    best = -MATE_SCORE * 2
    for m in moves:
        child = _apply_trusted(state, m)
        if depth == 1:
            v = -static_eval(child, profile)  # leaves: no terminal probing
        else:
            v = -negamax(child, depth - 1, profile, -beta, -alpha, ply + 1)
        if v > best:
            best = v
            if v > alpha:
                alpha = v
            if alpha >= beta:
                break
    return best


def search_root(state: BoardState, depth: int, profile: EvalProfile):
    """(best move, value) at fixed depth; ties break to the lowest move triple."""
    moves = legal_moves(state)
    if not moves:
        raise ValueError("search_root called on a terminal position")
    moves.sort()
    best_move = None
    best = -MATE_SCORE * 2
    alpha = -MATE_SCORE * 2
    beta = MATE_SCORE * 2
    for m in moves:
        child = _apply_trusted(state, m)
        if depth <= 1:
            v = -static_eval(child, profile)
        else:
            v = -negamax(child, depth - 1, profile, -beta, -alpha, 1)
        if v > best:
            best = v
            best_move = m
            if v > alpha:
                alpha = v
    return best_move, best


@dataclass(frozen=True)
class BuiltinEngineSpec:
    """Recipe for a built-in engine: kind, depth, profile, seed."""

    kind: str  # "random" | "greedy" | "alphabeta"
    depth: int = 1
    profile: EvalProfile = PROFILES["material"]
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("random", "greedy", "alphabeta"):
            raise ValueError(f"unknown builtin engine kind {self.kind!r}")
        if self.kind == "alphabeta" and self.depth < 1:
            raise ValueError("alphabeta depth must be >= 1")


class BuiltinEngine:
    """A playable engine realized from a BuiltinEngineSpec. Stateless and pure."""

    def __init__(self, spec: BuiltinEngineSpec):
        self.spec = spec
        if spec.kind == "random":
            self.name = f"random(seed={spec.seed})"
        elif spec.kind == "greedy":
            self.name = f"greedy({spec.profile.name})"
        else:
            self.name = f"alphabeta(d={spec.depth},{spec.profile.name})"

    def recommend(self, state: BoardState, ply: int = 0) -> Move:
        moves = legal_moves(state)
        if not moves:
            raise ValueError("recommend called on a terminal position")
        spec = self.spec
        if spec.kind == "random":
            rng = random.Random(derive_seed(spec.seed, ply, format_fen(state)))
            return rng.choice(sorted(moves))
        depth = 1 if spec.kind == "greedy" else spec.depth
        move, _ = search_root(state, depth, spec.profile)
        return move

    def evaluate(self, state: BoardState) -> EvalScore:
        spec = self.spec
        if spec.kind == "random":
            return EvalScore("cp", 0)
        depth = 1 if spec.kind == "greedy" else spec.depth
        if spec.kind == "greedy":
            return EvalScore("cp", static_eval(state, spec.profile))
        return score_from_search(negamax(state, depth, spec.profile))


class SpecialistEngine:
    """Strong only when its material condition holds; seeded-random otherwise.

    ``when`` is "ahead" or "behind", judged on the side to move's material
    balance. Gives experiments a member whose relative advantage is known by
    construction.
    """

    def __init__(self, when: str, strong: BuiltinEngineSpec = None, seed: int = 0):
        if when not in ("ahead", "behind"):
            raise ValueError(f"specialist condition must be 'ahead' or 'behind', got {when!r}")
        self.when = when
        self.strong_spec = strong or BuiltinEngineSpec("alphabeta", depth=2)
        self.seed = seed
        self._strong = BuiltinEngine(self.strong_spec)
        self._weak = BuiltinEngine(BuiltinEngineSpec("random", seed=derive_seed(seed, "weak")))
        self.name = f"specialist({when})"

    def condition_holds(self, state: BoardState) -> bool:
        balance = material_balance(state) * state.side_to_move
        return balance > 0 if self.when == "ahead" else balance < 0

    def recommend(self, state: BoardState, ply: int = 0) -> Move:
        engine = self._strong if self.condition_holds(state) else self._weak
        return engine.recommend(state, ply)

    def evaluate(self, state: BoardState) -> EvalScore:
        engine = self._strong if self.condition_holds(state) else self._weak
        return engine.evaluate(state)


class EpsilonNoiseEngine:
    """Wraps an engine, playing a seeded uniform-random legal move with prob eps."""

    def __init__(self, inner, epsilon: float, seed: int):
        if not 0.0 <= epsilon <= 1.0:
            raise ValueError("epsilon must lie in [0, 1]")
        self.inner = inner
        self.epsilon = epsilon
        self.seed = seed
        self.name = f"{inner.name}+eps{epsilon:g}"

    def recommend(self, state: BoardState, ply: int = 0) -> Move:
        rng = random.Random(derive_seed(self.seed, "eps", ply, format_fen(state)))
        if rng.random() < self.epsilon:
            return rng.choice(sorted(legal_moves(state)))
        return self.inner.recommend(state, ply)

    def evaluate(self, state: BoardState) -> EvalScore:
        return self.inner.evaluate(state)


def strength_ladder(max_depth: int = 3, profile: Optional[EvalProfile] = None,
                    seed: int = 0) -> list:
    """Ordered specs of nominally increasing strength: random, greedy, depths 1..D."""
    profile = profile or PROFILES["material"]
    ladder = [
        BuiltinEngineSpec("random", seed=seed),
        BuiltinEngineSpec("greedy", profile=profile),
    ]
    for d in range(1, max_depth + 1):
        ladder.append(BuiltinEngineSpec("alphabeta", depth=d, profile=profile))
    return ladder


def parse_engine_uri(uri: str, seed: int = 0):
    """Instantiate a built-in engine from a ``builtin:...`` URI.

    Forms: builtin:random?seed=7 | builtin:greedy?profile=mstyle |
    builtin:alphabeta?depth=2&profile=lstyle |
    builtin:specialist?when=ahead&depth=2&profile=material
    Returns None when the text is not a builtin URI (callers treat it as an
    executable path).
    """
    if not uri.startswith("builtin:"):
        return None
    rest = uri[len("builtin:"):]
    kind, _, query = rest.partition("?")
    params = dict(parse_qsl(query, keep_blank_values=True))
    known = {"depth", "profile", "seed", "when", "epsilon"}
    unknown = set(params) - known
    if unknown:
        raise ValueError(f"unknown engine URI parameter(s) {sorted(unknown)} in {uri!r}")
    profile_name = params.get("profile", "material")
    if profile_name not in PROFILES:
        raise ValueError(f"unknown profile {profile_name!r} in {uri!r}")
    profile = PROFILES[profile_name]
    eng_seed = int(params.get("seed", seed))
    if kind == "specialist":
        strong = BuiltinEngineSpec(
            "alphabeta", depth=int(params.get("depth", 2)), profile=profile
        )
        return SpecialistEngine(params.get("when", "ahead"), strong=strong, seed=eng_seed)
    if kind == "random":
        return BuiltinEngine(BuiltinEngineSpec("random", seed=eng_seed))
    if kind == "greedy":
        return BuiltinEngine(BuiltinEngineSpec("greedy", profile=profile))
    if kind == "alphabeta":
        return BuiltinEngine(
            BuiltinEngineSpec("alphabeta", depth=int(params.get("depth", 1)), profile=profile)
        )
    raise ValueError(f"unknown builtin engine kind {kind!r} in {uri!r}")
