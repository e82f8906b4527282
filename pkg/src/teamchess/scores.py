"""Engine evaluation scores, shared by built-in and UCI engines."""

from __future__ import annotations

from dataclasses import dataclass

MATE_SCORE = 100_000
MATE_THRESHOLD = MATE_SCORE - 1_000


@dataclass(frozen=True, slots=True)
class EvalScore:
    """A search score from the side-to-move's perspective.

    ``kind`` is "cp" (centipawns) or "mate"; mate values count full moves,
    positive when the side to move delivers mate.
    """

    kind: str
    value: int

    def __post_init__(self):
        if self.kind not in ("cp", "mate"):
            raise ValueError(f"bad score kind {self.kind!r}")
        if self.kind == "mate" and self.value == 0:
            raise ValueError("mate-in value must be nonzero")

    def comparison_key(self) -> int:
        """Centipawn-comparable magnitude; mates map to +/-(100000 - plies)."""
        if self.kind == "cp":
            return self.value
        if self.value > 0:
            return MATE_SCORE - (2 * self.value - 1)
        return -(MATE_SCORE - 2 * (-self.value))

    def negate(self) -> "EvalScore":
        return EvalScore(self.kind, -self.value)


def score_from_search(value: int) -> EvalScore:
    """Convert an internal negamax value (mate encoded as MATE_SCORE - plies)."""
    if value > MATE_THRESHOLD:
        plies = MATE_SCORE - value
        return EvalScore("mate", (plies + 1) // 2)
    if value < -MATE_THRESHOLD:
        plies = MATE_SCORE + value
        return EvalScore("mate", -((plies + 1) // 2))
    return EvalScore("cp", value)
