"""Deterministic, platform-independent seed derivation."""

from __future__ import annotations

import hashlib


def derive_seed(master: int, *parts) -> int:
    """Derive a child seed from a master seed and any hashable labels.

    Stable across runs, platforms, and Python versions (sha256-based), so
    parallel and sequential execution schedules produce identical streams.
    """
    text = ":".join([str(master)] + [str(p) for p in parts])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")
