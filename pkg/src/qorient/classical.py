"""Local-realistic benchmark for the orientation game.

A deterministic strategy assigns each player a fixed direction for every
path. Shared randomness only mixes these 64 extremal strategies, so the
best deterministic score is the classical bound; brute-force enumeration
verifies it rather than re-deriving it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scoring import N_TERMS, OPP_PAIRS

SIGNS = (+1, -1)


@dataclass(frozen=True)
class DeterministicStrategy:
    """A fixed direction (+1 or -1) per path for each player."""

    alice: tuple[int, int, int]
    bob: tuple[int, int, int]

    def __post_init__(self):
        for side in (self.alice, self.bob):
            if len(side) != 3 or any(s not in SIGNS for s in side):
                raise ValueError(f"strategy entries must be +1/-1 triples, got {side!r}")


def classical_beta(strategy: DeterministicStrategy) -> int:
    """Deterministic score: same-path matches plus ordered cross-path mismatches."""
    a, b = strategy.alice, strategy.bob
    same = sum(1 for i in range(3) if a[i] == b[i])
    opp = sum(1 for i, j in OPP_PAIRS if a[i] != b[j])
    return same + opp


def enumerate_all() -> list[tuple[DeterministicStrategy, int]]:
    """Score all 64 deterministic strategy pairs, in product order."""
    out = []
    for a in itertools.product(SIGNS, repeat=3):
        for b in itertools.product(SIGNS, repeat=3):
            s = DeterministicStrategy(alice=a, bob=b)
            out.append((s, classical_beta(s)))
    return out


def classical_maximum() -> tuple[int, list[DeterministicStrategy]]:
    """Best deterministic score and every strategy achieving it."""
    scored = enumerate_all()
    best = max(score for _, score in scored)
    return best, [s for s, score in scored if score == best]


def classical_minimum() -> tuple[int, list[DeterministicStrategy]]:
    """Worst deterministic score and every strategy achieving it."""
    scored = enumerate_all()
    worst = min(score for _, score in scored)
    return worst, [s for s, score in scored if score == worst]


def classical_success_bound() -> float:
    """Best classical success probability: max deterministic score / 9.

    Mixed (shared-randomness) strategies are convex combinations of the
    deterministic ones, so they cannot exceed this.
    """
    best, _ = classical_maximum()
    return best / N_TERMS
