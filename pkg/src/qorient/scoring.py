"""Quantum scoring of the orientation game.

Both players pick one of three paths; the score credits matching
directions on the same path and opposite directions on different paths.
The total over the 3 same-path and 6 ordered cross-path terms is the
Bell-type score beta, with success probability beta / 9. The same score
is the expectation of a single self-adjoint game operator, which is what
makes the min-max eigenvalue analysis in :mod:`qorient.spectra` work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .states import Parametrization, QuantumState, projector

N_PATHS = 3
N_TERMS = 9  # 3 same-path + 6 ordered cross-path
CLASSICAL_BOUND = 7.0

# ordered cross-path index pairs (0-based), the fixed order used by
# BetaBreakdown.p_opp and the count tables
OPP_PAIRS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))

OPERATOR_TRACE = 18.0  # 18 terms, each a product of two unit-trace projectors
MIXED_BETA = OPERATOR_TRACE / 4.0  # score of the maximally mixed state, any settings
PURE_MAX_BETA = 7.5  # top of the spectrum over all settings (reached by phi+)


@dataclass(frozen=True)
class BetaBreakdown:
    """Per-term scores: 3 same-path, 6 cross-path (OPP_PAIRS order)."""

    p_same: tuple[float, float, float]
    p_opp: tuple[float, float, float, float, float, float]
    beta: float
    success_probability: float

    @classmethod
    def from_terms(cls, p_same, p_opp) -> "BetaBreakdown":
        p_same = tuple(float(x) for x in p_same)
        p_opp = tuple(float(x) for x in p_opp)
        beta = sum(p_same) + sum(p_opp)
        return cls(p_same=p_same, p_opp=p_opp, beta=beta,
                   success_probability=beta / N_TERMS)


def joint_probability(state: QuantumState, sign_a: int, theta_a: float,
                      sign_b: int, theta_b: float) -> float:
    """Probability of outcome pair (sign_a, sign_b) at angles (theta_a, theta_b).

    Born rule: tr(rho [A_sa(ta) (x) A_sb(tb)]).
    """
    op = linalg.kron(projector(sign_a, theta_a), projector(sign_b, theta_b))
    return float(np.trace(state.rho @ op).real)


def outcome_distribution(state: QuantumState, theta_a: float, theta_b: float) -> np.ndarray:
    """The four joint probabilities at one angle pair, order (++, +-, -+, --)."""
    return np.array([
        joint_probability(state, +1, theta_a, +1, theta_b),
        joint_probability(state, +1, theta_a, -1, theta_b),
        joint_probability(state, -1, theta_a, +1, theta_b),
        joint_probability(state, -1, theta_a, -1, theta_b),
    ])


def prob_same(state: QuantumState, theta: float) -> float:
    """Probability both players output the same direction at a shared angle."""
    return (joint_probability(state, +1, theta, +1, theta)
            + joint_probability(state, -1, theta, -1, theta))


def prob_opp(state: QuantumState, theta_i: float, theta_j: float) -> float:
    """Probability of opposite directions at two different path angles."""
    return (joint_probability(state, +1, theta_i, -1, theta_j)
            + joint_probability(state, -1, theta_i, +1, theta_j))


def game_operator(settings: Parametrization) -> np.ndarray:
    """The self-adjoint operator whose expectation in rho equals beta.

    Sum of the 18 projector products: equal signs on equal paths plus
    unequal signs on the 6 ordered unequal path pairs. Its trace is 18
    for any settings.
    """
    angles = settings.settings().as_tuple()
    plus = [projector(+1, t) for t in angles]
    minus = [projector(-1, t) for t in angles]
    op = np.zeros((4, 4), dtype=complex)
    for i in range(N_PATHS):
        op += linalg.kron(plus[i], plus[i])
        op += linalg.kron(minus[i], minus[i])
    for i, j in OPP_PAIRS:
        op += linalg.kron(plus[i], minus[j])
        op += linalg.kron(minus[i], plus[j])
    return op


def beta_value(state: QuantumState, settings: Parametrization) -> BetaBreakdown:
    """Score the state at the given settings, term by term."""
    angles = settings.settings().as_tuple()
    p_same = [prob_same(state, t) for t in angles]
    p_opp = [prob_opp(state, angles[i], angles[j]) for i, j in OPP_PAIRS]
    return BetaBreakdown.from_terms(p_same, p_opp)
