"""Eigenvalue bounds of the game operator and searches over angle space.

The min-max principle turns "how large can the score get" into an
eigenvalue problem: over all states, beta at fixed settings ranges
exactly over [lambda_min, lambda_max] of the game operator. For the two
measurement families used throughout (angles (0, 2*phi, 2*theta) and
(0, 2*theta, -2*theta)) the full spectrum has closed trigonometric
forms, implemented here verbatim and cross-checked against the numeric
eigensolver. Eigenvectors are classified by their content in the Bell
basis rather than by index, which stays meaningful under degeneracies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .scoring import game_operator
from .states import (
    BELL_BASIS_ORDER,
    BellState,
    OneParam,
    Parametrization,
    QuantumState,
    SettingTriple,
    TwoParam,
)

RADICAND_ERROR_FLOOR = -1e-9  # more negative than this means a transcription bug
UNIT_NORM_TOL = 1e-10

SEARCH_GRID_STEP_DEG = 0.5
SEARCH_REFINE_TOL_RAD = 1e-8
SEARCH_REFINE_ROUNDS = 3

# fixed eigenvalue-to-eigenvector pairing in the one-parameter family
ONE_PARAM_EIGENVECTORS = (BellState.PHI_PLUS, BellState.PSI_PLUS,
                          BellState.PHI_MINUS, BellState.PSI_MINUS)

_TWO_PARAM_LABELS = ("phi+", "psi-", "span{psi+,phi-}", "span{psi+,phi-}")


class ClosedFormError(ArithmeticError):
    """The closed-form radicand went negative beyond rounding noise."""


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """The four eigenvalues in formula order (not sorted)."""

    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    parametrization: TwoParam | OneParam

    def as_array(self) -> np.ndarray:
        return np.array([self.lambda1, self.lambda2, self.lambda3, self.lambda4])

    def sorted_descending(self) -> np.ndarray:
        return np.sort(self.as_array())[::-1]

    @property
    def eigenvector_labels(self) -> tuple[str, str, str, str]:
        """Bell content of each eigenvector, index-matched to the lambdas."""
        if isinstance(self.parametrization, OneParam):
            return tuple(s.value for s in ONE_PARAM_EIGENVECTORS)
        return _TWO_PARAM_LABELS


def _guarded_sqrt(radicand):
    """sqrt of a mathematically non-negative radicand.

    Rounding noise slightly below zero is clamped; anything beyond the
    floor means the formula was transcribed wrong and raises.
    """
    low = float(np.min(radicand))
    if low < RADICAND_ERROR_FLOOR:
        raise ClosedFormError(f"negative radicand {low:.3e} in the two-parameter "
                              "eigenvalue formulas")
    return np.sqrt(np.clip(radicand, 0.0, None))


def _two_param_lambdas(phi, theta):
    """Evaluate the two-parameter formulas; works on scalars or arrays.

    The radicand under lambda3/lambda4 cancels to zero at degenerate
    points, and the square root turns summation noise eps into a
    sqrt(eps) eigenvalue error. Evaluating it in extended precision
    keeps that error a couple of orders below the 1e-8 scale the
    numeric cross-checks use.
    """
    l1 = 6.0 - np.cos(2 * theta) - np.cos(2 * (theta - phi)) - np.cos(2 * phi)
    l2 = 3.0 + np.cos(2 * theta) + np.cos(2 * (theta - phi)) + np.cos(2 * phi)
    phi_l = np.asarray(phi, dtype=np.longdouble)
    theta_l = np.asarray(theta, dtype=np.longdouble)
    radicand = (15.0 + 2 * np.cos(4 * theta_l) - 4 * np.cos(2 * (theta_l - 2 * phi_l))
                - 4 * np.cos(2 * (2 * theta_l - phi_l)) + 2 * np.cos(4 * (theta_l - phi_l))
                + 2 * np.cos(4 * phi_l) - 4 * np.cos(2 * (theta_l + phi_l)))
    root = _guarded_sqrt(radicand)
    l3 = 0.5 * (9.0 - root)
    l4 = 0.5 * (9.0 + root)
    if np.ndim(l3):
        return (np.asarray(l1, dtype=float), np.asarray(l2, dtype=float),
                l3.astype(float), l4.astype(float))
    return float(l1), float(l2), float(l3), float(l4)


def _one_param_lambdas(theta):
    """Evaluate the one-parameter formulas; works on scalars or arrays."""
    c2 = np.cos(2 * theta)
    c4 = np.cos(4 * theta)
    l1 = 6.0 - 2 * c2 - c4
    l2 = 5.0 + 2 * c2 - c4
    l3 = 4.0 - 2 * c2 + c4
    l4 = 3.0 + 2 * c2 + c4
    return l1, l2, l3, l4


def closed_form_two_param(phi: float, theta: float) -> ClosedFormSpectrum:
    """Closed-form spectrum for measurement angles (0, 2*phi, 2*theta)."""
    l1, l2, l3, l4 = _two_param_lambdas(float(phi), float(theta))
    return ClosedFormSpectrum(float(l1), float(l2), float(l3), float(l4),
                              TwoParam(float(phi), float(theta)))


def closed_form_one_param(theta: float) -> ClosedFormSpectrum:
    """Closed-form spectrum for measurement angles (0, 2*theta, -2*theta).

    Here every eigenvalue belongs to a fixed Bell state, see
    ``ClosedFormSpectrum.eigenvector_labels``.
    """
    l1, l2, l3, l4 = _one_param_lambdas(float(theta))
    return ClosedFormSpectrum(float(l1), float(l2), float(l3), float(l4),
                              OneParam(float(theta)))


def numeric_spectrum(settings: Parametrization) -> linalg.Spectrum:
    """Spectrum of the game operator by the Jacobi eigensolver."""
    return linalg.hermitian_eigen(game_operator(settings.settings()))


@dataclass(frozen=True)
class BellDecomposition:
    """Amplitudes of a 4-vector in the Bell basis (order BELL_BASIS_ORDER).

    ``residual`` is the norm of whatever falls outside the Bell span;
    the basis is complete, so it only measures numerical error.
    """

    amplitudes: np.ndarray
    residual: float

    def magnitude(self, label: BellState) -> float:
        return float(abs(self.amplitudes[BELL_BASIS_ORDER.index(label)]))


def bell_decompose(vector) -> BellDecomposition:
    """Expand a unit 4-vector over the four Bell states."""
    v = np.asarray(vector, dtype=complex)
    if v.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {v.shape}")
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise ValueError(f"expected a unit vector, got norm {norm:.12g}")
    amps = np.array([np.vdot(b.vector, v) for b in BELL_BASIS_ORDER])
    recon = sum(a * b.vector for a, b in zip(amps, BELL_BASIS_ORDER))
    return BellDecomposition(amplitudes=amps, residual=float(np.linalg.norm(v - recon)))


def bell_content_label(vector, tol: float = 1e-6) -> str:
    """Short description of which Bell states a vector lives on."""
    dec = bell_decompose(vector)
    names = [b.value for b, a in zip(BELL_BASIS_ORDER, dec.amplitudes) if abs(a) > tol]
    if len(names) == 1:
        return names[0]
    return "span{" + ",".join(names) + "}"


@dataclass(frozen=True)
class Optimum:
    """An extremum of the spectrum over a measurement family."""

    settings: SettingTriple
    beta: float
    state_label: str
    parametrization: TwoParam | OneParam
    # family parameters (degrees) of every grid point tying the extremum
    grid_candidates_deg: tuple[tuple[float, ...], ...] = field(default=())


def _golden_section_min(f, lo: float, hi: float, tol: float) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def find_optimum(family, objective: str = "max") -> Optimum:
    """Search a measurement family for the extremal eigenvalue.

    ``family`` is the TwoParam or OneParam class. A 0.5-degree grid over
    [-90, 90] degrees per parameter locates the extremum; golden-section
    coordinate descent then refines it to ~1e-8 rad. Grid points tying
    the extremum (symmetry partners) are all reported; the canonical one
    minimizes the sum of absolute parameters, ties broken
    lexicographically.
    """
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    if family not in (TwoParam, OneParam):
        raise ValueError("family must be the TwoParam or OneParam class")

    n_params = 2 if family is TwoParam else 1
    sign = -1.0 if objective == "max" else 1.0

    def extremal(*params):
        lams = (_two_param_lambdas(*params) if family is TwoParam
                else _one_param_lambdas(*params))
        stack = np.stack(np.broadcast_arrays(*lams))
        return stack.max(axis=0) if objective == "max" else stack.min(axis=0)

    steps = int(round(180.0 / SEARCH_GRID_STEP_DEG)) + 1
    axis_deg = np.linspace(-90.0, 90.0, steps)
    axis = np.radians(axis_deg)
    if n_params == 2:
        grids = np.meshgrid(axis, axis, indexing="ij")
    else:
        grids = (axis,)
    values = extremal(*grids)

    best = values.max() if objective == "max" else values.min()
    tie = np.argwhere(np.abs(values - best) <= 1e-9)
    candidates_deg = tuple(tuple(float(axis_deg[k]) for k in idx) for idx in tie)
    canonical = min(candidates_deg, key=lambda c: (sum(abs(x) for x in c), c))

    params = [math.radians(x) for x in canonical]
    half = math.radians(SEARCH_GRID_STEP_DEG)
    for _ in range(SEARCH_REFINE_ROUNDS):
        for k in range(n_params):
            def along(x, k=k):
                probe = list(params)
                probe[k] = x
                return sign * float(extremal(*probe))
            params[k] = _golden_section_min(along, params[k] - half, params[k] + half,
                                            SEARCH_REFINE_TOL_RAD)

    point = TwoParam(*params) if family is TwoParam else OneParam(*params)
    settings = point.settings()
    beta = float(extremal(*params))
    spec = numeric_spectrum(settings)
    vec = spec.eigenvectors[:, 0 if objective == "max" else -1]
    return Optimum(settings=settings, beta=beta, state_label=bell_content_label(vec),
                   parametrization=point, grid_candidates_deg=candidates_deg)


@dataclass(frozen=True)
class SweepDataset:
    """A tabulated sweep: column names plus rows of plain Python values."""

    columns: tuple[str, ...]
    rows: list[tuple]

    def column(self, name: str) -> list:
        k = self.columns.index(name)
        return [row[k] for row in self.rows]


def _family_axis(grid_resolution: int) -> np.ndarray:
    if grid_resolution < 2:
        raise ValueError(f"grid resolution must be >= 2, got {grid_resolution}")
    return np.linspace(-90.0, 90.0, int(grid_resolution))


def sweep_surface(family, grid_resolution: int, state: QuantumState | None = None,
                  include_numeric: bool = False) -> SweepDataset:
    """Tabulate eigenvalue bounds or a state's score over a family grid.

    With ``state=None`` the columns are the closed-form eigenvalues
    (plus, for the one-parameter family, their fixed Bell labels); with
    a state they are its beta. ``include_numeric`` appends the Jacobi
    eigenvalues in descending order for cross-validation. Angles in the
    dataset are degrees.
    """
    axis_deg = _family_axis(grid_resolution)
    rows: list[tuple] = []

    if family is TwoParam:
        lead = ("phi_deg", "theta_deg")
        points = [(p, t) for p in axis_deg for t in axis_deg]
    elif family is OneParam:
        lead = ("theta_deg",)
        points = [(t,) for t in axis_deg]
    else:
        raise ValueError("family must be the TwoParam or OneParam class")

    if state is not None:
        # expectation-value route, term-sum equivalence is pinned by tests
        columns = lead + ("beta",)
        rho = state.rho
        for pt in points:
            params = [math.radians(x) for x in pt]
            fam = TwoParam(*params) if family is TwoParam else OneParam(*params)
            value = float(np.trace(rho @ game_operator(fam.settings())).real)
            rows.append(tuple(float(x) for x in pt) + (value,))
        return SweepDataset(columns=columns, rows=rows)

    columns = lead + ("lambda1", "lambda2", "lambda3", "lambda4")
    if family is OneParam:
        columns += ("state1", "state2", "state3", "state4")
    if include_numeric:
        columns += ("lambda1_numeric", "lambda2_numeric",
                    "lambda3_numeric", "lambda4_numeric")
    labels = tuple(s.value for s in ONE_PARAM_EIGENVECTORS)

    for pt in points:
        params = [math.radians(x) for x in pt]
        if family is TwoParam:
            cf = closed_form_two_param(*params)
        else:
            cf = closed_form_one_param(*params)
        row = tuple(float(x) for x in pt) + tuple(cf.as_array())
        if family is OneParam:
            row += labels
        if include_numeric:
            numeric = numeric_spectrum(cf.parametrization.settings())
            row += tuple(numeric.eigenvalues)
        rows.append(row)
    return SweepDataset(columns=columns, rows=rows)
