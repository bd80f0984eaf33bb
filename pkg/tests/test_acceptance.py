"""Acceptance suite: the headline claims of the laboratory, one test each.

Every test prints one PASS/FAIL line (visible with ``pytest -s`` or in
captured output) and asserts its stated tolerance. Runtime-sensitive
checks also assert their budget.
"""

import time

import numpy as np

from qorient import (
    OPTIMAL_SETTINGS,
    BellState,
    OneParam,
    SettingTriple,
    TwoParam,
    bell_decompose,
    bell_state_density,
    beta_from_counts,
    beta_value,
    classical_success_bound,
    closed_form_two_param,
    enumerate_all,
    fit_noise,
    fit_noise_max_point,
    game_operator,
    maximally_mixed,
    noisy_phi_plus,
    numeric_spectrum,
    run_game,
    sweep_surface,
    synth_counts,
)

DEG = np.pi / 180.0


def report(n, ok, message):
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {message}")
    assert ok, f"criterion {n}: {message}"


def test_criterion_1_quantum_optimum():
    closed = closed_form_two_param(60 * DEG, -60 * DEG).lambda1
    numeric = numeric_spectrum(SettingTriple.from_degrees(0, 120, -120)).eigenvalues[0]
    ok = abs(closed - 7.5) <= 1e-9 and abs(numeric - 7.5) <= 1e-9
    report(1, ok, f"quantum optimum 7.5: closed form {closed:.12f}, "
                  f"numeric {numeric:.12f}")


def test_criterion_2_quantum_minimum():
    value = closed_form_two_param(60 * DEG, -60 * DEG).lambda2
    ok = abs(value - 1.5) <= 1e-9
    report(2, ok, f"quantum minimum 1.5: lambda2(60, -60) = {value:.12f}")


def test_criterion_3_classical_bound():
    t0 = time.perf_counter()
    scored = enumerate_all()
    best = max(score for _, score in scored)
    elapsed = time.perf_counter() - t0
    bound = classical_success_bound()
    ok = len(scored) == 64 and best == 7 and bound == 7 / 9
    report(3, ok, f"classical bound: max over {len(scored)} strategies = {best}, "
                  f"success bound = {bound:.6f} ({elapsed * 1e3:.2f} ms)")


def test_criterion_4_operator_trace():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        settings = SettingTriple(*rng.uniform(-np.pi, np.pi, size=3))
        worst = max(worst, abs(np.trace(game_operator(settings)).real - 18.0))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 1.0
    report(4, ok, f"operator trace 18 over 1000 random triples: worst defect "
                  f"{worst:.3e} in {elapsed:.3f} s")


def test_criterion_5_closed_form_numeric_agreement():
    axis = np.radians(np.linspace(-90.0, 90.0, 181))
    t0 = time.perf_counter()
    worst = 0.0
    ceiling = -np.inf
    for phi in axis:
        for theta in axis:
            cf = closed_form_two_param(phi, theta)
            num = numeric_spectrum(TwoParam(phi, theta))
            worst = max(worst, float(np.abs(cf.sorted_descending()
                                            - num.eigenvalues).max()))
            ceiling = max(ceiling, cf.lambda3 - 7.0, cf.lambda4 - 7.0)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and ceiling <= 1e-9 and elapsed < 60.0
    report(5, ok, f"181x181 grid: worst multiset diff {worst:.3e}, "
                  f"max(lambda3, lambda4) - 7 = {ceiling:.3e}, {elapsed:.1f} s")


def test_criterion_6_bell_structure_of_eigenvectors():
    # foreign-amplitude bound per closed-form branch, checked away from
    # degeneracies (all eigenvalue gaps > 1e-6)
    foreign = {0: (BellState.PHI_MINUS, BellState.PSI_PLUS, BellState.PSI_MINUS),
               1: (BellState.PHI_PLUS, BellState.PHI_MINUS, BellState.PSI_PLUS),
               2: (BellState.PHI_PLUS, BellState.PSI_MINUS),
               3: (BellState.PHI_PLUS, BellState.PSI_MINUS)}
    axis = np.radians(np.linspace(-90.0, 90.0, 37))
    rng = np.random.default_rng(7)
    points = [(p, t) for p in axis for t in axis]
    points += [tuple(rng.uniform(-np.pi / 2, np.pi / 2, size=2)) for _ in range(200)]

    worst = 0.0
    checked = 0
    for phi, theta in points:
        cf = closed_form_two_param(phi, theta)
        lams = cf.as_array()
        num = numeric_spectrum(TwoParam(phi, theta))
        for k in range(4):
            gaps = np.abs(np.delete(lams, k) - lams[k])
            if gaps.min() <= 1e-6:
                continue
            j = int(np.argmin(np.abs(num.eigenvalues - lams[k])))
            dec = bell_decompose(num.eigenvectors[:, j])
            worst = max(worst, max(dec.magnitude(b) for b in foreign[k]))
            checked += 1
    ok = checked > 1000 and worst <= 1e-8
    report(6, ok, f"Bell structure of eigenvectors: {checked} isolated branches, "
                  f"worst foreign amplitude {worst:.3e}")


def test_criterion_7_game_simulation():
    phi_plus = bell_state_density(BellState.PHI_PLUS)
    t0 = time.perf_counter()
    ideal = run_game(phi_plus, OPTIMAL_SETTINGS, 10**6, 0)
    mixed = run_game(maximally_mixed(), OPTIMAL_SETTINGS, 10**6, 0)
    elapsed = time.perf_counter() - t0
    d_ideal = abs(ideal.success_rate - 5 / 6)
    d_mixed = abs(mixed.success_rate - 0.5)
    ok = d_ideal <= 0.0015 and d_mixed <= 0.002
    report(7, ok, f"game simulation (1e6 trials, seed 0): phi+ rate "
                  f"{ideal.success_rate:.6f} (|d| = {d_ideal:.2e}), mixed rate "
                  f"{mixed.success_rate:.6f} (|d| = {d_mixed:.2e}), {elapsed:.1f} s")


def test_criterion_8_noise_line_and_fit_round_trip():
    worst_line = 0.0
    for p in (0.0, 0.25, 0.5, 0.75, 0.98, 1.0):
        beta = beta_value(noisy_phi_plus(p), OPTIMAL_SETTINGS).beta
        worst_line = max(worst_line, abs(beta - (4.5 + 3 * p)))

    state = noisy_phi_plus(0.98)
    thetas = np.radians(np.linspace(-90.0, 90.0, 13))
    good = 0
    for seed in range(100):
        observed = []
        for k, theta in enumerate(thetas):
            fam = OneParam(float(theta))
            table = synth_counts(state, fam.settings(), 10**5, seed * 1000 + k)
            observed.append((fam, beta_from_counts(table).beta))
        fit = fit_noise(observed, method="curve-fit")
        good += abs(fit.p_hat - 0.98) <= 0.01
    ok = worst_line <= 1e-9 and good >= 95
    report(8, ok, f"noise line worst defect {worst_line:.3e}; sampled fit round "
                  f"trip recovered p=0.98 within 0.01 in {good}/100 seeds")


def test_criterion_9_headline_inversion():
    fit = fit_noise_max_point(7.41)
    analytic = (7.41 - 4.5) / 3.0
    # the two estimation methods are both exposed because a full-curve fit
    # can legitimately land away from this single-point inversion
    ok = abs(fit.p_hat - analytic) <= 1e-12 and abs(fit.p_hat - 0.97) <= 1e-12
    report(9, ok, f"max-point inversion of beta = 7.41: p = {fit.p_hat:.12f} "
                  f"(analytic {analytic:.12f})")


def test_criterion_10_beta_surface_extrema():
    grids = {label: sweep_surface(TwoParam, 181,
                                  state=bell_state_density(label))
             for label in BellState}
    stats = {label: (max(ds.column("beta")), min(ds.column("beta")))
             for label, ds in grids.items()}

    phi_plus_max = stats[BellState.PHI_PLUS][0]
    phi_minus_max = stats[BellState.PHI_MINUS][0]
    psi_plus_max = stats[BellState.PSI_PLUS][0]
    psi_minus_min = stats[BellState.PSI_MINUS][1]

    ds = grids[BellState.PHI_PLUS]
    argmax = {(row[0], row[1]) for row, v in zip(ds.rows, ds.column("beta"))
              if abs(v - phi_plus_max) <= 1e-9}

    ok = (abs(phi_plus_max - 7.5) <= 1e-9
          and abs(phi_minus_max - 7.0) <= 1e-6
          and psi_plus_max < 7.0
          and abs(psi_minus_min - 1.5) <= 1e-9
          and (60.0, -60.0) in argmax)
    report(10, ok, f"surface extrema: phi+ max {phi_plus_max:.9f} "
                   f"(argmax contains (60, -60): {(60.0, -60.0) in argmax}), "
                   f"phi- max {phi_minus_max:.9f}, psi+ max {psi_plus_max:.9f} < 7, "
                   f"psi- min {psi_minus_min:.9f}")
