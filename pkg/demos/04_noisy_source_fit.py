"""Diagnosing an imperfect source from coincidence counts.

A realistic pair source emits p * phi+ + (1 - p)/4 * noise. Its score
falls on the straight line beta(p) = 4.5 + 3p at the optimal angles, so
a measured maximum pins p directly; a full sweep of synthetic counting
statistics recovers it by least squares. Both estimators are reported
side by side.
"""

import numpy as np

from qorient import (
    OPTIMAL_SETTINGS,
    OneParam,
    beta_from_counts,
    beta_value,
    fit_noise,
    fit_noise_max_point,
    noisy_phi_plus,
    synth_counts,
)


def main():
    print("=== The noise line: beta of p*phi+ + (1-p)/4*I at the optimum ===")
    for p in (1.0, 0.98, 0.9, 0.75, 0.5, 0.0):
        beta = beta_value(noisy_phi_plus(p), OPTIMAL_SETTINGS).beta
        print(f"  p = {p:4.2f}  ->  beta = {beta:.4f}   (line predicts {4.5 + 3 * p:.4f})")
    print()

    print("=== Counting statistics for a p = 0.98 source ===")
    state = noisy_phi_plus(0.98)
    table = synth_counts(state, OPTIMAL_SETTINGS, n_tot_per_pair=100000, seed=42)
    recon = beta_from_counts(table)
    print("  per-pair totals are fixed at 100000; the (1,1) cell counts are")
    print(f"  (N_pp, N_pm, N_mp, N_mm) = {tuple(int(x) for x in table.counts[0, 0])}")
    print(f"  reconstructed beta = {recon.beta:.4f} "
          f"(exact value {beta_value(state, OPTIMAL_SETTINGS).beta:.4f})")
    print()

    print("=== Estimator 1: invert the single maximum ===")
    fit = fit_noise_max_point(recon.beta)
    print(f"  measured beta_max = {recon.beta:.4f}  ->  p = {fit.p_hat:.4f}")
    headline = fit_noise_max_point(7.41)
    print(f"  (a reading of beta_max = 7.41 would give p = {headline.p_hat:.4f})")
    print()

    print("=== Estimator 2: least squares along the one-parameter sweep ===")
    observed = []
    for k, theta_deg in enumerate(np.linspace(-90, 90, 13)):
        fam = OneParam(np.radians(theta_deg))
        counts = synth_counts(state, fam.settings(), 100000, seed=1000 + k)
        observed.append((fam, beta_from_counts(counts).beta))
    curve = fit_noise(observed, method="curve-fit")
    print("  sweep of 13 settings, 1e5 coincidences per pair:")
    print(f"  curve-fit p = {curve.p_hat:.4f} (rms residual {curve.residual:.4f}),"
          f" generating value 0.98")
    print()
    print("the two estimators weight the data differently and need not agree")
    print("to the last digit; report both when characterizing a source.")


if __name__ == "__main__":
    main()
