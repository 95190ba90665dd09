"""Estimate NMI on correlated Gaussians and compare against the closed form.

Generates componentwise-correlated pairs, runs the full pipeline (k-NN
radii, log-domain normalization, entropy assembly), and prints estimates
next to the analytic reference -ln(1 - rho^2)/ln(2 pi e). Small n keeps
this quick; expect visible estimator bias (undershoot at d = 1, overshoot
by d = 4) on top of sampling noise — the bias pattern is a property of the
estimator, not a bug in the run.
"""

from knnmi import GaussianSpec, estimate, gaussian_truth, generate_gaussian

N = 4000
K = 5

print(f"n = {N}, k = {K}")
print(f"{'d':>3} {'rho':>5} {'nmi_est':>9} {'nmi_true':>9} {'mi_est':>9} {'mi_true':>9}")

for d in (1, 2, 4):
    for rho in (0.0, 0.3, 0.6, 0.9):
        data = generate_gaussian(GaussianSpec(d=d, rho=rho, n=N, seed=2024))
        row = estimate(data, k=K)
        truth = gaussian_truth(d, rho)
        print(
            f"{d:>3} {rho:>5.1f} {row.nmi:>9.4f} {truth.nmi_true:>9.4f}"
            f" {row.mi_from_entropies:>9.4f} {truth.mi_true:>9.4f}"
        )
