"""Heavy-tailed benchmark: Student-t pairs share information through their
common chi-square scale even with an identity dispersion matrix.

The closed-form MI is c(nu, d) = f(nu) + f(nu + 2d) - 2 f(nu + d) with
f(x) = lnGamma(x/2) - (x/2) psi(x/2); it grows as the tails get heavier
(small nu) and vanishes in the Gaussian limit. Estimation quality degrades
sharply for nu <= 1, which is the point of the benchmark.
"""

from knnmi import StudentTSpec, estimate, generate_student_t, student_t_truth

N = 4000
K = 5
D = 4

print(f"n = {N}, k = {K}, d = {D}, identity dispersion")
print(f"{'nu':>7} {'mi_est':>9} {'mi_true':>9} {'nmi_est':>9} {'nmi_true':>9}")

for nu in (0.125, 0.5, 1.0, 2.0, 10.0):
    data = generate_student_t(StudentTSpec(d=D, nu=nu, n=N, seed=7))
    row = estimate(data, k=K)
    truth = student_t_truth(D, nu)
    nmi_text = f"{row.nmi:>9.4f}" if row.nmi is not None else "  undef  "
    print(
        f"{nu:>7.3f} {row.mi_from_entropies:>9.4f} {truth.mi_true:>9.4f}"
        f" {nmi_text} {truth.nmi_true:>9.4f}"
    )

print()
print("Sanity check of the truth: c(nu, d) -> 0 as nu -> infinity")
for nu in (10.0, 1e3, 1e6):
    print(f"  c({nu:g}, {D}) = {student_t_truth(D, nu).mi_true:.3e}")
