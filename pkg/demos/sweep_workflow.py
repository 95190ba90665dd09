"""End-to-end sweep workflow, the library way.

Builds an experiment config in code, runs the sweep (every backend sees
the same datasets, so baseline/proposed comparisons are paired), and
aggregates the flat records into per-cell means. The same flow is
available from the shell:

    knnmi sweep --config config.json --out records.csv
    knnmi summarize --records records.csv --out summary.csv

with a JSON config file carrying exactly the field names used below.
"""

from knnmi import ExperimentConfig, run_sweep, summarize

config = ExperimentConfig(
    family="gaussian",
    base_seed=20250101,
    dims=[1, 64],
    rho_grid=[0.0, 0.6],
    n=600,
    k=5,
    repetitions=5,
    backends=["baseline", "proposed"],
)

records = run_sweep(config)
print(f"{len(records)} records (= dims x grid x repetitions x backends)")

sample = records[0]
print(f"first record: d={sample.d} rho={sample.param} backend={sample.backend} "
      f"status={sample.status} nmi={sample.nmi:.4f} checksum={sample.dataset_checksum}")

print()
print(f"{'d':>4} {'rho':>5} {'backend':>9} {'n_ok':>4} {'mean_nmi':>9} {'std_nmi':>9} {'nmi_true':>9}")
for row in summarize(records):
    mean_text = f"{row.mean_nmi:>9.4f}" if row.mean_nmi is not None else "     --  "
    std_text = f"{row.std_nmi:>9.4f}" if row.std_nmi is not None else "     --  "
    print(f"{row.d:>4} {row.param:>5.1f} {row.backend:>9} {row.n_ok:>4} "
          f"{mean_text} {std_text} {row.nmi_true:>9.4f}")
