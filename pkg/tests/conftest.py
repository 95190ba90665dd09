"""Shared fixtures: the expensive low-dimension Gaussian sweep is run once
per session and consumed by both the acceptance gate and the harness
truth-tracking test."""

import pytest

from knnmi.harness import ExperimentConfig, run_sweep, summarize

LOW_D_BASE_SEED = 20240930


@pytest.fixture(scope="session")
def low_d_gaussian_summary():
    """Proposed-backend sweep, paper protocol at d in {1, 2, 4}.

    n = 10000, k = 5, 10 repetitions per cell; rho grid includes 0.0 for the
    independence checks. Takes a few minutes; shared across test modules.
    """
    config = ExperimentConfig(
        family="gaussian",
        base_seed=LOW_D_BASE_SEED,
        dims=[1, 2, 4],
        rho_grid=[0.0, 0.3, 0.6, 0.9],
        n=10000,
        k=5,
        repetitions=10,
        backends=["proposed"],
    )
    records = run_sweep(config)
    return records, summarize(records)
