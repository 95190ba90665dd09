"""KSG mutual information, relative entropies, and normalized MI.

Everything here is assembly over a RadiusSet and ScaledRadii:

    mi_ksg   = psi(N) + psi(k) - < psi(n_x + 1) + psi(n_y + 1) >
    h_x      = -< psi(n_x + 1) > + psi(N) + d_x < ln eps_tilde >
    h_xy     = -psi(k) + psi(N) + (d_x + d_y) < ln eps_tilde >
    nmi      = (h_x + h_y - h_xy) / sqrt(h_x * h_y)

Note that h_x + h_y - h_xy cancels the < ln eps_tilde > terms and reduces
algebraically to the KSG expression, so the normalization backend only
ever influences the entropies (hence the NMI denominator). Both MI routes
are computed and reported.

NMI is undefined when the entropy product is not positive; that case
returns None rather than raising, because mildly negative relative
entropies are legitimate data for concentrated marginals. Estimates are
never clamped to [0, 1].
"""

import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from .dataset import Dataset
from .neighbors import RadiusSet, compute_knn_radii
from .scaling import Backend, ScaledRadii, normalize, scale_radii
from .special import digamma


@dataclass(frozen=True)
class EstimateReport:
    """All estimator outputs for one dataset / backend combination (nats)."""

    mi_ksg: float
    h_x: float
    h_y: float
    h_xy: float
    mi_from_entropies: float
    nmi: Optional[float]  # None when the entropy product is not positive
    backend: Backend
    n_samples: int
    k: int


def ksg_mi(radii: RadiusSet, n_samples: int, k: int) -> float:
    """KSG (algorithm 1) mutual information estimate in nats."""
    counts_term = digamma(radii.n_x + 1.0) + digamma(radii.n_y + 1.0)
    return digamma(float(n_samples)) + digamma(float(k)) - float(np.mean(counts_term))


def relative_entropy_marginal(
    radii: RadiusSet, scaled: ScaledRadii, d: int, which: Literal["x", "y"]
) -> float:
    """Marginal relative entropy from joint-ball counts and scaled radii."""
    counts = radii.n_x if which == "x" else radii.n_y
    n = radii.n
    return (
        -float(np.mean(digamma(counts + 1.0)))
        + digamma(float(n))
        + d * scaled.mean_ln_epsilon_tilde
    )


def relative_entropy_joint(
    radii: RadiusSet, scaled: ScaledRadii, d_x: int, d_y: int, k: int
) -> float:
    """Joint relative entropy from the k-th neighbor statistics."""
    n = radii.n
    return (
        -digamma(float(k))
        + digamma(float(n))
        + (d_x + d_y) * scaled.mean_ln_epsilon_tilde
    )


def nmi(mi: float, h_x: float, h_y: float) -> Optional[float]:
    """MI normalized by the geometric mean of the marginal entropies.

    Returns None (undefined) when h_x * h_y <= 0; callers record it as a
    missing value, not an error.
    """
    product = h_x * h_y
    if not product > 0.0:
        return None
    return float(mi / math.sqrt(product))


def estimate_from_radii(
    radii: RadiusSet,
    d_x: int,
    d_y: int,
    backend: Backend = Backend.PROPOSED,
) -> EstimateReport:
    """Assemble a full report from precomputed radii (shared across backends).

    Raises NonFiniteNormalizationError if the backend's ln V is not finite
    (the baseline's overflow mode).
    """
    norm = normalize(radii.epsilon, d_x + d_y, backend)
    scaled = scale_radii(radii.epsilon, norm)

    h_x = relative_entropy_marginal(radii, scaled, d_x, "x")
    h_y = relative_entropy_marginal(radii, scaled, d_y, "y")
    h_xy = relative_entropy_joint(radii, scaled, d_x, d_y, radii.k)
    mi_entropies = h_x + h_y - h_xy

    return EstimateReport(
        mi_ksg=ksg_mi(radii, radii.n, radii.k),
        h_x=h_x,
        h_y=h_y,
        h_xy=h_xy,
        mi_from_entropies=mi_entropies,
        nmi=nmi(mi_entropies, h_x, h_y),
        backend=Backend(backend),
        n_samples=radii.n,
        k=radii.k,
    )


def estimate(
    data: Dataset, k: int = 5, backend: Backend = Backend.PROPOSED
) -> EstimateReport:
    """One-shot NMI estimation: k-NN radii, normalization, entropies, NMI."""
    radii = compute_knn_radii(data, k)
    return estimate_from_radii(radii, data.d_x, data.d_y, backend)
