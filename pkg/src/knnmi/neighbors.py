"""Exact k-th-neighbor radii in joint space plus marginal neighbor counts.

Distances are Chebyshev (max-norm) in both the joint and the marginal
spaces, so a point inside the joint ball is inside both marginal balls.
Marginal counts use strict inequality (< epsilon) and exclude the query
point, the KSG "algorithm 1" convention. Consequences worth remembering:

* the k-th joint neighbor sits at marginal distance exactly epsilon on at
  least one side and is therefore NOT counted there, so n_x, n_y >= k - 1
  (not k);
* duplicate joint points make epsilon = 0 and are a hard error — silent
  jitter would perturb the estimate invisibly.

The scan is exact brute force over all pairs: samples are transposed to
feature-major layout once, then each feature's |a_i - a_j| plane is folded
into a running max, blocked over query rows with scratch buffers reused
across blocks (fresh 100 MB temporaries per block turn into page-fault
churn, and reducing over a short last axis hits numpy's slow strided path).
Every reduction (max, partition, integer count) is order-independent, so
results are bit-identical for any block size.
"""

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .errors import ConfigurationError, DuplicatePointError

_SCRATCH_ELEMS = 2**22  # doubles per scratch buffer (32 MiB)


@dataclass(frozen=True)
class RadiusSet:
    """Per-point k-th-neighbor distances and marginal ball counts.

    epsilon[i] is the joint-space max-norm distance from sample i to its
    k-th nearest neighbor (self excluded); n_x[i] and n_y[i] count samples
    j != i whose marginal distance is strictly below epsilon[i].
    """

    epsilon: np.ndarray
    n_x: np.ndarray
    n_y: np.ndarray
    k: int

    @property
    def n(self) -> int:
        return self.epsilon.shape[0]


def compute_knn_radii(data: Dataset, k: int) -> RadiusSet:
    """Joint k-th-neighbor radius and marginal counts for every sample.

    Parameters
    ----------
    data : Dataset
        Paired samples; requires n >= k + 1.
    k : int
        Number of joint-space neighbors (1 <= k < n).

    Raises
    ------
    ConfigurationError
        If k is out of range for the sample count.
    DuplicatePointError
        If two samples coincide in joint space (epsilon would be 0).
    """
    n = data.n
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ConfigurationError(f"k must be a positive integer, got {k!r}")
    if k >= n:
        raise ConfigurationError(
            f"k = {k} requires at least k + 1 = {k + 1} samples, got {n}"
        )

    epsilon = np.empty(n, dtype=np.float64)
    n_x = np.empty(n, dtype=np.int64)
    n_y = np.empty(n, dtype=np.int64)

    x_features = np.ascontiguousarray(data.x.T)
    y_features = np.ascontiguousarray(data.y.T)

    block = max(8, min(n, _SCRATCH_ELEMS // n))
    dist_x = np.empty((block, n))
    dist_y = np.empty((block, n))
    dist_joint = np.empty((block, n))
    plane = np.empty((block, n))
    inside = np.empty((block, n), dtype=bool)

    def marginal_distances(features: np.ndarray, dist: np.ndarray, start: int, stop: int):
        """Fill dist[i - start, j] = ||a[i] - a[j]||_inf from feature-major rows."""
        b = stop - start
        dist.fill(0.0)
        for col in features:
            p = plane[:b]
            np.subtract(col[start:stop, None], col[None, :], out=p)
            np.abs(p, out=p)
            np.maximum(dist, p, out=dist)

    for start in range(0, n, block):
        stop = min(start + block, n)
        b = stop - start
        dx = dist_x[:b]
        dy = dist_y[:b]
        dj = dist_joint[:b]

        marginal_distances(x_features, dx, start, stop)
        marginal_distances(y_features, dy, start, stop)
        np.maximum(dx, dy, out=dj)

        dj[np.arange(b), np.arange(start, stop)] = np.inf  # exclude self
        dj.partition(k - 1, axis=1)
        eps_block = dj[:, k - 1].copy()

        zero = np.flatnonzero(eps_block == 0.0)
        if zero.size:
            raise DuplicatePointError(start + int(zero[0]))

        # self sits at marginal distance 0 < eps and must not be counted
        np.less(dx, eps_block[:, None], out=inside[:b])
        n_x[start:stop] = inside[:b].sum(axis=1) - 1
        np.less(dy, eps_block[:, None], out=inside[:b])
        n_y[start:stop] = inside[:b].sum(axis=1) - 1
        epsilon[start:stop] = eps_block

    return RadiusSet(epsilon=epsilon, n_x=n_x, n_y=n_y, k=int(k))
