"""Distances between ranking vectors, cardinal and ordinal."""

from __future__ import annotations

import numpy as np

from .core import PriorityVector
from .errors import ShapeError


def _pair(u, v) -> tuple[np.ndarray, np.ndarray]:
    a = u.weights if isinstance(u, PriorityVector) else np.asarray(u, dtype=float)
    b = v.weights if isinstance(v, PriorityVector) else np.asarray(v, dtype=float)
    if a.shape != b.shape:
        raise ShapeError(f"vector lengths differ: {a.shape} vs {b.shape}")
    return a, b


def manhattan(u, v) -> float:
    """Sum of absolute componentwise differences; at most 2 for normalized vectors."""
    a, b = _pair(u, v)
    return float(np.sum(np.abs(a - b)))


def manhattan_mean(u, v) -> float:
    """Manhattan distance averaged over the n components."""
    a, b = _pair(u, v)
    return float(np.mean(np.abs(a - b)))


def chebyshev(u, v) -> float:
    """Largest componentwise gap."""
    a, b = _pair(u, v)
    return float(np.max(np.abs(a - b)))


def euclidean(u, v) -> float:
    a, b = _pair(u, v)
    return float(np.linalg.norm(a - b))


def kendall_tau_distance(u, v) -> int:
    """Number of index pairs whose order disagrees between u and v.

    A pair tied in one vector but strictly ordered in the other counts as
    a disagreement (the sign of the difference is compared directly, and
    sign 0 is its own class).
    """
    a, b = _pair(u, v)
    su = np.sign(a[:, None] - a[None, :])
    sv = np.sign(b[:, None] - b[None, :])
    iu = np.triu_indices(a.size, k=1)
    return int(np.count_nonzero(su[iu] != sv[iu]))


def kendall_tau_normalized(u, v) -> float:
    """Kendall distance scaled to [0, 1] by the n(n-1)/2 maximum."""
    a, _ = _pair(u, v)
    n = a.size
    return 2.0 * kendall_tau_distance(u, v) / (n * (n - 1))


CARDINAL_METRICS = {
    "manhattan": manhattan,
    "euclidean": euclidean,
    "chebyshev": chebyshev,
}
