"""Weight-vector sets on the unit simplex and the preference-driven shift.

Used both for decomposition weights (MOEA/D) and for simplex-shaped Pareto
front samples (linear/spherical DTLZ families).
"""
from __future__ import annotations

import logging
from math import comb

import numpy as np

logger = logging.getLogger(__name__)


def das_dennis_lattice(m: int, divisions: int) -> np.ndarray:
    """All simplex lattice points with the given number of divisions.

    Returns an (C(divisions+m-1, m-1), m) array of vectors with non-negative
    entries summing to one, in lexicographic order.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if divisions < 0:
        raise ValueError("divisions must be >= 0")
    if m == 1:
        return np.ones((1, 1))
    rows = []
    stack = [(0, [])]
    while stack:
        used, prefix = stack.pop()
        if len(prefix) == m - 1:
            rows.append(prefix + [divisions - used])
            continue
        # push in reverse so the natural lexicographic order pops first
        for v in range(divisions - used, -1, -1):
            stack.append((used + v, prefix + [v]))
    return np.array(rows, dtype=float) / float(divisions) if divisions else \
        np.full((1, m), 1.0 / m)


def lattice_size(m: int, divisions: int) -> int:
    return comb(divisions + m - 1, m - 1)


def farthest_point_subsample(points: np.ndarray, count: int,
                             engine: np.random.Generator) -> np.ndarray:
    """Greedy farthest-point selection of ``count`` rows.

    The first pick is the row closest to the centroid (deterministic), each
    later pick maximizes the distance to the already selected set.  Ties are
    broken by the lowest index.  ``engine`` is accepted for interface
    symmetry with the random completion path but is not consumed here.
    """
    points = np.asarray(points, dtype=float)
    n = points.shape[0]
    if count >= n:
        return points.copy()
    if count <= 0:
        return points[:0].copy()
    centroid = points.mean(axis=0)
    first = int(np.argmin(np.linalg.norm(points - centroid, axis=1)))
    chosen = np.empty(count, dtype=int)
    chosen[0] = first
    dist = np.linalg.norm(points - points[first], axis=1)
    for i in range(1, count):
        nxt = int(np.argmax(dist))
        chosen[i] = nxt
        np.minimum(dist, np.linalg.norm(points - points[nxt], axis=1),
                   out=dist)
    return points[chosen]


def uniform_simplex_set(m: int, count: int,
                        engine: np.random.Generator) -> np.ndarray:
    """Exactly ``count`` well-spread points on the unit simplex.

    The largest Das-Dennis lattice that fits inside ``count`` is used
    verbatim; the remainder is completed by farthest-point picks from a
    random Dirichlet(1) candidate pool drawn from ``engine``.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if m == 1:
        return np.ones((count, 1))
    h = 0
    while lattice_size(m, h + 1) <= count:
        h += 1
    base = das_dennis_lattice(m, h)
    missing = count - base.shape[0]
    if missing == 0:
        return base
    pool = engine.dirichlet(np.ones(m), size=max(4 * missing, 1000))
    extra = _farthest_point_completion(base, pool, missing)
    return np.vstack([base, extra])


def _farthest_point_completion(base: np.ndarray, pool: np.ndarray,
                               count: int) -> np.ndarray:
    """Pick ``count`` pool rows maximizing distance to base and each other."""
    dist = np.full(pool.shape[0], np.inf)
    for row in base:
        np.minimum(dist, np.linalg.norm(pool - row, axis=1), out=dist)
    picked = np.empty((count, pool.shape[1]))
    for i in range(count):
        nxt = int(np.argmax(dist))
        picked[i] = pool[nxt]
        np.minimum(dist, np.linalg.norm(pool - pool[nxt], axis=1), out=dist)
    return picked


def project_to_simplex(z: np.ndarray) -> np.ndarray:
    """Euclidean projection of a point onto the unit simplex."""
    z = np.asarray(z, dtype=float)
    if z.ndim != 1:
        raise ValueError("expected a vector")
    u = np.sort(z)[::-1]
    css = np.cumsum(u) - 1.0
    k = np.arange(1, z.size + 1)
    cond = u - css / k > 0
    rho = int(np.max(np.flatnonzero(cond))) + 1
    theta = css[rho - 1] / rho
    return np.maximum(z - theta, 0.0)


def nums_shift(weights: np.ndarray, z: np.ndarray, tau: float) -> np.ndarray:
    """Shift a weight set toward the reference point's simplex projection.

    Each weight vector slides along the ray from the pivot ``c`` (the
    Euclidean projection of ``z`` onto the simplex) through itself.  With
    ``t`` the vector's relative position between the pivot and the simplex
    boundary along that ray, the new position is ``c + tau * t**(1 - tau) *
    (w - c)``.  Vectors closer to the pivot contract proportionally more, so
    the shifted set is biased toward the preferred region while its extent
    shrinks linearly with ``tau``; ``tau = 1`` leaves the set untouched.

    Parameters
    ----------
    weights : np.ndarray
        (N, m) simplex points.
    z : np.ndarray
        Reference point in objective space.
    tau : float
        Spread parameter in (0, 1].

    Returns
    -------
    np.ndarray
        (N, m) shifted simplex points.
    """
    if not 0.0 < tau <= 1.0:
        raise ValueError(f"tau must lie in (0, 1], got {tau}")
    weights = np.asarray(weights, dtype=float)
    z = np.asarray(z, dtype=float)
    if weights.ndim != 2 or weights.shape[1] != z.size:
        raise ValueError("weights must be (N, m) with m matching z")
    if tau == 1.0:
        return weights.copy()
    pivot = project_to_simplex(z)
    diff = weights - pivot
    # distance multiplier to the simplex boundary along each ray; the rays
    # stay inside the sum-to-one hyperplane, so only w_j >= 0 can bind
    with np.errstate(divide="ignore", invalid="ignore"):
        steps = np.where(diff < 0.0, pivot / -diff, np.inf)
    s_max = np.min(steps, axis=1)
    t = np.where(np.isfinite(s_max) & (s_max > 0.0), 1.0 / s_max, 0.0)
    scale = tau * np.power(t, 1.0 - tau)
    shifted = pivot + scale[:, None] * diff
    return np.maximum(shifted, 0.0)


def neighborhoods(weights: np.ndarray, t_size: int) -> np.ndarray:
    """Indices of the ``t_size`` nearest weight vectors of each weight.

    Distance ties resolve to the lower index; each weight is its own nearest
    neighbour.
    """
    n = weights.shape[0]
    if not 1 <= t_size <= n:
        raise ValueError(f"t_size must lie in [1, {n}], got {t_size}")
    d = np.linalg.norm(weights[:, None, :] - weights[None, :, :], axis=2)
    order = np.argsort(d, axis=1, kind="stable")
    return order[:, :t_size]
