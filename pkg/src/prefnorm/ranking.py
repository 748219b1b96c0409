"""Dominance relations, non-dominated sorting, crowding and r-dominance."""
from __future__ import annotations

import logging

import numpy as np

logger = logging.getLogger(__name__)


def dominates(fa: np.ndarray, fb: np.ndarray) -> bool:
    """Pareto dominance for minimization: fa <= fb everywhere, < somewhere."""
    fa = np.asarray(fa, dtype=float)
    fb = np.asarray(fb, dtype=float)
    return bool(np.all(fa <= fb) and np.any(fa < fb))


def weakly_dominates(fa: np.ndarray, fb: np.ndarray) -> bool:
    """Weak Pareto dominance: fa <= fb in every objective."""
    fa = np.asarray(fa, dtype=float)
    fb = np.asarray(fb, dtype=float)
    return bool(np.all(fa <= fb))


def _all_le(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(len(a), len(b)) matrix of ``a[i] <= b[j]`` in every objective.

    Accumulated one objective at a time; the 2-d comparisons beat a single
    3-d broadcast by a wide margin for the population sizes used here.
    """
    le = a[:, 0, None] <= b[None, :, 0]
    for k in range(1, a.shape[1]):
        le &= a[:, k, None] <= b[None, :, k]
    return le


def domination_matrix(objs: np.ndarray) -> np.ndarray:
    """Pairwise Pareto dominance of the rows of an (N, m) objective array.

    Returns
    -------
    np.ndarray
        Boolean (N, N) matrix D with D[i, j] True iff row i dominates row j.
    """
    objs = np.asarray(objs, dtype=float)
    le = _all_le(objs, objs)
    # strictly-better-somewhere is the complement of the reversed "<="
    return le & ~le.T


def _nondominated_mask_2d(objs: np.ndarray) -> np.ndarray:
    """O(N log N) non-dominated mask for two objectives."""
    n = objs.shape[0]
    order = np.lexsort((objs[:, 1], objs[:, 0]))
    f0 = objs[order, 0]
    f1 = objs[order, 1]
    starts = np.ones(n, dtype=bool)
    starts[1:] = f0[1:] != f0[:-1]
    group = np.cumsum(starts) - 1
    # smallest f1 inside each f0 group (first element, f1 ascending)
    group_min = f1[starts][group]
    # smallest f1 among all strictly smaller f0 values
    cummin = np.minimum.accumulate(f1)
    start_idx = np.flatnonzero(starts)
    strict = np.empty(start_idx.size)
    strict[0] = np.inf
    strict[1:] = cummin[start_idx[1:] - 1]
    strict_min = strict[group]
    kept_sorted = (f1 == group_min) & (f1 < strict_min)
    mask = np.zeros(n, dtype=bool)
    mask[order[kept_sorted]] = True
    return mask


def nondominated_mask(objs: np.ndarray) -> np.ndarray:
    """Boolean mask of the rows of ``objs`` not Pareto-dominated by any row.

    Duplicate rows do not dominate each other, so all copies of a
    non-dominated vector are kept.  Rows are processed in lexicographic order
    (a dominator always sorts before what it dominates) in vectorized chunks,
    which keeps large sampling pools affordable.
    """
    objs = np.asarray(objs, dtype=float)
    n = objs.shape[0]
    if n == 0:
        return np.zeros(0, dtype=bool)
    if objs.shape[1] == 2:
        return _nondominated_mask_2d(objs)
    if n <= 512:
        # small pools skip the sort, one full pairwise pass is cheaper
        le = _all_le(objs, objs)
        return ~(le & ~le.T).any(axis=0)
    order = np.lexsort(objs.T[::-1])
    ordered = objs[order]
    kept = np.empty_like(ordered)
    k = 0
    kept_sorted = np.zeros(n, dtype=bool)
    chunk = 512
    for lo in range(0, n, chunk):
        block = ordered[lo:lo + chunk]
        alive = np.ones(block.shape[0], dtype=bool)
        if k:
            le = _all_le(kept[:k], block)
            ge = _all_le(block, kept[:k]).T
            alive = ~np.any(le & ~ge, axis=0)
        # dominance inside the chunk (any row may dominate any other)
        le = _all_le(block, block)
        alive &= ~(le & ~le.T).any(axis=0)
        cnt = int(alive.sum())
        if cnt:
            kept[k:k + cnt] = block[alive]
            kept_sorted[lo:lo + block.shape[0]][alive] = True
            k += cnt
    mask = np.zeros(n, dtype=bool)
    mask[order[kept_sorted]] = True
    return mask


def fronts_from_matrix(dom: np.ndarray) -> list[list[int]]:
    """Peel non-domination levels from a pairwise dominance matrix.

    Works for any irreflexive relation.  If the relation contains a cycle
    (possible for r-dominance with intermediate delta), the remaining
    individuals are assigned to one final level instead of looping forever.
    """
    n = dom.shape[0]
    counts = dom.sum(axis=0).astype(int)
    assigned = np.zeros(n, dtype=bool)
    fronts: list[list[int]] = []
    remaining = n
    while remaining > 0:
        current = np.flatnonzero((counts == 0) & ~assigned)
        if current.size == 0:
            leftover = np.flatnonzero(~assigned)
            logger.warning("cyclic dominance relation; %d individuals lumped "
                           "into the last level", leftover.size)
            fronts.append(leftover.tolist())
            break
        fronts.append(current.tolist())
        assigned[current] = True
        remaining -= current.size
        counts -= dom[current].sum(axis=0).astype(int)
    return fronts


def nondominated_sort(objs: np.ndarray) -> list[list[int]]:
    """Fast non-dominated sorting of an (N, m) objective array.

    Returns
    -------
    list of list of int
        Index partition by non-domination level, level 0 first.
    """
    objs = np.asarray(objs, dtype=float)
    if objs.ndim != 2:
        raise ValueError("expected an (N, m) objective array")
    return fronts_from_matrix(domination_matrix(objs))


def crowding_distance(objs: np.ndarray) -> np.ndarray:
    """Crowding distance of each row within one front.

    Boundary solutions per objective get infinity; interior ones accumulate
    the normalized gap between their neighbours.  A zero objective range
    contributes nothing.
    """
    objs = np.asarray(objs, dtype=float)
    n, m = objs.shape
    dist = np.zeros(n)
    if n <= 2:
        dist[:] = np.inf
        return dist
    for j in range(m):
        order = np.argsort(objs[:, j], kind="stable")
        col = objs[order, j]
        rng = col[-1] - col[0]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        if rng <= 0.0:
            continue
        gaps = (col[2:] - col[:-2]) / rng
        interior = order[1:-1]
        finite = ~np.isinf(dist[interior])
        dist[interior[finite]] += gaps[finite]
    return dist


def r_dominance_compare(fa: np.ndarray, fb: np.ndarray, d_a: float, d_b: float,
                        d_min: float, d_max: float, delta: float) -> int:
    """Compare two solutions under r-dominance.

    ``d_a``/``d_b`` are the weighted reference-point distances of the two
    solutions, ``d_min``/``d_max`` their extremes over the population the
    comparison lives in.  Returns 1 if a r-dominates b, -1 if b r-dominates
    a, 0 otherwise.

    Parameters
    ----------
    delta : float
        Non-r-dominance threshold in [0, 1].  delta=1 recovers plain Pareto
        dominance; delta=0 orders every Pareto-incomparable pair by distance.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta must lie in [0, 1], got {delta}")
    if dominates(fa, fb):
        return 1
    if dominates(fb, fa):
        return -1
    rng = d_max - d_min
    if rng <= 0.0:
        return 0
    diff = (d_a - d_b) / rng
    if diff < -delta:
        return 1
    if diff > delta:
        return -1
    return 0


def r_domination_matrix(objs: np.ndarray, dists: np.ndarray,
                        delta: float) -> np.ndarray:
    """Pairwise r-dominance over a population.

    Distance extremes are taken over ``dists`` itself (the population being
    sorted).  Vectorized counterpart of :func:`r_dominance_compare`.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta must lie in [0, 1], got {delta}")
    objs = np.asarray(objs, dtype=float)
    dists = np.asarray(dists, dtype=float)
    dom = domination_matrix(objs)
    rng = float(dists.max() - dists.min()) if dists.size else 0.0
    if rng <= 0.0:
        return dom
    diff = (dists[:, None] - dists[None, :]) / rng
    incomparable = ~dom & ~dom.T
    return dom | (incomparable & (diff < -delta))
