"""The four optimizers: NSGA-II and three preference-based variants.

All algorithms are generational with lambda = mu offspring per generation
and share the same normalization-state update cadence: the state refreshes
once per generation from the parent+offspring union (the offspring batch
alone feeds the bounded archive), right before environmental selection, and
once at initialization from the initial population.

Identifiers
-----------
``nsga2``
    plain NSGA-II (rank + crowding), no preference information,
``rnsga2``
    reference-distance R-NSGA-II: rank first, then ascending weighted
    distance to the reference point, with epsilon-clearing for diversity,
``r2nsga2``
    r-dominance NSGA-II: the sorting relation itself blends Pareto
    dominance with the reference-point distance,
``moead-nums``
    decomposition with the whole weight set shifted toward the reference
    point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .normalization import (NormalizationState, init_state, normalize_value,
                            update_state)
from .problems import Problem
from .ranking import (crowding_distance, nondominated_sort,
                      r_domination_matrix, fronts_from_matrix)
from .variation import (de_rand_1, polynomial_mutation,
                        polynomial_mutation_batch, repair_clamp, sbx_batch)
from .weights import neighborhoods, nums_shift, uniform_simplex_set

logger = logging.getLogger(__name__)

AASF_RHO = 1e-6

# observer called at every generation boundary with (evals, objectives, state)
Recorder = Callable[[int, np.ndarray, NormalizationState], None]


@dataclass
class AlgorithmParams:
    """Operator parameters shared by the four algorithms.

    GA-path (NSGA-II family): SBX + polynomial mutation.  DE-path
    (decomposition): DE/rand/1 + polynomial mutation.  ``mutation_prob``
    defaults to 1/n at run time.
    """

    crossover_prob: float = 1.0
    sbx_eta: float = 30.0
    pm_eta: float = 20.0
    mutation_prob: float | None = None
    weights_w: np.ndarray | None = None          # distance weights, default uniform
    epsilon_clear: float = 0.001
    delta: float = 0.3
    tau: float = 0.3
    de_f: float = 0.5
    de_cr: float = 1.0
    neighborhood_t: int = 20
    max_replace: int = 2
    rho: float = AASF_RHO


def weighted_ref_distance(objs: np.ndarray, z: np.ndarray, w: np.ndarray,
                          z_lb: np.ndarray, z_ub: np.ndarray) -> np.ndarray:
    """Weighted normalized Euclidean distance to the reference point.

    d(x) = sqrt( sum_i w_i ((f_i - z_i) / (z_ub_i - z_lb_i))^2 ), with the
    range floored the same way as :func:`normalize_value`.
    """
    objs = np.asarray(objs, dtype=float)
    span = np.maximum(np.asarray(z_ub, dtype=float) - z_lb, 1e-12)
    scaled = (objs - z) / span
    return np.sqrt(np.sum(w * scaled * scaled, axis=-1))


def aasf(f: np.ndarray, z: np.ndarray, w: np.ndarray, z_lb: np.ndarray,
         z_ub: np.ndarray, rho: float = AASF_RHO) -> float:
    """Augmented achievement scalarizing value of one objective vector.

    Both ``f`` and ``z`` pass through the current normalization bounds
    first; identity bounds leave them untouched.
    """
    fn = normalize_value(f, z_lb, z_ub)
    zn = normalize_value(z, z_lb, z_ub)
    diff = fn - zn
    return float(np.max(w * diff) + rho * np.sum(diff))


def _binary_tournament(primary: np.ndarray, secondary: np.ndarray,
                       count: int, engine: np.random.Generator) -> np.ndarray:
    """Indices of ``count`` winners; lower (primary, secondary) wins."""
    n = primary.shape[0]
    cand = engine.integers(0, n, size=(count, 2))
    a, b = cand[:, 0], cand[:, 1]
    a_wins = (primary[a] < primary[b]) | (
        (primary[a] == primary[b]) & (secondary[a] <= secondary[b]))
    return np.where(a_wins, a, b)


def epsilon_clear(points: np.ndarray, epsilon: float,
                  engine: np.random.Generator
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Thin a point set so no two survivors are closer than ``epsilon``.

    Points are visited in random order; a visited point joins the survivors
    unless it lies strictly within ``epsilon`` of one, in which case it goes
    to the reserve.  Random visiting order makes the surviving member of any
    close pair random.  Returns (survivor positions, reserve positions).
    """
    n = points.shape[0]
    order = engine.permutation(n)
    kept: list[int] = []
    reserve: list[int] = []
    kept_pts = np.empty_like(points)
    k = 0
    for pos in order:
        if k:
            d2 = np.sum((kept_pts[:k] - points[pos]) ** 2, axis=1)
            if np.min(d2) < epsilon * epsilon:
                reserve.append(pos)
                continue
        kept_pts[k] = points[pos]
        kept.append(pos)
        k += 1
    return np.asarray(kept, dtype=int), np.asarray(reserve, dtype=int)


def _random_population(problem: Problem, mu: int,
                       engine: np.random.Generator) -> np.ndarray:
    span = problem.upper - problem.lower
    return problem.lower + engine.random((mu, problem.n)) * span


def _ga_offspring(xs: np.ndarray, winners: np.ndarray, problem: Problem,
                  params: AlgorithmParams,
                  engine: np.random.Generator) -> np.ndarray:
    """SBX + polynomial mutation on tournament-selected parent pairs."""
    pa = xs[winners[0::2]]
    pb = xs[winners[1::2]]
    ca, cb = sbx_batch(pa, pb, problem.lower, problem.upper, engine,
                       params.sbx_eta, params.crossover_prob)
    children = np.empty((winners.size, problem.n))
    children[0::2] = ca
    children[1::2] = cb
    return polynomial_mutation_batch(children, problem.lower, problem.upper,
                                     engine, params.pm_eta,
                                     params.mutation_prob)


def _dist_weights(params: AlgorithmParams, m: int) -> np.ndarray:
    if params.weights_w is None:
        return np.full(m, 1.0 / m)
    w = np.asarray(params.weights_w, dtype=float)
    if w.shape != (m,) or np.any(w < 0.0):
        raise ValueError("weights_w must be m non-negative values")
    return w


def _check_ga_setup(mu: int, budget: int, m: int) -> None:
    if mu < 4 or mu % 2:
        raise ValueError(f"mu must be even and >= 4, got {mu}")
    if mu < 2 * m:
        raise ValueError(f"mu must be at least 2m = {2 * m}, got {mu}")
    if budget < mu:
        raise ValueError(f"budget {budget} smaller than one population {mu}")


def run_nsga2(problem: Problem, z: np.ndarray, kind: str, mu: int,
              budget: int, engine: np.random.Generator,
              params: AlgorithmParams | None = None,
              recorder: Recorder | None = None) -> np.ndarray:
    """Plain NSGA-II; ``z`` is ignored, the state is tracked for recording.

    Returns the final (mu, m) population objectives.
    """
    params = params or AlgorithmParams()
    _check_ga_setup(mu, budget, problem.m)
    xs = _random_population(problem, mu, engine)
    fs = problem.evaluate_batch(xs)
    evals = mu
    state = init_state(kind, problem.m)
    update_state(state, fs)
    rank, crowd = _rank_and_crowding(fs)
    if recorder:
        recorder(evals, fs, state)
    while evals + mu <= budget:
        winners = _binary_tournament(rank, -crowd, mu, engine)
        child_x = _ga_offspring(xs, winners, problem, params, engine)
        child_f = problem.evaluate_batch(child_x)
        evals += mu
        update_state(state, fs, child_f)
        ux = np.vstack([xs, child_x])
        uf = np.vstack([fs, child_f])
        keep, rank, crowd = _nsga2_select(uf, mu)
        xs, fs = ux[keep], uf[keep]
        if recorder:
            recorder(evals, fs, state)
    return fs


def _rank_and_crowding(fs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    fronts = nondominated_sort(fs)
    rank = np.empty(fs.shape[0], dtype=int)
    crowd = np.empty(fs.shape[0])
    for level, front in enumerate(fronts):
        idx = np.asarray(front, dtype=int)
        rank[idx] = level
        crowd[idx] = crowding_distance(fs[idx])
    return rank, crowd


def _nsga2_select(uf: np.ndarray, mu: int
                  ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rank+crowding truncation of the union to mu members."""
    fronts = nondominated_sort(uf)
    keep: list[int] = []
    keep_rank: list[int] = []
    keep_crowd: list[float] = []
    for level, front in enumerate(fronts):
        idx = np.asarray(front, dtype=int)
        crowd = crowding_distance(uf[idx])
        room = mu - len(keep)
        if room <= 0:
            break
        if idx.size <= room:
            chosen = np.arange(idx.size)
        else:
            chosen = np.argsort(-crowd, kind="stable")[:room]
        keep.extend(idx[chosen].tolist())
        keep_rank.extend([level] * chosen.size)
        keep_crowd.extend(crowd[chosen].tolist())
    return (np.asarray(keep, dtype=int), np.asarray(keep_rank, dtype=int),
            np.asarray(keep_crowd))


def rnsga2_environmental_selection(uf: np.ndarray, dists: np.ndarray,
                                   mu: int, epsilon: float,
                                   z_lb: np.ndarray, z_ub: np.ndarray,
                                   engine: np.random.Generator) -> np.ndarray:
    """Reference-distance selection of mu union members.

    Non-domination level is the primary criterion.  Inside the level that
    overflows, members are taken in ascending reference distance after
    epsilon-clearing in the normalized objective space; cleared-away members
    re-enter (still by ascending distance) only when the level's survivors
    cannot fill the remaining room, so a level is never skipped over.
    """
    fronts = nondominated_sort(uf)
    norm = normalize_value(uf, z_lb, z_ub)
    keep: list[int] = []
    for front in fronts:
        room = mu - len(keep)
        if room <= 0:
            break
        idx = np.asarray(front, dtype=int)
        if idx.size <= room:
            # clearing cannot change membership here, order is irrelevant
            keep.extend(idx.tolist())
            continue
        survivors, reserve = epsilon_clear(norm[idx], epsilon, engine)
        ordered = [idx[pos] for pos in
                   sorted(survivors, key=lambda p: (dists[idx[p]], p))]
        ordered += [idx[pos] for pos in
                    sorted(reserve, key=lambda p: (dists[idx[p]], p))]
        keep.extend(ordered[:room])
    return np.asarray(keep, dtype=int)


def run_rnsga2(problem: Problem, z: np.ndarray, kind: str, mu: int,
               budget: int, engine: np.random.Generator,
               params: AlgorithmParams | None = None,
               recorder: Recorder | None = None) -> np.ndarray:
    """Reference-distance R-NSGA-II."""
    params = params or AlgorithmParams()
    _check_ga_setup(mu, budget, problem.m)
    z = np.asarray(z, dtype=float)
    w = _dist_weights(params, problem.m)
    xs = _random_population(problem, mu, engine)
    fs = problem.evaluate_batch(xs)
    evals = mu
    state = init_state(kind, problem.m)
    update_state(state, fs)
    rank = _pareto_ranks(fs)
    dist = weighted_ref_distance(fs, z, w, state.z_lb, state.z_ub)
    if recorder:
        recorder(evals, fs, state)
    while evals + mu <= budget:
        winners = _binary_tournament(rank, dist, mu, engine)
        child_x = _ga_offspring(xs, winners, problem, params, engine)
        child_f = problem.evaluate_batch(child_x)
        evals += mu
        update_state(state, fs, child_f)
        ux = np.vstack([xs, child_x])
        uf = np.vstack([fs, child_f])
        udist = weighted_ref_distance(uf, z, w, state.z_lb, state.z_ub)
        keep = rnsga2_environmental_selection(
            uf, udist, mu, params.epsilon_clear, state.z_lb, state.z_ub,
            engine)
        xs, fs = ux[keep], uf[keep]
        rank = _pareto_ranks(fs)
        dist = udist[keep]
        if recorder:
            recorder(evals, fs, state)
    return fs


def _pareto_ranks(fs: np.ndarray) -> np.ndarray:
    fronts = nondominated_sort(fs)
    rank = np.empty(fs.shape[0], dtype=int)
    for level, front in enumerate(fronts):
        rank[np.asarray(front, dtype=int)] = level
    return rank


def run_r2nsga2(problem: Problem, z: np.ndarray, kind: str, mu: int,
                budget: int, engine: np.random.Generator,
                params: AlgorithmParams | None = None,
                recorder: Recorder | None = None) -> np.ndarray:
    """NSGA-II with the r-dominance relation replacing Pareto dominance."""
    params = params or AlgorithmParams()
    _check_ga_setup(mu, budget, problem.m)
    z = np.asarray(z, dtype=float)
    w = _dist_weights(params, problem.m)
    xs = _random_population(problem, mu, engine)
    fs = problem.evaluate_batch(xs)
    evals = mu
    state = init_state(kind, problem.m)
    update_state(state, fs)
    dist = weighted_ref_distance(fs, z, w, state.z_lb, state.z_ub)
    rank = _r_ranks(fs, dist, params.delta)
    if recorder:
        recorder(evals, fs, state)
    while evals + mu <= budget:
        winners = _binary_tournament(rank, dist, mu, engine)
        child_x = _ga_offspring(xs, winners, problem, params, engine)
        child_f = problem.evaluate_batch(child_x)
        evals += mu
        update_state(state, fs, child_f)
        ux = np.vstack([xs, child_x])
        uf = np.vstack([fs, child_f])
        udist = weighted_ref_distance(uf, z, w, state.z_lb, state.z_ub)
        fronts = fronts_from_matrix(
            r_domination_matrix(uf, udist, params.delta))
        keep: list[int] = []
        rank_sel: list[int] = []
        for level, front in enumerate(fronts):
            room = mu - len(keep)
            if room <= 0:
                break
            idx = np.asarray(front, dtype=int)
            crowd = crowding_distance(uf[idx])
            if idx.size <= room:
                chosen = np.arange(idx.size)
            else:
                chosen = np.argsort(-crowd, kind="stable")[:room]
            keep.extend(idx[chosen].tolist())
            rank_sel.extend([level] * chosen.size)
        keep_arr = np.asarray(keep, dtype=int)
        xs, fs = ux[keep_arr], uf[keep_arr]
        rank = np.asarray(rank_sel, dtype=int)
        dist = udist[keep_arr]
        if recorder:
            recorder(evals, fs, state)
    return fs


def _r_ranks(fs: np.ndarray, dists: np.ndarray, delta: float) -> np.ndarray:
    fronts = fronts_from_matrix(r_domination_matrix(fs, dists, delta))
    rank = np.empty(fs.shape[0], dtype=int)
    for level, front in enumerate(fronts):
        rank[np.asarray(front, dtype=int)] = level
    return rank


def moead_nums_replacement(trial_f: np.ndarray, fs: np.ndarray,
                           weights: np.ndarray, nb: np.ndarray,
                           z: np.ndarray, state: NormalizationState,
                           max_replace: int,
                           engine: np.random.Generator,
                           rho: float = AASF_RHO) -> np.ndarray:
    """Neighbourhood indices the trial should replace (at most max_replace).

    Neighbours are visited in random order; the trial wins a slot when its
    scalarized value under that neighbour's weight beats the incumbent's.
    """
    if rho <= 0.0:
        raise ValueError(f"rho must be positive, got {rho}")
    order = engine.permutation(nb.size)
    zn = normalize_value(z, state.z_lb, state.z_ub)
    tn = normalize_value(trial_f, state.z_lb, state.z_ub) - zn
    pn = normalize_value(fs[nb], state.z_lb, state.z_ub) - zn
    wn = weights[nb]
    trial_vals = np.max(wn * tn, axis=1) + rho * np.sum(tn)
    incumbent = np.max(wn * pn, axis=1) + rho * np.sum(pn, axis=1)
    wins = trial_vals < incumbent
    replaced = []
    for pos in order:
        if wins[pos]:
            replaced.append(nb[pos])
            if len(replaced) >= max_replace:
                break
    return np.asarray(replaced, dtype=int)


def run_moead_nums(problem: Problem, z: np.ndarray, kind: str, mu: int,
                   budget: int, engine: np.random.Generator,
                   params: AlgorithmParams | None = None,
                   recorder: Recorder | None = None) -> np.ndarray:
    """Decomposition search on a weight set shifted toward ``z``."""
    params = params or AlgorithmParams()
    if mu < 4:
        raise ValueError(f"mu must be >= 4, got {mu}")
    if mu < 2 * problem.m:
        raise ValueError(f"mu must be at least 2m = {2 * problem.m}, "
                         f"got {mu}")
    if budget < mu:
        raise ValueError(f"budget {budget} smaller than one population {mu}")
    z = np.asarray(z, dtype=float)
    weights = uniform_simplex_set(problem.m, mu, engine)
    weights = nums_shift(weights, z, params.tau)
    t_size = min(params.neighborhood_t, mu)
    nbs = neighborhoods(weights, t_size)
    xs = _random_population(problem, mu, engine)
    fs = problem.evaluate_batch(xs)
    evals = mu
    state = init_state(kind, problem.m)
    update_state(state, fs)
    if recorder:
        recorder(evals, fs, state)
    while evals + mu <= budget:
        batch = np.empty((mu, problem.m))
        for i in range(mu):
            trial = de_rand_1(i, xs, nbs[i], engine, params.de_f,
                              params.de_cr)
            trial = repair_clamp(trial, problem.lower, problem.upper)
            trial = polynomial_mutation(trial, problem.lower, problem.upper,
                                        engine, params.pm_eta,
                                        params.mutation_prob)
            trial_f = problem.evaluate_batch(trial[None, :])[0]
            batch[i] = trial_f
            targets = moead_nums_replacement(trial_f, fs, weights, nbs[i], z,
                                             state, params.max_replace,
                                             engine, params.rho)
            if targets.size:
                xs[targets] = trial
                fs[targets] = trial_f
        evals += mu
        update_state(state, fs, batch)
        if recorder:
            recorder(evals, fs, state)
    return fs


ALGORITHMS: dict[str, Callable] = {
    "nsga2": run_nsga2,
    "rnsga2": run_rnsga2,
    "r2nsga2": run_r2nsga2,
    "moead-nums": run_moead_nums,
}


def algorithm_names() -> list[str]:
    return list(ALGORITHMS)
