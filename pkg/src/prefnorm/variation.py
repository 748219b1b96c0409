"""Variation operators: SBX, polynomial mutation, DE/rand/1, bound repair.

All operators work on [lower, upper] box bounds and draw every random number
from the engine passed in, so runs replay exactly.  Batch variants are
vectorized across a whole offspring population.
"""
from __future__ import annotations

import logging

import numpy as np

logger = logging.getLogger(__name__)

_EPS_SAME = 1e-14


def repair_clamp(x: np.ndarray, lower: np.ndarray,
                 upper: np.ndarray) -> np.ndarray:
    """Clamp each violated coordinate to the bound it crossed."""
    return np.clip(x, lower, upper)


def sbx_batch(pa: np.ndarray, pb: np.ndarray, lower: np.ndarray,
              upper: np.ndarray, engine: np.random.Generator,
              eta: float = 30.0,
              crossover_prob: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover over (P, n) parent pair arrays.

    Per pair, the whole crossover fires with probability ``crossover_prob``;
    inside a firing pair each variable is crossed with probability 0.5 using
    a spread factor drawn from the SBX density with index ``eta``, and the
    two child values swap with probability 0.5.  Children are clipped to the
    bounds.  Identical parent coordinates pass through unchanged.
    """
    pa = np.asarray(pa, dtype=float)
    pb = np.asarray(pb, dtype=float)
    n_pairs, n_var = pa.shape
    ca = pa.copy()
    cb = pb.copy()
    pair_on = engine.random(n_pairs) <= crossover_prob
    var_on = engine.random((n_pairs, n_var)) < 0.5
    u = engine.random((n_pairs, n_var))
    swap = engine.random((n_pairs, n_var)) < 0.5
    active = pair_on[:, None] & var_on & (np.abs(pa - pb) > _EPS_SAME)

    beta = np.where(u <= 0.5,
                    (2.0 * u) ** (1.0 / (eta + 1.0)),
                    (1.0 / (2.0 * (1.0 - u))) ** (1.0 / (eta + 1.0)))
    c1 = 0.5 * ((1.0 + beta) * pa + (1.0 - beta) * pb)
    c2 = 0.5 * ((1.0 - beta) * pa + (1.0 + beta) * pb)
    c1s = np.where(swap, c2, c1)
    c2s = np.where(swap, c1, c2)
    ca[active] = c1s[active]
    cb[active] = c2s[active]
    np.clip(ca, lower, upper, out=ca)
    np.clip(cb, lower, upper, out=cb)
    return ca, cb


def sbx_crossover(parent_a: np.ndarray, parent_b: np.ndarray,
                  lower: np.ndarray, upper: np.ndarray,
                  engine: np.random.Generator, eta: float = 30.0,
                  crossover_prob: float = 1.0
                  ) -> tuple[np.ndarray, np.ndarray]:
    """SBX on a single parent pair; see :func:`sbx_batch`."""
    ca, cb = sbx_batch(parent_a[None, :], parent_b[None, :], lower, upper,
                       engine, eta, crossover_prob)
    return ca[0], cb[0]


def polynomial_mutation_batch(x: np.ndarray, lower: np.ndarray,
                              upper: np.ndarray,
                              engine: np.random.Generator,
                              eta: float = 20.0,
                              mutation_prob: float | None = None
                              ) -> np.ndarray:
    """Bounded polynomial mutation over an (N, n) array.

    Each gene mutates with probability ``mutation_prob`` (default 1/n).  The
    bounded formulation shrinks the step near a bound, so a gene sitting on a
    bound can only move inward.
    """
    x = np.asarray(x, dtype=float)
    n_var = x.shape[1]
    if mutation_prob is None:
        mutation_prob = 1.0 / n_var
    span = upper - lower
    out = x.copy()
    do = engine.random(x.shape) < mutation_prob
    u = engine.random(x.shape)

    d1 = (x - lower) / span
    d2 = (upper - x) / span
    mut_pow = 1.0 / (eta + 1.0)
    low_branch = u < 0.5
    val_lo = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1) ** (eta + 1.0)
    val_hi = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2) ** (eta + 1.0)
    delta = np.where(low_branch,
                     val_lo ** mut_pow - 1.0,
                     1.0 - val_hi ** mut_pow)
    out[do] = (x + delta * span)[do]
    np.clip(out, lower, upper, out=out)
    return out


def polynomial_mutation(x: np.ndarray, lower: np.ndarray, upper: np.ndarray,
                        engine: np.random.Generator, eta: float = 20.0,
                        mutation_prob: float | None = None) -> np.ndarray:
    """Bounded polynomial mutation of one vector."""
    return polynomial_mutation_batch(x[None, :], lower, upper, engine, eta,
                                     mutation_prob)[0]


def de_rand_1(target_index: int, xs: np.ndarray, neighborhood: np.ndarray,
              engine: np.random.Generator, f_scale: float = 0.5,
              crossover_rate: float = 1.0) -> np.ndarray:
    """DE/rand/1 mutant with binomial crossover against the target.

    Parents r1 != r2 != r3 are drawn from ``neighborhood`` excluding the
    target index; the trial is clamped to [0, 1]-free bounds by the caller.

    Parameters
    ----------
    xs : np.ndarray
        (N, n) decision matrix of the population.
    neighborhood : np.ndarray
        Candidate parent indices (the target's neighbourhood).
    """
    cand = np.asarray([i for i in neighborhood if i != target_index])
    if cand.size < 3:
        raise ValueError("need at least 3 distinct neighbours besides the "
                         "target for DE/rand/1")
    r1, r2, r3 = cand[engine.choice(cand.size, 3, replace=False)]
    mutant = xs[r1] + f_scale * (xs[r2] - xs[r3])
    n_var = xs.shape[1]
    trial = xs[target_index].copy()
    cross = engine.random(n_var) < crossover_rate
    cross[engine.integers(n_var)] = True
    trial[cross] = mutant[cross]
    return trial
