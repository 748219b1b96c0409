"""DTLZ test problems, their scaled and inverted variants, and front samplers.

All problems are box-constrained to [0, 1]^n for minimization.  The number of
distance variables k is fixed per problem (5 for DTLZ1, 10 for DTLZ2-6, 20
for DTLZ7), so n = m + k - 1.  Scaled variants multiply the i-th objective by
10^(i-1); inverted variants flip each objective inside the attainable box.

The front of DTLZ5/6 with four or more objectives is only partially
characterized in the literature; every stored ideal/nadir point and every
front sample here consistently uses the degenerate curve traced by the
g = 0 surface.  For DTLZ7, dominance between g = 1 solutions separates per
position coordinate, so front membership reduces to each coordinate lying in
the strict running-maximum set of t (1 + sin(3 pi t)); the numeric constants
(see scripts/derive_pf_constants.py) follow from the interior maximum of
that function.
"""
from __future__ import annotations

import logging

import numpy as np

from .ranking import nondominated_mask
from .weights import farthest_point_subsample, uniform_simplex_set

logger = logging.getLogger(__name__)

# interior maximum of u(t) = t * (1 + sin(3 pi t)) on [0, 1]; the largest
# position value on the DTLZ7 front and the per-term cap of its last
# objective (scripts/derive_pf_constants.py)
DTLZ7_T_STAR = 0.8594008570145305
DTLZ7_U_STAR = 1.6929956344984227

_K_BY_FAMILY = {1: 5, 2: 10, 3: 10, 4: 10, 5: 10, 6: 10, 7: 20}


def _check_batch(x: np.ndarray, n: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[None, :]
    if x.shape[1] != n:
        raise ValueError(f"expected {n} decision variables, got {x.shape[1]}")
    return x


def _g_rastrigin(xm: np.ndarray) -> np.ndarray:
    k = xm.shape[1]
    c = xm - 0.5
    return 100.0 * (k + np.sum(c * c - np.cos(20.0 * np.pi * c), axis=1))


def _g_sphere(xm: np.ndarray) -> np.ndarray:
    c = xm - 0.5
    return np.sum(c * c, axis=1)


def _linear_objectives(pos: np.ndarray, g: np.ndarray) -> np.ndarray:
    """DTLZ1-shaped objectives from position variables and g values."""
    n_rows, m_minus_1 = pos.shape
    m = m_minus_1 + 1
    cum = np.hstack([np.ones((n_rows, 1)), np.cumprod(pos, axis=1)])
    f = np.empty((n_rows, m))
    scale = 0.5 * (1.0 + g)
    f[:, 0] = scale * cum[:, m - 1]
    for j in range(2, m + 1):
        f[:, j - 1] = scale * cum[:, m - j] * (1.0 - pos[:, m - j])
    return f


def _spherical_objectives(theta: np.ndarray, g: np.ndarray) -> np.ndarray:
    """DTLZ2-shaped objectives from angles (radians) and g values."""
    n_rows, m_minus_1 = theta.shape
    m = m_minus_1 + 1
    cum = np.hstack([np.ones((n_rows, 1)), np.cumprod(np.cos(theta), axis=1)])
    f = np.empty((n_rows, m))
    scale = 1.0 + g
    f[:, 0] = scale * cum[:, m - 1]
    for j in range(2, m + 1):
        f[:, j - 1] = scale * cum[:, m - j] * np.sin(theta[:, m - j])
    return f


def _dtlz5_theta(pos: np.ndarray, g: np.ndarray) -> np.ndarray:
    theta = np.empty_like(pos)
    theta[:, 0] = pos[:, 0] * np.pi / 2.0
    if pos.shape[1] > 1:
        gc = g[:, None]
        theta[:, 1:] = np.pi / (4.0 * (1.0 + gc)) * (1.0 + 2.0 * gc * pos[:, 1:])
    return theta


class Problem:
    """A box-constrained minimization problem with a known front geometry.

    Attributes
    ----------
    name : str
    m : int
        Number of objectives.
    n : int
        Number of decision variables.
    lower, upper : np.ndarray
        Box bounds, here always 0 and 1.
    true_ideal, true_nadir : np.ndarray
        Exact objective-space extremes of the (sampled) front.
    """

    family: int = 0

    def __init__(self, name: str, m: int):
        if m < 2:
            raise ValueError(f"need at least 2 objectives, got m={m}")
        self.name = name
        self.m = m
        self.k = _K_BY_FAMILY[self.family]
        self.n = m + self.k - 1
        self.lower = np.zeros(self.n)
        self.upper = np.ones(self.n)
        self.true_ideal, self.true_nadir = self._front_box()

    def _front_box(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def _objectives(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Objective vector of a single decision vector (bounds checked)."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ValueError(f"expected shape ({self.n},), got {x.shape}")
        if np.any(x < self.lower) or np.any(x > self.upper):
            raise ValueError("decision vector outside bounds")
        return self._objectives(x[None, :])[0]

    def evaluate_batch(self, x: np.ndarray) -> np.ndarray:
        """Objective matrix of an (N, n) batch; no bounds check (hot path)."""
        return self._objectives(_check_batch(x, self.n))

    def sample_pf(self, count: int,
                  engine: np.random.Generator) -> np.ndarray:
        """``count`` well-spread objective vectors on the front."""
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m}, n={self.n})"


class DTLZ1(Problem):
    family = 1

    def _front_box(self):
        return np.zeros(self.m), np.full(self.m, 0.5)

    def _split(self, x):
        return x[:, :self.m - 1], x[:, self.m - 1:]

    def _g_and_f(self, x):
        pos, xm = self._split(x)
        g = _g_rastrigin(xm)
        return g, _linear_objectives(pos, g)

    def _objectives(self, x):
        return self._g_and_f(x)[1]

    def sample_pf(self, count, engine):
        return 0.5 * uniform_simplex_set(self.m, count, engine)


class _SphereFront(Problem):
    """Common front box and sampler of DTLZ2/3/4 (unit-sphere front)."""

    def _front_box(self):
        return np.zeros(self.m), np.ones(self.m)

    def sample_pf(self, count, engine):
        w = uniform_simplex_set(self.m, count, engine)
        return w / np.linalg.norm(w, axis=1, keepdims=True)

    def _split(self, x):
        return x[:, :self.m - 1], x[:, self.m - 1:]


class DTLZ2(_SphereFront):
    family = 2

    def _g_and_f(self, x):
        pos, xm = self._split(x)
        g = _g_sphere(xm)
        return g, _spherical_objectives(pos * np.pi / 2.0, g)

    def _objectives(self, x):
        return self._g_and_f(x)[1]


class DTLZ3(_SphereFront):
    family = 3

    def _g_and_f(self, x):
        pos, xm = self._split(x)
        g = _g_rastrigin(xm)
        return g, _spherical_objectives(pos * np.pi / 2.0, g)

    def _objectives(self, x):
        return self._g_and_f(x)[1]


class DTLZ4(_SphereFront):
    family = 4
    alpha = 100.0

    def _g_and_f(self, x):
        pos, xm = self._split(x)
        g = _g_sphere(xm)
        return g, _spherical_objectives(pos ** self.alpha * np.pi / 2.0, g)

    def _objectives(self, x):
        return self._g_and_f(x)[1]


class _DegenerateCurve(Problem):
    """Common geometry of DTLZ5/6: the g = 0 surface is a curve.

    On that curve every objective except the last is proportional to
    cos(theta_1), so dominance reduces to the (f_1, f_m) profile; the sampler
    exploits this when filtering.
    """

    def _front_box(self):
        m = self.m
        nadir = np.empty(m)
        nadir[m - 1] = 1.0
        nadir[0] = 2.0 ** (-(m - 2) / 2.0)
        for j in range(2, m):
            nadir[j - 1] = 2.0 ** (-(m - j) / 2.0)
        return np.zeros(m), nadir

    def _split(self, x):
        return x[:, :self.m - 1], x[:, self.m - 1:]

    def _g_min_value(self) -> float:
        raise NotImplementedError

    def sample_pf(self, count, engine):
        pool_n = count if count >= 20000 else max(4 * count, 4000)
        x = np.full((pool_n, self.n), 0.5)
        x[:, 0] = np.linspace(0.0, 1.0, pool_n)
        x[:, self.m - 1:] = self._g_min_value()
        f = self.evaluate_batch(x)
        profile = f[:, [0, self.m - 1]]
        f = f[nondominated_mask(profile)]
        return farthest_point_subsample(f, count, engine)


class DTLZ5(_DegenerateCurve):
    family = 5

    def _g_min_value(self):
        return 0.5

    def _g_and_f(self, x):
        pos, xm = self._split(x)
        g = _g_sphere(xm)
        return g, _spherical_objectives(_dtlz5_theta(pos, g), g)

    def _objectives(self, x):
        return self._g_and_f(x)[1]


class DTLZ6(_DegenerateCurve):
    family = 6

    def _g_min_value(self):
        return 0.0

    def _g_and_f(self, x):
        pos, xm = self._split(x)
        g = np.sum(xm ** 0.1, axis=1)
        return g, _spherical_objectives(_dtlz5_theta(pos, g), g)

    def _objectives(self, x):
        return self._g_and_f(x)[1]


def _dtlz7_efficient_grid(resolution: int = 200001) -> np.ndarray:
    """Grid values of t whose u(t) = t(1+sin(3 pi t)) beats all smaller t."""
    t = np.linspace(0.0, 1.0, resolution)
    u = t * (1.0 + np.sin(3.0 * np.pi * t))
    run = np.maximum.accumulate(u)
    keep = np.ones(resolution, dtype=bool)
    keep[1:] = u[1:] > run[:-1]
    return t[keep]


class DTLZ7(Problem):
    family = 7
    _eff_grid: np.ndarray | None = None

    def _front_box(self):
        m = self.m
        ideal = np.zeros(m)
        ideal[m - 1] = 2.0 * m - (m - 1) * DTLZ7_U_STAR
        nadir = np.full(m, DTLZ7_T_STAR)
        nadir[m - 1] = 2.0 * m
        return ideal, nadir

    def _g_and_f(self, x):
        m = self.m
        pos = x[:, :m - 1]
        xm = x[:, m - 1:]
        g = 1.0 + 9.0 / self.k * np.sum(xm, axis=1)
        f = np.empty((x.shape[0], m))
        f[:, :m - 1] = pos
        ratio = pos / (1.0 + g)[:, None]
        h = m - np.sum(ratio * (1.0 + np.sin(3.0 * np.pi * pos)), axis=1)
        f[:, m - 1] = (1.0 + g) * h
        return g, f

    def _objectives(self, x):
        return self._g_and_f(x)[1]

    def sample_pf(self, count, engine):
        if DTLZ7._eff_grid is None:
            DTLZ7._eff_grid = _dtlz7_efficient_grid()
        grid = DTLZ7._eff_grid
        m = self.m
        pool_n = count if count >= 20000 else max(4 * count, 4000)
        pos = engine.choice(grid, size=(pool_n, m - 1))
        # anchors: per-objective extremes so any sample spans the front box
        anchors = np.zeros((m + 1, m - 1))
        for i in range(m - 1):
            anchors[i, i] = grid[-1]
        anchors[m - 1, :] = grid[-1]     # minimizes the last objective
        anchors[m, :] = 0.0              # maximizes the last objective
        pos = np.vstack([anchors, pos[:pool_n - anchors.shape[0]]])
        x = np.zeros((pos.shape[0], self.n))
        x[:, :m - 1] = pos
        f = self.evaluate_batch(x)
        return farthest_point_subsample(f, count, engine)


def _scale_factors(m: int) -> np.ndarray:
    return 10.0 ** np.arange(m)


class _Scaled(Problem):
    """Objective i of the base problem multiplied by 10^(i-1)."""

    base_cls: type[Problem] = Problem

    def __init__(self, name: str, m: int):
        self._base = self.base_cls(name, m)
        self.family = self._base.family
        self.name = name
        self.m = m
        self.k = self._base.k
        self.n = self._base.n
        self.lower = self._base.lower
        self.upper = self._base.upper
        self._factors = _scale_factors(m)
        self.true_ideal = self._base.true_ideal * self._factors
        self.true_nadir = self._base.true_nadir * self._factors

    def _objectives(self, x):
        return self._base._objectives(x) * self._factors

    def sample_pf(self, count, engine):
        return self._base.sample_pf(count, engine) * self._factors


class SDTLZ1(_Scaled):
    base_cls = DTLZ1


class SDTLZ2(_Scaled):
    base_cls = DTLZ2


class SDTLZ3(_Scaled):
    base_cls = DTLZ3


class SDTLZ4(_Scaled):
    base_cls = DTLZ4


class IDTLZ1(Problem):
    """DTLZ1 with each objective flipped inside the attainable box:
    f_i' = (1 + g)/2 - f_i."""

    family = 1

    def __init__(self, name: str, m: int):
        self._base = DTLZ1(name, m)
        super().__init__(name, m)

    def _front_box(self):
        return np.zeros(self.m), np.full(self.m, 0.5)

    def _objectives(self, x):
        g, f = self._base._g_and_f(x)
        return (0.5 * (1.0 + g))[:, None] - f

    def sample_pf(self, count, engine):
        w = uniform_simplex_set(self.m, count, engine)
        return 0.5 * (1.0 - w)


class _InvertedSphere(Problem):
    """DTLZ2/3/4 with f_i' = (1 + g) - f_i (inverted unit-sphere front)."""

    base_cls: type[Problem] = Problem
    family = 2

    def __init__(self, name: str, m: int):
        self._base = self.base_cls(name, m)
        self.family = self._base.family
        super().__init__(name, m)

    def _front_box(self):
        return np.zeros(self.m), np.ones(self.m)

    def _objectives(self, x):
        g, f = self._base._g_and_f(x)
        return (1.0 + g)[:, None] - f

    def sample_pf(self, count, engine):
        w = uniform_simplex_set(self.m, count, engine)
        return 1.0 - w / np.linalg.norm(w, axis=1, keepdims=True)


class IDTLZ2(_InvertedSphere):
    base_cls = DTLZ2


class IDTLZ3(_InvertedSphere):
    base_cls = DTLZ3


class IDTLZ4(_InvertedSphere):
    base_cls = DTLZ4


_REGISTRY: dict[str, type[Problem]] = {
    "dtlz1": DTLZ1, "dtlz2": DTLZ2, "dtlz3": DTLZ3, "dtlz4": DTLZ4,
    "dtlz5": DTLZ5, "dtlz6": DTLZ6, "dtlz7": DTLZ7,
    "sdtlz1": SDTLZ1, "sdtlz2": SDTLZ2, "sdtlz3": SDTLZ3, "sdtlz4": SDTLZ4,
    "idtlz1": IDTLZ1, "idtlz2": IDTLZ2, "idtlz3": IDTLZ3, "idtlz4": IDTLZ4,
}


def problem_names() -> list[str]:
    """All registered problem names in canonical order."""
    return list(_REGISTRY)


def get_problem(name: str, m: int) -> Problem:
    """Instantiate a registered problem.

    Parameters
    ----------
    name : str
        Case-insensitive registry name, e.g. ``"sdtlz2"``.
    m : int
        Number of objectives, at least 2.
    """
    key = name.lower()
    if key not in _REGISTRY:
        raise KeyError(f"unknown problem {name!r}; known: "
                       f"{', '.join(_REGISTRY)}")
    return _REGISTRY[key](key, m)
