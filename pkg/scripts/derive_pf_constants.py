"""Derive the frozen front constants used by the package.

Run from the repository root after an editable install:

    python3 scripts/derive_pf_constants.py

Outputs, in order:

1. The interior maximum t* of u(t) = t (1 + sin(3 pi t)) on [0, 1] and its
   value u* = u(t*).  On the disconnected front, every position coordinate
   tops out at t* and the last objective spans [2m - (m-1) u*, 2m]; the two
   numbers are frozen as ``DTLZ7_T_STAR`` / ``DTLZ7_U_STAR`` in
   ``prefnorm.problems``.
2. For each unlisted objective count, the bundled default reference point of
   the disconnected-front problem: 1.2 times the centroid of a large front
   sample (frozen in ``prefnorm.refpoints``).  A fixed seed makes the
   numbers reproducible.
"""
import numpy as np
from scipy.optimize import minimize_scalar

from prefnorm.core import make_engine
from prefnorm.problems import get_problem


def u(t):
    return t * (1.0 + np.sin(3.0 * np.pi * t))


def main():
    res = minimize_scalar(lambda t: -u(t), bounds=(0.8, 1.0),
                          method="bounded", options={"xatol": 1e-14})
    t_star = float(res.x)
    u_star = float(u(t_star))
    # confirm it is the global maximum over [0, 1]
    grid = np.linspace(0.0, 1.0, 2_000_001)
    assert u(grid).max() <= u_star + 1e-12
    print(f"DTLZ7_T_STAR = {t_star!r}")
    print(f"DTLZ7_U_STAR = {u_star!r}")

    print("\nDTLZ7 balanced reference points (1.2 x front centroid, "
          "rounded to 4 decimals):")
    for m in (2, 4, 5, 6):
        problem = get_problem("dtlz7", m)
        pf = problem.sample_pf(20000, make_engine(20260823))
        z = 1.2 * pf.mean(axis=0)
        print(f"    {m}: ({', '.join(f'{round(float(v), 4)}' for v in z)}),")


if __name__ == "__main__":
    main()
