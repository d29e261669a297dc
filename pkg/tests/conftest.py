"""Shared draw helpers for randomized checks.

Instances are kept at desk scale (response components of order unity,
|Im chi_inv| bounded away from zero, budgets within a couple of decades of
the threshold).  The force-referred sum noise is a cancellation of terms
that grow with s_ff/dql, so wildly conditioned instances would exhaust
double precision no matter the algorithm.
"""

import numpy as np

from qnl import threshold_full


def rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def draw_lossy_chi_inv(rng: np.random.Generator, min_im: float = 0.05) -> complex:
    sign = 1.0 if rng.uniform() < 0.5 else -1.0
    return complex(rng.uniform(-2.0, 2.0), sign * rng.uniform(min_im, 2.0))


def draw_back_action(rng: np.random.Generator, im_scale: float = 1.0) -> complex:
    return complex(rng.uniform(-2.0, 2.0), rng.uniform(-im_scale, im_scale))


def draw_budget(rng: np.random.Generator, chi_inv: complex, k: complex,
                hbar: float = 1.0, decades: float = 1.5) -> float:
    """Back-action PSD spanning both regimes, above the meter FDT floor."""
    thr = threshold_full(chi_inv, k, hbar)
    floor = hbar * abs(k.imag)
    s = thr * 10.0 ** rng.uniform(-decades, decades)
    return max(s, floor * (1.0 + 10.0 ** rng.uniform(-4.0, 0.0)))
