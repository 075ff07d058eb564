"""Adaptive Simpson quadrature with cumulative (running-integral) support.

The adaptive rule is deterministic: intervals are bisected until the local
Richardson error estimate meets the absolute tolerance budget, with a hard
recursion cap.  Cumulative integration over a grid allocates the tolerance
proportionally to step length, so the per-step results can be chained and
re-run locally (e.g. to evaluate between grid nodes) without losing
consistency with the stored values.
"""

from __future__ import annotations

import math

import numpy as np

DEFAULT_TOL = 1e-10
DEFAULT_MAX_DEPTH = 40


class QuadratureError(RuntimeError):
    """Raised when the adaptive rule cannot reach the requested tolerance."""


def _simpson(a: float, b: float, fa: float, fm: float, fb: float) -> float:
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adapt(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(a, m, fa, flm, fm)
    right = _simpson(m, b, fm, frm, fb)
    delta = left + right - whole
    # Interval collapsed to machine resolution: accept what we have.
    if abs(delta) <= 15.0 * tol or lm <= a or rm >= b:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureError(
            f"adaptive Simpson did not converge on [{a!r}, {b!r}] "
            f"(residual {abs(delta):.3e}, tol {tol:.3e})")
    return (_adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + _adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1))


def adaptive_simpson(f, a: float, b: float, tol: float = DEFAULT_TOL,
                     max_depth: int = DEFAULT_MAX_DEPTH) -> float:
    """Integrate f from a to b (signed) to absolute tolerance tol."""
    a = float(a)
    b = float(b)
    if a == b:
        return 0.0
    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0
    fa = f(a)
    m = 0.5 * (a + b)
    fm = f(m)
    fb = f(b)
    if not (math.isfinite(fa) and math.isfinite(fm) and math.isfinite(fb)):
        raise QuadratureError(f"non-finite integrand on [{a!r}, {b!r}]")
    whole = _simpson(a, b, fa, fm, fb)
    return sign * _adapt(f, a, b, fa, fm, fb, whole, tol, max_depth)


def cumulative_adaptive_simpson(f, grid, tol: float = DEFAULT_TOL,
                                max_depth: int = DEFAULT_MAX_DEPTH) -> np.ndarray:
    """Antiderivative of f at the grid nodes, zero at the first node.

    Each step gets tol * (step / total_span) of the absolute budget, so the
    accumulated error over the whole grid stays within tol.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise ValueError("grid must be a 1-d array with at least two nodes")
    span = float(grid[-1] - grid[0])
    if span <= 0.0:
        raise ValueError("grid must be strictly increasing")
    out = np.zeros(grid.size, dtype=float)
    acc = 0.0
    for i in range(1, grid.size):
        lo = float(grid[i - 1])
        hi = float(grid[i])
        if hi <= lo:
            raise ValueError("grid must be strictly increasing")
        acc += adaptive_simpson(f, lo, hi, tol * (hi - lo) / span, max_depth)
        out[i] = acc
    return out


def step_tolerance(tol: float, lo: float, hi: float, span: float) -> float:
    """Tolerance budget for a sub-integral of width |hi-lo| out of span."""
    width = abs(hi - lo)
    return tol * max(width, 1e-9 * span) / span
