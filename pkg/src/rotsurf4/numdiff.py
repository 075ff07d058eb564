"""Finite-difference weights and derivatives on sampled grids.

Weights come from Fornberg's recurrence, so arbitrary node placement and
evaluation points are supported.  Grid derivatives use centered windows in
the interior and shifted windows at the ends, keeping the full order of the
stencil everywhere.
"""

from __future__ import annotations

import numpy as np


def fd_weights(nodes, x0: float, order: int) -> np.ndarray:
    """Weights w such that sum(w * f(nodes)) approximates d^order f(x0)."""
    nodes = np.asarray(nodes, dtype=float)
    n = nodes.size
    if order < 0:
        raise ValueError("derivative order must be >= 0")
    if n <= order:
        raise ValueError("need more nodes than the derivative order")
    m = order
    c = np.zeros((n, m + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    for i in range(1, n):
        c2 = 1.0
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            for k in range(min(i, m), 0, -1):
                c[j, k] = ((nodes[i] - x0) * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = (nodes[i] - x0) * c[j, 0] / c3
        for k in range(min(i, m), 0, -1):
            c[i, k] = c1 * (k * c[i - 1, k - 1] - (nodes[i - 1] - x0) * c[i - 1, k]) / c2
        c[i, 0] = -c1 * (nodes[i - 1] - x0) * c[i - 1, 0] / c2
        c1 = c2
    return c[:, m].copy()


def grid_derivative(grid, values, order: int, window: int = 5) -> np.ndarray:
    """Per-node derivative of sampled values of the given order.

    window nodes are used around each target node (shifted inside the grid at
    the ends), so the truncation order is that of the full stencil at every
    node.
    """
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(values, dtype=float)
    n = grid.size
    if values.shape[0] != n:
        raise ValueError("grid and values must have matching length")
    if window > n:
        window = n
    if window <= order:
        raise ValueError("window too small for requested order")
    out = np.empty(n, dtype=float)
    half = window // 2
    for i in range(n):
        lo = min(max(i - half, 0), n - window)
        w = fd_weights(grid[lo:lo + window], grid[i], order)
        out[i] = float(np.dot(w, values[lo:lo + window]))
    return out


def local_derivative(f, x: float, order: int, h: float,
                     lo: float | None = None, hi: float | None = None,
                     points: int = 5) -> float:
    """Derivative of a callable at x from a small stencil of width (points-1)*h.

    The stencil is centered when possible and shifted to stay within
    [lo, hi]; accuracy is O(h^(points-order)) either way.
    """
    offsets = (np.arange(points) - (points - 1) / 2.0) * h
    nodes = x + offsets
    if lo is not None and nodes[0] < lo:
        nodes = nodes + (lo - nodes[0])
    if hi is not None and nodes[-1] > hi:
        nodes = nodes + (hi - nodes[-1])
    if lo is not None and nodes[0] < lo - 1e-14 * max(1.0, abs(lo)):
        raise ValueError("stencil does not fit inside the allowed interval")
    w = fd_weights(nodes, x, order)
    return float(sum(wi * f(float(xi)) for wi, xi in zip(w, nodes)))
