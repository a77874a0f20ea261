"""Ground-truth solvers for the least-time path.

Two independent routes: an exhaustive scan over every integer interface state,
and a continuous minimizer (coordinate descent, golden-section line search)
whose optimum is checked against Snell's law.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .environment import InterfaceState, LayeredMedium, path_time

DEFAULT_MAX_STATES = 10_000_000
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class OracleRefused(ValueError):
    """The discrete state space is too large to enumerate."""


class NotConverged(RuntimeError):
    def __init__(self, message: str, best_ys: Tuple[float, ...], best_time: float) -> None:
        super().__init__(message)
        self.best_ys = best_ys
        self.best_time = best_time


@dataclass(frozen=True)
class OracleResult:
    best_state: Tuple  # ints for the discrete scan, floats for the continuous solver
    best_time: float
    snell_residual: float | None = None
    sweeps: int | None = None

    def to_dict(self) -> dict:
        d = {"state": list(self.best_state), "time": self.best_time}
        if self.snell_residual is not None:
            d["snell_residual"] = self.snell_residual
        return d


def state_space_size(medium: LayeredMedium) -> int:
    return (medium.height + 1) ** medium.n_interfaces


def brute_force_optimum(
    medium: LayeredMedium, max_states: int = DEFAULT_MAX_STATES
) -> OracleResult:
    """Exact argmin of the travel time over all integer interface states.

    Ties go to the lexicographically smallest state.  Raises OracleRefused
    when ``(H + 1) ** (M - 1)`` exceeds ``max_states``.
    """
    size = state_space_size(medium)
    if size > max_states:
        raise OracleRefused(
            f"state space has {size} states, above the cap of {max_states}"
        )
    k = medium.n_interfaces
    grid = np.arange(medium.height + 1, dtype=float)
    w = float(medium.slab_width)
    total = np.zeros((medium.height + 1,) * k)

    def axis(i: int) -> np.ndarray:
        shape = [1] * k
        shape[i] = -1
        return grid.reshape(shape)

    # every slab term depends only on its two bounding crossing points
    for i, n in enumerate(medium.indices):
        left = medium.start[1] if i == 0 else axis(i - 1)
        right = medium.end[1] if i == k else axis(i)
        total = total + n * np.hypot(w, right - left)

    flat = int(np.argmin(total))  # C order == lexicographic order
    state = tuple(int(v) for v in np.unravel_index(flat, total.shape))
    return OracleResult(state, path_time(medium, state))


def snell_residual(medium: LayeredMedium, ys: Sequence[float]) -> float:
    """Largest mismatch of ``n * sin(theta)`` across any interface.

    ``sin(theta)`` carries the sign of the vertical rise in each slab.  The
    value is also the largest partial derivative of travel time with
    respect to an interface coordinate.
    """
    pts = [medium.start[1], *ys, medium.end[1]]
    w = medium.slab_width
    ns = []
    for i, n in enumerate(medium.indices):
        dy = pts[i + 1] - pts[i]
        ns.append(n * dy / math.hypot(w, dy))
    return max(abs(ns[i] - ns[i + 1]) for i in range(len(ns) - 1))


def _hypot_diff(w: float, a: float, b: float, a_minus_b: float) -> float:
    # hypot(w, a) - hypot(w, b) without cancellation; a - b is passed in exactly
    return a_minus_b * (a + b) / (math.hypot(w, a) + math.hypot(w, b))


def _golden_section(f, lo: float, hi: float, xtol: float) -> float:
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    # the interval endpoints are never evaluated inside the loop
    for edge in (lo, hi):
        if f(edge) < f(x):
            x = edge
    return x


def fermat_continuous(
    medium: LayeredMedium,
    tol: float = 1e-10,
    max_sweeps: int = 10_000,
    xtol: float = 1e-13,
) -> OracleResult:
    """Minimize travel time over real-valued interface coordinates in [0, H].

    Each sweep line-searches every coordinate in turn.  The search stops once
    a sweep lowers the time by less than ``tol`` and the Snell residual is
    also below ``tol``.  Raises NotConverged (carrying the best iterate)
    after ``max_sweeps`` sweeps.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    w = float(medium.slab_width)
    n = medium.indices
    h = float(medium.height)
    # straight line from A to B as the starting guess
    ya, yb = medium.start[1], medium.end[1]
    ys = [ya + (yb - ya) * (i + 1) / medium.n_slabs for i in range(medium.n_interfaces)]
    pts = [ya, *ys, yb]

    for sweep in range(1, max_sweeps + 1):
        improvement = 0.0
        for i in range(1, len(pts) - 1):
            lo_pt, hi_pt, y0 = pts[i - 1], pts[i + 1], pts[i]

            # change in the two slab times touching this interface, relative to y0
            def delta(y: float) -> float:
                step = y - y0
                return n[i - 1] * _hypot_diff(w, y - lo_pt, y0 - lo_pt, step) + n[i] * _hypot_diff(
                    w, hi_pt - y, hi_pt - y0, -step
                )

            y = _golden_section(delta, 0.0, h, xtol)
            d = delta(y)
            if d < 0:
                pts[i] = y
                improvement -= d
        ys = pts[1:-1]
        residual = snell_residual(medium, ys)
        if improvement < tol and residual < tol:
            return OracleResult(tuple(ys), path_time(medium, ys), residual, sweep)
    raise NotConverged(
        f"no convergence after {max_sweeps} sweeps (residual {residual:.3g})",
        tuple(ys),
        path_time(medium, ys),
    )


def rounding_box_optimum(medium: LayeredMedium, ys: Sequence[float]) -> OracleResult:
    """Best integer state among the floor/ceil neighbours of ``ys``."""
    from itertools import product

    choices = [sorted({math.floor(y), math.ceil(y)}) for y in ys]
    best: InterfaceState | None = None
    t_best = math.inf
    for cand in product(*choices):
        cand = tuple(min(medium.height, max(0, int(c))) for c in cand)
        t = path_time(medium, cand)
        if t < t_best:
            best, t_best = cand, t
    return OracleResult(best, t_best)
