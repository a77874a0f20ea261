"""Layered refractive media, path travel time, and the R-score reward.

Light crosses ``M`` vertical slabs of equal width.  Within a slab it moves in
a straight line, so a path is fully described by the integer y-coordinate at
which it crosses each of the ``M - 1`` interior interfaces.  With ``c = 1``
the travel time through slab ``i`` is ``l_i * n_i``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Tuple

# Integer y-coordinate of the crossing point on each interface, left to right.
InterfaceState = Tuple[int, ...]

UP = 1
DOWN = -1


class MoveAction(NamedTuple):
    """Move the crossing point on one interface by one grid unit."""

    interface_index: int
    direction: int  # UP (+1) or DOWN (-1)

    @property
    def index(self) -> int:
        # ordering y1 up, y1 down, y2 up, y2 down, ...
        return 2 * self.interface_index + (0 if self.direction == UP else 1)

    @classmethod
    def from_index(cls, index: int) -> "MoveAction":
        return cls(index // 2, UP if index % 2 == 0 else DOWN)

    @property
    def label(self) -> str:
        return f"y{self.interface_index + 1}{'+' if self.direction == UP else '-'}"

    @classmethod
    def from_label(cls, label: str) -> "MoveAction":
        sign = label[-1]
        if not label.startswith("y") or sign not in "+-":
            raise ValueError(f"bad action label {label!r}")
        return cls(int(label[1:-1]) - 1, UP if sign == "+" else DOWN)


@dataclass(frozen=True)
class LayeredMedium:
    """Stack of equal-width slabs between a start point and an end point.

    ``start`` sits on the left boundary (x = 0) and ``end`` on the right
    boundary (x = len(indices) * slab_width).
    """

    indices: Tuple[float, ...]
    slab_width: int
    height: int
    start: Tuple[float, float]
    end: Tuple[float, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(float(n) for n in self.indices))
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "end", tuple(self.end))
        if len(self.indices) < 2:
            raise ValueError("indices: need at least two slabs (one interface)")
        if any(not n > 0 or not math.isfinite(n) for n in self.indices):
            raise ValueError("indices: every refractive index must be positive and finite")
        if int(self.slab_width) != self.slab_width or self.slab_width <= 0:
            raise ValueError("slab_width: must be a positive integer")
        if int(self.height) != self.height or self.height <= 0:
            raise ValueError("height: must be a positive integer")
        if len(self.start) != 2 or len(self.end) != 2:
            raise ValueError("start/end: must be (x, y) pairs")
        if self.start[0] != 0:
            raise ValueError("start: x must be 0 (left boundary)")
        if self.end[0] != self.width:
            raise ValueError(f"end: x must be {self.width} (right boundary)")
        for name, point in (("start", self.start), ("end", self.end)):
            if not 0 <= point[1] <= self.height:
                raise ValueError(f"{name}: y must lie in [0, {self.height}]")

    @property
    def n_slabs(self) -> int:
        return len(self.indices)

    @property
    def n_interfaces(self) -> int:
        return len(self.indices) - 1

    @property
    def n_actions(self) -> int:
        return 2 * self.n_interfaces

    @property
    def width(self) -> int:
        return self.n_slabs * self.slab_width

    def mirrored(self) -> "LayeredMedium":
        """Reflection of the medium and both endpoints through y -> H - y."""
        h = self.height
        return LayeredMedium(
            self.indices,
            self.slab_width,
            h,
            (self.start[0], h - self.start[1]),
            (self.end[0], h - self.end[1]),
        )


def check_state(medium: LayeredMedium, state: Sequence[int]) -> InterfaceState:
    """Return ``state`` as a tuple, raising ValueError if it does not fit ``medium``."""
    state = tuple(state)
    if len(state) != medium.n_interfaces:
        raise ValueError(
            f"state has {len(state)} coordinates, medium has {medium.n_interfaces} interfaces"
        )
    for y in state:
        if int(y) != y or not 0 <= y <= medium.height:
            raise ValueError(f"state coordinate {y!r} is not an integer in [0, {medium.height}]")
    return tuple(int(y) for y in state)


def _crossings(medium: LayeredMedium, ys: Sequence[float]) -> list:
    if len(ys) != medium.n_interfaces:
        raise ValueError(
            f"state has {len(ys)} coordinates, medium has {medium.n_interfaces} interfaces"
        )
    return [medium.start[1], *ys, medium.end[1]]


def segment_lengths(medium: LayeredMedium, state: Sequence[float]) -> list:
    """Euclidean length of the straight segment inside each slab."""
    pts = _crossings(medium, state)
    w = medium.slab_width
    return [math.hypot(w, pts[i + 1] - pts[i]) for i in range(medium.n_slabs)]


def path_time(medium: LayeredMedium, state: Sequence[float]) -> float:
    """Total travel time ``sum(l_i * n_i)`` of the path through ``state``."""
    return math.fsum(
        l * n for l, n in zip(segment_lengths(medium, state), medium.indices)
    )


def apply_action(
    medium: LayeredMedium, state: InterfaceState, action: MoveAction
) -> InterfaceState:
    """Step one crossing point by one unit; moves past 0 or H are clamped."""
    if not 0 <= action.interface_index < medium.n_interfaces:
        raise ValueError(f"interface index {action.interface_index} out of range")
    ys = list(state)
    i = action.interface_index
    ys[i] = min(medium.height, max(0, ys[i] + action.direction))
    return tuple(ys)


def r_score(time: float, scale: float = 1.0, *, log_scale: float | None = None) -> float:
    """``scale * exp(-time)``.

    Pass ``log_scale`` instead of ``scale`` when the prefactor itself would
    overflow; the product is then evaluated as ``exp(log_scale - time)``.
    """
    if log_scale is None:
        if not scale > 0:
            raise ValueError("scale must be positive")
        log_scale = math.log(scale)
    return math.exp(log_scale - time)


def reward(r_current: float, r_best: float) -> float:
    """Improvement of the current R-score over the best one seen this episode."""
    return r_current - r_best
