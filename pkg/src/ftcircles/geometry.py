"""2D primitives: points, circles, projections, angles, sector decompositions.

All operations are pure functions of immutable values and are safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DegenerateAngle, DegenerateProjection, InvalidConfiguration

#: Two points closer than this are treated as coincident.
COINCIDENT_EPS = 1e-12


@dataclass(frozen=True)
class Point2:
    """A point in the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidConfiguration(
                f"point coordinates must be finite, got ({self.x}, {self.y})"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)

    @staticmethod
    def from_array(a) -> "Point2":
        return Point2(float(a[0]), float(a[1]))

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Circle:
    """A circle given by its center and a strictly positive radius."""

    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise InvalidConfiguration(f"radius must be positive and finite, got {self.radius}")


class DistanceMode(Enum):
    """How point-to-circle distance is measured.

    TO_CURVE measures distance to the circle itself, ``| |p-A| - r |``.
    TO_SET measures distance to the closed disk, ``max(|p-A| - r, 0)``.
    The two coincide everywhere outside the disk.
    """

    TO_CURVE = "curve"
    TO_SET = "set"


@dataclass(frozen=True)
class Configuration:
    """A problem instance: n >= 3 pairwise non-overlapping weighted circles."""

    circles: tuple[Circle, ...]
    weights: tuple[float, ...]
    tolerance: float = 1e-10
    distance_mode: DistanceMode = DistanceMode.TO_CURVE

    def __post_init__(self):
        object.__setattr__(self, "circles", tuple(self.circles))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        n = len(self.circles)
        if n < 3:
            raise InvalidConfiguration(f"need at least 3 circles, got {n}")
        if len(self.weights) != n:
            raise InvalidConfiguration(
                f"{n} circles but {len(self.weights)} weights"
            )
        for i, w in enumerate(self.weights):
            if not (math.isfinite(w) and w > 0.0):
                raise InvalidConfiguration(f"weight {i} must be positive and finite, got {w}")
        if not (math.isfinite(self.tolerance) and self.tolerance > 0.0):
            raise InvalidConfiguration(f"tolerance must be positive, got {self.tolerance}")
        if not isinstance(self.distance_mode, DistanceMode):
            raise InvalidConfiguration(f"bad distance mode {self.distance_mode!r}")
        for i in range(n):
            for j in range(i + 1, n):
                ci, cj = self.circles[i], self.circles[j]
                if ci.center.distance_to(cj.center) <= ci.radius + cj.radius:
                    raise InvalidConfiguration(
                        f"circles {i} and {j} overlap or touch"
                    )

    @property
    def n(self) -> int:
        return len(self.circles)

    def centers_array(self) -> np.ndarray:
        return np.array([[c.center.x, c.center.y] for c in self.circles], dtype=float)

    def radii_array(self) -> np.ndarray:
        return np.array([c.radius for c in self.circles], dtype=float)

    def weights_array(self) -> np.ndarray:
        return np.array(self.weights, dtype=float)


def unit_vector(a: Point2, b: Point2) -> np.ndarray:
    """Unit vector pointing from a toward b. Requires a != b."""
    v = b.as_array() - a.as_array()
    norm = float(np.hypot(v[0], v[1]))
    if norm < COINCIDENT_EPS:
        raise DegenerateProjection(f"points coincide: {a} and {b}")
    return v / norm


def project_onto_circle(p: Point2, c: Circle) -> Point2:
    """Closest point of the circle to p, along the radial ray through p.

    The segment from p to the result is radial, hence orthogonal to the
    circle. Raises DegenerateProjection when p coincides with the center,
    where every circle point is equally close.
    """
    dx, dy = p.x - c.center.x, p.y - c.center.y
    d = math.hypot(dx, dy)
    if d < COINCIDENT_EPS:
        raise DegenerateProjection("projection of the center onto its circle is not unique")
    k = c.radius / d
    return Point2(c.center.x + k * dx, c.center.y + k * dy)


def distance_to_circle(p: Point2, c: Circle, mode: DistanceMode = DistanceMode.TO_CURVE) -> float:
    """Distance from p to the circle (TO_CURVE) or to its closed disk (TO_SET)."""
    d = p.distance_to(c.center)
    if mode is DistanceMode.TO_CURVE:
        return abs(d - c.radius)
    return max(d - c.radius, 0.0)


def angle_at(apex: Point2, a: Point2, b: Point2) -> float:
    """Unsigned angle in [0, pi] between rays apex->a and apex->b."""
    ua = unit_vector_checked(apex, a)
    ub = unit_vector_checked(apex, b)
    dot = float(np.clip(np.dot(ua, ub), -1.0, 1.0))
    return math.acos(dot)


def unit_vector_checked(apex: Point2, p: Point2) -> np.ndarray:
    """Like unit_vector but raises DegenerateAngle on coincident input."""
    v = p.as_array() - apex.as_array()
    norm = float(np.hypot(v[0], v[1]))
    if norm < COINCIDENT_EPS:
        raise DegenerateAngle(f"ray endpoint coincides with apex {apex}")
    return v / norm


def azimuths_at(apex: Point2, points: Sequence[Point2]) -> np.ndarray:
    """Polar angles (atan2, in (-pi, pi]) of each point as seen from apex."""
    out = np.empty(len(points))
    for k, p in enumerate(points):
        dx, dy = p.x - apex.x, p.y - apex.y
        if math.hypot(dx, dy) < COINCIDENT_EPS:
            raise DegenerateAngle(f"point {k} coincides with apex")
        out[k] = math.atan2(dy, dx)
    return out


def sector_decomposition(apex: Point2, points: Sequence[Point2]) -> tuple[tuple[int, ...], tuple[float, ...]]:
    """Cyclic order of rays around apex and the consecutive sector angles.

    Returns (order, sectors): ``order`` lists the point indices sorted by
    ascending polar angle (starting at the smallest), and ``sectors[k]`` is
    the counterclockwise angle from ray order[k] to ray order[k+1] (wrapping
    at the end). The sectors sum to 2*pi.
    """
    az = azimuths_at(apex, points)
    order = tuple(int(i) for i in np.argsort(az, kind="stable"))
    sorted_az = az[list(order)]
    sectors = []
    for k in range(len(order) - 1):
        sectors.append(float(sorted_az[k + 1] - sorted_az[k]))
    sectors.append(float(2.0 * math.pi - (sorted_az[-1] - sorted_az[0])))
    return order, tuple(sectors)
