"""Shared fixtures and helpers for the test suite."""

import math

import numpy as np
import pytest

from ftcircles import Circle, Configuration, Point2


EQUILATERAL_CIRCUMRADIUS = 1.0 / math.sqrt(3.0)  # unit side length


@pytest.fixture
def equilateral_config():
    """Equilateral triangle of side 1, equal weights, radii 0.1."""
    circles = []
    for k in range(3):
        ang = math.pi / 2.0 + 2.0 * math.pi * k / 3.0
        circles.append(
            Circle(
                Point2(
                    EQUILATERAL_CIRCUMRADIUS * math.cos(ang),
                    EQUILATERAL_CIRCUMRADIUS * math.sin(ang),
                ),
                0.1,
            )
        )
    return Configuration(tuple(circles), (1.0, 1.0, 1.0))


def triangle_config(weights=(1.0, 1.0, 1.0), radii=(0.2, 0.2, 0.2)):
    """Fixed scalene triangle of centers with chosen weights and radii."""
    centers = [Point2(0.0, 0.0), Point2(3.0, 0.2), Point2(1.2, 2.6)]
    circles = tuple(Circle(c, r) for c, r in zip(centers, radii))
    return Configuration(circles, tuple(weights))


def assert_close(a, b, tol, label=""):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    gap = float(np.max(np.abs(a - b)))
    assert gap <= tol, f"{label} differs by {gap:.3e} > {tol:.1e}: {a} vs {b}"
