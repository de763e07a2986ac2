#!/usr/bin/env python3
"""Forward problem walkthrough: solve, certificate, and the isogonal case.

Three non-overlapping circles with positive weights; we minimize the
weighted sum of distances to the circles and inspect the geometric
certificate at the solution point.
"""

import math

from ftcircles import (
    Circle,
    Configuration,
    Point2,
    certificate_residuals,
    classify_case,
    regular_polygon_config,
    solve,
)

print("=" * 72)
print("1. Equal weights on an equilateral triangle: the isogonal case")
print("=" * 72)

config = regular_polygon_config(3, circumradius=1.0 / math.sqrt(3.0), radius=0.1)
result = solve(config)
print(f"case: {result.case}")
print(f"solution point: ({result.point.x:.12f}, {result.point.y:.12f})")
print(f"objective: {result.objective:.12f}")
print("sector angles (deg):", [f"{math.degrees(a):.6f}" for a in result.sector_angles])
print("every angle is 120 degrees: the point sees all three circles isogonally")

print()
print("=" * 72)
print("2. A scalene instance with uneven weights")
print("=" * 72)

config = Configuration(
    (
        Circle(Point2(0.0, 0.0), 0.25),
        Circle(Point2(3.0, 0.2), 0.35),
        Circle(Point2(1.2, 2.6), 0.2),
    ),
    (0.9, 1.2, 1.0),
)
result = solve(config)
print(f"case: {result.case}")
print(f"solution point: ({result.point.x:.9f}, {result.point.y:.9f})")
print(f"objective: {result.objective:.9f}")
for i, (proj, dist) in enumerate(zip(result.projections, result.distances)):
    print(f"  circle {i}: projection ({proj.x:+.6f}, {proj.y:+.6f}), distance {dist:.6f}")
print(f"equilibrium residual: {result.equilibrium_residual:.2e}")
residuals = certificate_residuals(result, config)
print("cosine certificate residuals:", [f"{r:+.2e}" for r in residuals])
print("all residuals vanish: the weighted unit pulls balance exactly")

print()
print("=" * 72)
print("3. A dominant weight absorbs the solution")
print("=" * 72)

heavy = Configuration(config.circles, (10.0, 1.0, 1.0))
print(f"classification: {classify_case(heavy)}")
result = solve(heavy)
print(f"solution point = first center: ({result.point.x}, {result.point.y})")
print(f"distances: {[f'{d:.6f}' for d in result.distances]}")
print("no angle certificate exists in the absorbed case")
