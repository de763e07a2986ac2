#!/usr/bin/env python3
"""Inverse problem walkthrough: recover normalized weights from geometry.

For three circles the angles at the solution point determine the weights
uniquely (up to scale). We demonstrate the closed-form angle formulas, the
sine-proportional inverse, and a full solve-then-invert round trip.
"""

import math

from ftcircles import (
    angles_from_weights,
    opposite_angles,
    random_floating_config,
    solve,
    weights_from_angles,
)

print("=" * 72)
print("1. Angles from weights, weights from angles")
print("=" * 72)

w = (3.0, 4.0, 5.0)
triple = angles_from_weights(*w)
print(f"weights {w} produce angles (deg): "
      f"{[f'{math.degrees(a):.6f}' for a in triple.angles]}")
print(f"angle sum: {sum(triple.angles):.12f} (= 2*pi)")

recovered = weights_from_angles(triple)
print(f"inverted back: {[f'{x:.12f}' for x in recovered]}")
print(f"ratios match 3:4:5 scaled to sum 1 -> (0.25, 0.3333..., 0.41666...)")
print(f"recovered sum: {sum(recovered)} (exactly 1.0)")

print()
print("=" * 72)
print("2. The floating boundary")
print("=" * 72)
try:
    angles_from_weights(1.0, 1.0, 2.0)
except Exception as exc:
    print(f"weights (1, 1, 2) are rejected: {type(exc).__name__}: {exc}")
print("one weight equal to the sum of the others collapses the interior point")

print()
print("=" * 72)
print("3. Solve-then-invert round trip on a random instance")
print("=" * 72)

config = random_floating_config(3, seed=23)
print("true weights:      ", [f"{x:.9f}" for x in config.weights])
result = solve(config)
measured = opposite_angles(result)
print("measured angles:   ", [f"{math.degrees(a):.6f}" for a in measured.angles])
recovered = weights_from_angles(measured)
total = sum(config.weights)
print("recovered weights: ", [f"{x:.9f}" for x in recovered])
print("true normalized:   ", [f"{x / total:.9f}" for x in config.weights])
err = max(abs(r - x / total) for r, x in zip(recovered, config.weights))
print(f"max recovery error: {err:.2e}")
