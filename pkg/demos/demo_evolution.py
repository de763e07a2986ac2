#!/usr/bin/env python3
"""Evolution walkthrough: five circles growing with radii tied to weights.

Centers sit at a regular pentagon; radii are a fixed scale times the
weights. Type A grows the two branches in one sector simultaneously;
Type B alternates between the composite of two merged rays and a single
branch. Both conserve their total weight exactly and keep the solution
point fixed.
"""

from ftcircles import (
    evolve_type_a,
    evolve_type_b,
    regular_polygon_config,
)
from ftcircles.cli import trace_csv

pentagon = regular_polygon_config(5, circumradius=2.0, radius=0.2)


def show(trace, label):
    print("=" * 72)
    print(label)
    print("=" * 72)
    print(f"point: ({trace.point.x:.6f}, {trace.point.y:.6f}), "
          f"radius scale: {trace.scale:.6f}")
    print(f"{'step':>4} {'w1':>9} {'w2':>9} {'w3':>9} {'w4':>9} {'w5':>9} "
          f"{'sum':>10} pattern")
    for s in trace.steps:
        ws = " ".join(f"{w:9.5f}" for w in s.weights)
        print(f"{s.step:>4} {ws} {s.conserved_sum:>10.6f} {s.pattern_string()}")
    print(f"termination: {trace.termination.value}")
    if trace.pattern_violations:
        for v in trace.pattern_violations:
            print(f"diagnostic: {v}")
    else:
        print("pattern diagnostics: clean")
    print()


trace_a = evolve_type_a(pentagon, steps=8)
show(trace_a, "Type A: branches 4 and 5 grow together; weight 2 responds upward")

trace_b = evolve_type_b(pentagon, steps=8)
show(trace_b, "Type B: composite(3,4) and branch 1 alternate; never simultaneous")

print("=" * 72)
print("CSV export (first lines)")
print("=" * 72)
print("\n".join(trace_csv(trace_a).splitlines()[:4]))
