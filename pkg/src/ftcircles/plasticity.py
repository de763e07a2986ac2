"""Dynamic and geometric plasticity of n weighted circles.

For n >= 4 the inverse problem is underdetermined: the equilibrium
constrains the weight vector to an (n-2)-dimensional cone, so the weights
co-vary when some of them are treated as free parameters under a constant
total. The machinery here expresses that co-variation three ways that agree
with each other:

* ``cosine_system_weights``: minimum-norm member of the solution family of
  the weighted cosine equations plus the unit-sum constraint;
* ``plasticity_4`` / ``plasticity_n``: closed-form ratios
  ``(w2/w1)`` and ``(w3/w1)`` driven by the free ratios ``w_j/w_1``;
* ``transfer_coefficients``: the affine map from free weights to the first
  three weights under the constant-sum closure.

Sub-triangle weight ratios are quotients of sines of ray angles. They are
computed here from *signed* sines of azimuth differences, which reproduces
the textbook unsigned quotients (with their explicit minus sign on the
ratio whose third ray must be reflected through the apex) whenever the ray
layout satisfies the interior/exterior triangle hypotheses, and remains an
exact identity for every other floating layout.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    GeometryPreconditionViolated,
    MissingRatio,
    PreconditionViolated,
    ShiftedConfigInvalid,
    SingularSystem,
    InvalidConfiguration,
)
from .geometry import Circle, Configuration, Point2, azimuths_at
from .solver import SolveResult, classify_case, solve

_MIN_SINE = 1e-12


def _wrap_angle(x: float) -> float:
    """Wrap to (-pi, pi]."""
    y = math.fmod(x + math.pi, 2.0 * math.pi)
    if y <= 0.0:
        y += 2.0 * math.pi
    return y - math.pi


class SectorAngles:
    """Pairwise ray angles at the branching point.

    Holds the ray azimuths and exposes the unsigned angle matrix plus signed
    sines of azimuth differences. Built from geometry
    (:meth:`from_result`, :meth:`from_points`) or reconstructed from an
    unsigned angle matrix, which determines the layout up to rotation and
    reflection; every ratio used downstream is invariant to both.
    """

    __slots__ = ("n", "azimuths")

    def __init__(self, azimuths: Sequence[float]):
        az = np.asarray(azimuths, dtype=float)
        if az.ndim != 1 or az.size < 3:
            raise InvalidConfiguration("need at least 3 ray azimuths")
        self.n = int(az.size)
        self.azimuths = az
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if abs(_wrap_angle(az[i] - az[j])) < 1e-9:
                    raise InvalidConfiguration(f"rays {i} and {j} coincide")

    @classmethod
    def from_result(cls, result: SolveResult) -> "SectorAngles":
        if not result.case.is_floating:
            raise PreconditionViolated("sector angles require a floating solution")
        return cls.from_points(result.point, result.projections)

    @classmethod
    def from_points(cls, apex: Point2, points: Sequence[Point2]) -> "SectorAngles":
        return cls(azimuths_at(apex, points))

    @classmethod
    def from_matrix(cls, matrix) -> "SectorAngles":
        """Reconstruct a ray layout realizing the unsigned angle matrix.

        Raises SingularSystem when no planar layout reproduces the matrix.
        """
        m = np.asarray(matrix, dtype=float)
        n = m.shape[0]
        if m.shape != (n, n) or n < 3:
            raise InvalidConfiguration(f"angle matrix must be square with n >= 3, got {m.shape}")
        if np.max(np.abs(m - m.T)) > 1e-9:
            raise SingularSystem("angle matrix is not symmetric")
        az = np.zeros(n)
        az[1] = m[0, 1]
        for j in range(2, n):
            best = None
            for sign in (1.0, -1.0):
                cand = sign * m[0, j]
                err = max(
                    abs(abs(_wrap_angle(cand - az[i])) - m[i, j]) for i in range(1, j)
                )
                if best is None or err < best[0]:
                    best = (err, cand)
            if best[0] > 1e-6:
                raise SingularSystem(
                    f"angle matrix cannot be realized by plane rays (ray {j}, err {best[0]:.2e})"
                )
            az[j] = best[1]
        return cls(az)

    def angle(self, i: int, j: int) -> float:
        """Unsigned angle in [0, pi] between rays i and j."""
        return abs(_wrap_angle(self.azimuths[j] - self.azimuths[i]))

    def matrix(self) -> np.ndarray:
        d = self.azimuths[None, :] - self.azimuths[:, None]
        return np.abs(np.arctan2(np.sin(d), np.cos(d)))

    def signed_sin(self, i: int, j: int) -> float:
        """sin of the signed rotation from ray i to ray j."""
        return math.sin(self.azimuths[j] - self.azimuths[i])

    def cyclic_order(self) -> tuple[int, ...]:
        wrapped = np.array([_wrap_angle(a) for a in self.azimuths])
        return tuple(int(i) for i in np.argsort(wrapped, kind="stable"))

    def sectors(self) -> tuple[float, ...]:
        """Consecutive sector angles aligned with :meth:`cyclic_order`."""
        order = self.cyclic_order()
        wrapped = sorted(_wrap_angle(a) for a in self.azimuths)
        out = [wrapped[k + 1] - wrapped[k] for k in range(len(order) - 1)]
        out.append(2.0 * math.pi - (wrapped[-1] - wrapped[0]))
        return tuple(out)


@dataclass(frozen=True)
class TriangleRatios:
    """Sub-triangle weight ratios entering the plasticity equations.

    r2, r3: ``(w2/w1)`` and ``(w3/w1)`` for the three-ray problem on rays
    {1, 2, 3}. q3[j], q2[j]: ``(w1/wj)`` for the three-ray problems on rays
    {1, 3, j} and {1, 2, j}. A negative value means the third ray must be
    reflected through the apex for that sub-triangle to balance. Labels are
    0-based positions in the ray layout.
    """

    n: int
    r2: float
    r3: float
    q3: Mapping[int, float]
    q2: Mapping[int, float]

    @classmethod
    def from_angles(cls, angles: SectorAngles) -> "TriangleRatios":
        n = angles.n
        if n < 4:
            raise InvalidConfiguration("triangle ratios need n >= 4 rays")
        s = angles.signed_sin
        for i, j in ((2, 1), (1, 2), (2, 0), (1, 0)):
            if abs(s(i, j)) < _MIN_SINE:
                raise GeometryPreconditionViolated(f"rays {i} and {j} are collinear")
        r2 = -s(2, 0) / s(2, 1)
        r3 = -s(1, 0) / s(1, 2)
        q3 = {j: -s(2, j) / s(2, 0) for j in range(3, n)}
        q2 = {j: -s(1, j) / s(1, 0) for j in range(3, n)}
        return cls(n=n, r2=r2, r3=r3, q3=q3, q2=q2)


@dataclass(frozen=True)
class PlasticityCoefficients:
    """Affine response of the first three weights to the free weights.

    ``w_i = sum_j a[i, j] * w_free_j + const[i]`` for i in {0, 1, 2}, where
    the constant column is the three-ray solution scaled to the common
    total. Columns of ``a`` sum to -1, so the full weight sum is conserved
    exactly.
    """

    n: int
    total: float
    a: np.ndarray
    const: np.ndarray

    def free_labels(self) -> range:
        return range(3, self.n)

    def apply(self, free_weights: Sequence[float]) -> np.ndarray:
        """Full weight vector for the given free weights."""
        free = np.asarray(free_weights, dtype=float)
        if free.shape != (self.n - 3,):
            raise InvalidConfiguration(
                f"expected {self.n - 3} free weights, got {free.shape}"
            )
        w123 = self.a @ free + self.const
        return np.concatenate([w123, free])


def transfer_coefficients(
    ratios: TriangleRatios, n: int, total: float = 1.0
) -> PlasticityCoefficients:
    """Coefficients of the constant-sum weight transfer for n rays.

    a[0, j] = (q3[j]*r2 + q2[j]*r3 - 1) / (1 + r2 + r3)
    a[1, j] = r2 * (a[0, j] - q3[j])
    a[2, j] = r3 * (a[0, j] - q2[j])
    const   = total / (1 + r2 + r3) * (1, r2, r3)

    Raises MissingRatio if a required sub-triangle ratio is absent and
    SingularSystem when the three-ray solution itself degenerates.
    """
    if n < 4:
        raise InvalidConfiguration("transfer coefficients need n >= 4")
    den = 1.0 + ratios.r2 + ratios.r3
    if abs(den) < _MIN_SINE:
        raise SingularSystem("three-ray subproblem has zero total weight")
    a = np.zeros((3, n - 3))
    for k, j in enumerate(range(3, n)):
        if j not in ratios.q3 or j not in ratios.q2:
            raise MissingRatio(f"missing sub-triangle ratios for ray {j}")
        a1 = (ratios.q3[j] * ratios.r2 + ratios.q2[j] * ratios.r3 - 1.0) / den
        a[0, k] = a1
        a[1, k] = ratios.r2 * (a1 - ratios.q3[j])
        a[2, k] = ratios.r3 * (a1 - ratios.q2[j])
    const = (total / den) * np.array([1.0, ratios.r2, ratios.r3])
    return PlasticityCoefficients(n=n, total=float(total), a=a, const=const)


def transfer_residuals(coeffs: PlasticityCoefficients, weights: Sequence[float]) -> np.ndarray:
    """Discrepancy of a weight vector against the transfer map.

    Zero (to roundoff) exactly when the weights are an equilibrium vector
    for the ray layout with the coefficients' total. Lets callers check the
    equal-sum hypothesis on arbitrary weight data instead of assuming it.
    """
    w = np.asarray(weights, dtype=float)
    predicted = coeffs.apply(w[3:])
    return w[:3] - predicted[:3]


def cosine_residuals(angles: SectorAngles, weights: Sequence[float]) -> np.ndarray:
    """Residuals ``w_i + sum_{j!=i} w_j cos(angle_ij)`` of the cosine system."""
    w = np.asarray(weights, dtype=float)
    g = np.cos(angles.matrix())
    np.fill_diagonal(g, 1.0)
    return g @ w


def sine_residuals(angles: SectorAngles, weights: Sequence[float]) -> np.ndarray:
    """Signed sine residuals ``sum_i w_i sin(theta_i - theta_j)`` per ray j.

    These are the cross products of the equilibrium with each ray direction;
    with rays laid out per the interior/exterior hypotheses they reduce
    term-by-term to the displayed weighted sine equations.
    """
    w = np.asarray(weights, dtype=float)
    d = angles.azimuths[None, :] - angles.azimuths[:, None]
    return np.sin(d) @ w


def cosine_system_weights(angles: SectorAngles, atol: float = 1e-8) -> np.ndarray:
    """Solve the weighted cosine equations plus the unit-sum constraint.

    For n = 3 the solution is unique. For n >= 4 the system is rank
    deficient (that deficiency is the dynamic plasticity itself) and the
    minimum-norm member of the solution family is returned; any member
    reproduces the full family through :func:`plasticity_n` given its own
    free ratios. Raises SingularSystem when no weight vector satisfies the
    system, and warns when the returned member leaves the positive cone.
    """
    n = angles.n
    g = np.cos(angles.matrix())
    np.fill_diagonal(g, 1.0)
    a = np.vstack([g, np.ones(n)])
    b = np.zeros(n + 1)
    b[-1] = 1.0
    w, *_ = np.linalg.lstsq(a, b, rcond=None)
    if np.max(np.abs(g @ w)) > atol or abs(w.sum() - 1.0) > atol:
        raise SingularSystem("angles admit no unit-sum equilibrium weights")
    if np.any(w <= 0.0):
        warnings.warn(
            "cosine system solution has non-positive components; the angle "
            "data is not consistent with an interior point at these weights",
            RuntimeWarning,
            stacklevel=2,
        )
    return w


def plasticity_4(
    angles: SectorAngles,
    w4_over_w1: float,
    total: float = 1.0,
    strict: bool = False,
) -> np.ndarray:
    """Four-ray dynamic plasticity closed with a constant sum.

    (w2/w1) = (w2/w1)_123 * [1 - (w4/w1) * (w1/w4)_134]
    (w3/w1) = (w3/w1)_123 * [1 - (w4/w1) * (w1/w4)_124]

    ``strict=True`` additionally enforces the interior/exterior triangle
    hypotheses of the four-ray statement via
    :func:`plasticity4_preconditions`.
    """
    if angles.n != 4:
        raise InvalidConfiguration(f"plasticity_4 needs 4 rays, got {angles.n}")
    if strict and not plasticity4_preconditions(angles):
        raise GeometryPreconditionViolated(
            "ray layout violates the interior/exterior triangle hypotheses"
        )
    return plasticity_n(angles, [w4_over_w1], total=total)


def plasticity_n(
    angles: SectorAngles,
    free_ratios: Sequence[float],
    total: float = 1.0,
    strict: bool = False,
) -> np.ndarray:
    """General-n dynamic plasticity driven by the free ratios ``w_j/w_1``.

    (w2/w1) = (w2/w1)_123 * [1 - sum_j (wj/w1) * (w1/wj)_13j]
    (w3/w1) = (w3/w1)_123 * [1 - sum_j (wj/w1) * (w1/wj)_12j]

    The free ratios run over rays 4..n (0-based labels 3..n-1). The weight
    scale is fixed by the constant total.
    """
    n = angles.n
    free = np.asarray(free_ratios, dtype=float)
    if free.shape != (n - 3,):
        raise InvalidConfiguration(f"expected {n - 3} free ratios, got {free.shape}")
    if strict and n == 4 and not plasticity4_preconditions(angles):
        raise GeometryPreconditionViolated(
            "ray layout violates the interior/exterior triangle hypotheses"
        )
    ratios = TriangleRatios.from_angles(angles)
    w2r = ratios.r2 * (1.0 - sum(free[k] * ratios.q3[3 + k] for k in range(n - 3)))
    w3r = ratios.r3 * (1.0 - sum(free[k] * ratios.q2[3 + k] for k in range(n - 3)))
    den = 1.0 + w2r + w3r + float(free.sum())
    if abs(den) < _MIN_SINE:
        raise SingularSystem("weight ratios sum to zero; no finite scale exists")
    w1 = total / den
    return np.concatenate([[w1, w1 * w2r, w1 * w3r], w1 * free])


def plasticity4_preconditions(angles: SectorAngles) -> bool:
    """Interior/exterior triangle hypotheses for the four-ray statement.

    True when, with rays labeled cyclically 1, 2, 3, 4, the apex lies inside
    triangles {1,2,3} and {1,2,4} and outside triangle {1,3,4}. Expressed in
    consecutive sector angles b1..b4 (from ray 1) this is b1 < pi, b2 < pi,
    b4 < pi, b2 + b3 < pi and b3 + b4 < pi.
    """
    if angles.n != 4:
        raise InvalidConfiguration("preconditions are defined for 4 rays")
    order = angles.cyclic_order()
    pos = {label: k for k, label in enumerate(order)}
    seq = [(pos[label] - pos[0]) % 4 for label in range(4)]
    if seq == [0, 1, 2, 3]:
        ccw = True
    elif seq == [0, 3, 2, 1]:
        ccw = False
    else:
        return False  # labels do not run around the apex: crossed quadrilateral
    az = angles.azimuths if ccw else -angles.azimuths
    b = []
    for k in range(4):
        d = _wrap_angle(az[(k + 1) % 4] - az[k])
        if d <= 0:
            d += 2.0 * math.pi
        b.append(d)
    b1, b2, b3, b4 = b
    return (
        b1 < math.pi
        and b2 < math.pi
        and b4 < math.pi
        and b2 + b3 < math.pi
        and b3 + b4 < math.pi
    )


def shifted_configuration(
    config: Configuration,
    radial_shifts: Sequence[float],
    new_radii: Sequence[float] | None = None,
    base_point: Point2 | None = None,
) -> Configuration:
    """Translate every center along its ray from the solution point.

    Positive shifts move centers away from the point. Raises
    ShiftedConfigInvalid when the result overlaps, loses the floating
    condition, or swallows the base point into a disk.
    """
    shifts = np.asarray(radial_shifts, dtype=float)
    if shifts.shape != (config.n,):
        raise ShiftedConfigInvalid(f"expected {config.n} shifts, got {shifts.shape}")
    if base_point is None:
        base = solve(config)
        if not base.case.is_floating:
            raise PreconditionViolated("geometric plasticity requires a floating instance")
        base_point = base.point
    p = base_point.as_array()
    radii = config.radii_array() if new_radii is None else np.asarray(new_radii, float)
    circles = []
    for i, c in enumerate(config.circles):
        v = c.center.as_array() - p
        dist = float(np.linalg.norm(v))
        new_dist = dist + shifts[i]
        if new_dist <= radii[i]:
            raise ShiftedConfigInvalid(
                f"shift {i} places the solution point inside or on the disk"
            )
        center = p + (v / dist) * new_dist
        circles.append(Circle(Point2.from_array(center), float(radii[i])))
    try:
        shifted = Configuration(
            tuple(circles), config.weights, config.tolerance, config.distance_mode
        )
    except InvalidConfiguration as exc:
        raise ShiftedConfigInvalid(f"shifted circles overlap: {exc}") from exc
    if not classify_case(shifted).is_floating:
        raise ShiftedConfigInvalid("shifted configuration loses the floating condition")
    return shifted


def verify_geometric_plasticity(
    config: Configuration,
    radial_shifts: Sequence[float],
    new_radii: Sequence[float] | None = None,
    point_tol: float = 1e-7,
) -> bool:
    """Check that radial center shifts leave the solution point in place.

    Solves the configuration, rebuilds it with every center translated along
    its ray from the solution point (optionally with new radii), re-solves,
    and reports whether the two points agree within ``point_tol``.
    """
    base = solve(config)
    if not base.case.is_floating:
        raise PreconditionViolated("geometric plasticity requires a floating instance")
    shifted = shifted_configuration(config, radial_shifts, new_radii, base.point)
    moved = solve(shifted)
    return moved.point.distance_to(base.point) < point_tol
