"""Numerical search for Cerf-Adami violations over measurement settings.

The search space is three angles in the x-z plane on [0, pi); for the
singlet family that planar restriction is lossless.  The grid evaluator
exploits the fact that the LHS depends only on the three pairwise mutual
informations, so it computes the resolution^2 pairwise MI table once and
assembles the resolution^3 LHS cube from it; the reported trace is still
one entry per grid cell in lexicographic order, exactly as if every cell
had been evaluated independently.  Local refinement is a derivative-free
coordinate search (the LHS has absolute-value kinks, so no gradients).

Everything here is deterministic: identical inputs give identical results,
including trace order, with ties broken by the lexicographically smallest
angle triple.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import mutual_entropy
from .errors import MonotonicityViolatedError, ResolutionTooSmallError, ValidationError
from .inequalities import SATISFIED_ATOL
from .quantum import DensityMatrix, MeasurementSettings, cerf_adami_quantum, measure_pair, werner_state

GRID_MIN_RESOLUTION = 8
WERNER_MIN_RESOLUTION = 32
WERNER_MONOTONE_ATOL = 1e-6

Trace = tuple[tuple[tuple[float, float, float], float], ...]


@dataclass(frozen=True)
class SearchResult:
    """Best settings found, the LHS there, and the full evaluation trace."""

    best_settings: MeasurementSettings
    best_lhs: float
    margin: float
    trace: Trace
    grid_resolution: int
    refined: bool

    @property
    def violation_found(self) -> bool:
        return self.best_lhs > 1.0 + SATISFIED_ATOL

    def to_dict(self, include_trace: bool = False) -> dict:
        payload = {
            "best_settings": self.best_settings.to_dict(),
            "best_lhs": self.best_lhs,
            "margin": self.margin,
            "grid_resolution": self.grid_resolution,
            "refined": self.refined,
            "violation_found": self.violation_found,
        }
        if include_trace:
            payload["trace"] = [[list(angles), lhs] for angles, lhs in self.trace]
        return payload


def _lhs_at(rho: DensityMatrix, angles: tuple[float, float, float]) -> float:
    return cerf_adami_quantum(rho, MeasurementSettings(angles)).lhs


def grid_search(rho: DensityMatrix, resolution: int) -> SearchResult:
    """Evaluate the LHS on the full 3-angle grid over [0, pi)^3.

    Grid angles are i * pi/resolution.  Deterministic; the winner under
    ties is the lexicographically smallest (theta_A, theta_B, theta_C).
    """
    resolution = int(resolution)
    if resolution < GRID_MIN_RESOLUTION:
        raise ResolutionTooSmallError(f"resolution must be >= {GRID_MIN_RESOLUTION}, got {resolution}")
    step = math.pi / resolution
    angles = [i * step for i in range(resolution)]

    mi = np.empty((resolution, resolution))
    for i in range(resolution):
        for j in range(i, resolution):
            value = mutual_entropy(measure_pair(rho, angles[i], angles[j]), 0, 1).value
            mi[i, j] = value
            mi[j, i] = value

    # lhs[i,j,k] = |MI(i,j) - MI(i,k)| + MI(j,k)
    cube = np.abs(mi[:, :, None] - mi[:, None, :]) + mi[None, :, :]
    flat = cube.ravel()
    best_index = int(np.argmax(flat))  # first occurrence: lexicographic tie-break
    best = float(flat[best_index])
    bi, bj, bk = np.unravel_index(best_index, cube.shape)

    trace = tuple(
        ((angles[i], angles[j], angles[k]), float(cube[i, j, k]))
        for i, j, k in np.ndindex(cube.shape)
    )
    return SearchResult(
        best_settings=MeasurementSettings((angles[bi], angles[bj], angles[bk])),
        best_lhs=best,
        margin=best - 1.0,
        trace=trace,
        grid_resolution=resolution,
        refined=False,
    )


def refine(
    rho: DensityMatrix,
    start: MeasurementSettings,
    tol: float = 1e-6,
    resolution: int = 32,
) -> SearchResult:
    """Derivative-free local ascent from ``start``.

    Coordinate search with shrinking step: the initial step is
    pi/resolution (the spacing of the grid the start came from), each
    coordinate is probed in both directions, strict improvements are
    accepted, and the step halves when a full sweep finds none.  Terminates
    when the step drops below ``tol``, so it always converges, and never
    returns less than the start value.
    """
    tol = float(tol)
    if tol <= 0.0:
        raise ValidationError(f"tol must be positive, got {tol}")
    resolution = int(resolution)
    if resolution < 1:
        raise ValidationError(f"resolution must be >= 1, got {resolution}")

    step = math.pi / resolution
    current = list(start.angles)
    current_lhs = _lhs_at(rho, tuple(current))
    trace = [(tuple(current), current_lhs)]

    while step >= tol:
        improved = True
        while improved:
            improved = False
            for axis in range(3):
                for direction in (step, -step):
                    candidate = list(current)
                    candidate[axis] = (candidate[axis] + direction) % math.pi
                    lhs = _lhs_at(rho, tuple(candidate))
                    trace.append((tuple(candidate), lhs))
                    if lhs > current_lhs:
                        current, current_lhs = candidate, lhs
                        improved = True
        step /= 2.0

    return SearchResult(
        best_settings=MeasurementSettings(tuple(current)),
        best_lhs=current_lhs,
        margin=current_lhs - 1.0,
        trace=tuple(trace),
        grid_resolution=resolution,
        refined=True,
    )


def grid_refine(rho: DensityMatrix, resolution: int, tol: float = 1e-6) -> SearchResult:
    """Grid search followed by refinement from the grid optimum."""
    coarse = grid_search(rho, resolution)
    fine = refine(rho, coarse.best_settings, tol=tol, resolution=resolution)
    best = max(coarse.best_lhs, fine.best_lhs)  # refine is monotone; max is defensive
    winner = fine if fine.best_lhs >= coarse.best_lhs else coarse
    return SearchResult(
        best_settings=winner.best_settings,
        best_lhs=best,
        margin=best - 1.0,
        trace=coarse.trace + fine.trace,
        grid_resolution=coarse.grid_resolution,
        refined=True,
    )


def werner_threshold(resolution: int = 32, tol: float = 1e-3) -> float:
    """Largest Werner parameter p whose maximal LHS stays within the bound.

    Bisects p in [0, 1] with grid_refine as the evaluator.  Monotonicity of
    the maximal LHS in p is assumed and checked on the sampled points;
    a decrease beyond 1e-6 raises MonotonicityViolatedError.
    """
    resolution = int(resolution)
    if resolution < WERNER_MIN_RESOLUTION:
        raise ResolutionTooSmallError(f"resolution must be >= {WERNER_MIN_RESOLUTION}, got {resolution}")
    tol = float(tol)
    if tol <= 0.0:
        raise ValidationError(f"tol must be positive, got {tol}")

    samples: list[tuple[float, float]] = []

    def max_lhs(p: float) -> float:
        value = grid_refine(werner_state(p), resolution).best_lhs
        samples.append((p, value))
        return value

    def check_monotone() -> None:
        ordered = sorted(samples)
        for (p0, v0), (p1, v1) in zip(ordered, ordered[1:]):
            if v1 < v0 - WERNER_MONOTONE_ATOL:
                raise MonotonicityViolatedError(
                    f"max LHS decreased from {v0} at p={p0} to {v1} at p={p1}"
                )

    if max_lhs(1.0) <= 1.0 + SATISFIED_ATOL:
        return 1.0  # no violation anywhere on the dial
    max_lhs(0.0)
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if max_lhs(mid) > 1.0 + SATISFIED_ATOL:
            hi = mid
        else:
            lo = mid
    check_monotone()
    return lo
