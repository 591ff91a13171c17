"""GHZ state shared by one inertial and two uniformly accelerated observers.

Each accelerated Minkowski qubit maps onto a pair of Rindler modes
(region I, region II) through the fermionic single-mode dictionary

    |0>_M = cos r |0>_I |0>_II + sin r |1>_I |1>_II
    |1>_M = |1>_I |0>_II

and the unobservable region-II modes are traced out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constants import GRID_TOL, R_MAX, SPEED_OF_LIGHT
from .linalg import DensityMatrix, partial_trace


def check_r(r: float, name: str = "r") -> float:
    """Validate an acceleration parameter, returning it as a float."""
    r = float(r)
    if not math.isfinite(r) or r < -GRID_TOL or r > R_MAX + GRID_TOL:
        raise ValueError(f"{name}={r} outside [0, pi/4]")
    return min(max(r, 0.0), R_MAX)


@dataclass(frozen=True)
class PhysicalAcceleration:
    """Mode frequency ``omega`` (rad/s), proper acceleration ``a`` (m/s^2)."""

    omega: float
    a: float
    c: float = SPEED_OF_LIGHT

    def __post_init__(self):
        for name in ("omega", "a", "c"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v}")


def r_from_acceleration(p: PhysicalAcceleration) -> float:
    """Acceleration parameter from cos r = (exp(-2 pi omega c / a) + 1)^(-1/2)."""
    x = math.exp(-2.0 * math.pi * p.omega * p.c / p.a)
    return math.acos((x + 1.0) ** -0.5)


def ghz_pure() -> DensityMatrix:
    """(|000> + |111>)(<000| + <111|) / 2."""
    psi = np.zeros(8, dtype=complex)
    psi[0] = psi[7] = 1 / math.sqrt(2)
    return DensityMatrix(np.outer(psi, psi.conj()))


def minkowski_to_rindler(r: float) -> np.ndarray:
    """4x2 isometry sending a Minkowski qubit to its (I, II) mode pair.

    Column ``k`` holds the two-mode image of ``|k>_M`` with region I as the
    more significant index.
    """
    c, s = math.cos(r), math.sin(r)
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = c  # |0,0>
    v[3, 0] = s  # |1,1>
    v[2, 1] = 1.0  # |1,0>
    return v


def five_mode_state(rb: float, rc: float) -> np.ndarray:
    """Pure state vector over modes (A, B_I, B_II, C_I, C_II), length 32."""
    rb, rc = check_r(rb, "rb"), check_r(rc, "rc")
    vb, vc = minkowski_to_rindler(rb), minkowski_to_rindler(rc)
    e0 = np.array([1.0, 0.0])
    e1 = np.array([0.0, 1.0])
    psi = np.kron(np.kron(e0, vb[:, 0]), vc[:, 0]) + np.kron(np.kron(e1, vb[:, 1]), vc[:, 1])
    return psi / math.sqrt(2)


def rindler_ghz(rb: float, rc: float | None = None) -> DensityMatrix:
    """Three-qubit state (A, B_I, C_I) after tracing out region II.

    Built from the explicit five-mode pure state; ``rc`` defaults to ``rb``.
    """
    if rc is None:
        rc = rb
    psi = five_mode_state(rb, rc)
    return partial_trace(np.outer(psi, psi.conj()), keep=[0, 1, 3])


def rindler_ghz_closed_form(rb: float, rc: float | None = None) -> DensityMatrix:
    """Same state as :func:`rindler_ghz`, written down entry by entry."""
    if rc is None:
        rc = rb
    rb, rc = check_r(rb, "rb"), check_r(rc, "rc")
    cb, sb, cc, sc = math.cos(rb), math.sin(rb), math.cos(rc), math.sin(rc)
    m = np.zeros((8, 8), dtype=complex)
    m[0, 0] = cb**2 * cc**2
    m[1, 1] = cb**2 * sc**2
    m[2, 2] = sb**2 * cc**2
    m[3, 3] = sb**2 * sc**2
    m[7, 7] = 1.0
    m[0, 7] = m[7, 0] = cb * cc
    return DensityMatrix(m / 2)


@lru_cache(maxsize=256)
def cached_rindler_ghz(rb: float, rc: float) -> DensityMatrix:
    # DensityMatrix is read-only, so sharing cached instances is safe
    return rindler_ghz(rb, rc)
