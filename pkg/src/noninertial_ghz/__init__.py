"""Entanglement of a Rindler GHZ state under phase-damping, phase-flip and bit-flip noise."""

from .channels import ChannelKind, CouplingSpec, apply_channel, kraus_single, lift
from .linalg import (
    DensityMatrix,
    dagger,
    hermitian_eigenvalues,
    kron,
    matmul,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .measures import TangleReport, negativity, one_tangles, pi_tangle, two_tangles
from .rindler import PhysicalAcceleration, ghz_pure, r_from_acceleration, rindler_ghz
from .sweep import SweepConfig, CouplingMode, run_sweep

__version__ = "0.1.0"

__all__ = [
    "ChannelKind",
    "CouplingMode",
    "CouplingSpec",
    "DensityMatrix",
    "PhysicalAcceleration",
    "SweepConfig",
    "TangleReport",
    "apply_channel",
    "dagger",
    "ghz_pure",
    "hermitian_eigenvalues",
    "kraus_single",
    "kron",
    "lift",
    "matmul",
    "negativity",
    "one_tangles",
    "partial_trace",
    "partial_transpose",
    "pi_tangle",
    "r_from_acceleration",
    "rindler_ghz",
    "run_sweep",
    "trace_norm",
    "two_tangles",
]
