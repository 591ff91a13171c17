"""Single-qubit Kraus channels lifted to three qubits.

Phase damping, phase flip and bit flip, each parameterised by a decoherence
probability ``p`` in [0, 1]. Collective coupling means all three qubits see
the same channel kind with the same ``p``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import GRID_TOL
from .linalg import DensityMatrix, as_matrix, kron_all, num_qubits

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


class ChannelKind(enum.Enum):
    PHASE_DAMPING = "phase-damping"
    PHASE_FLIP = "phase-flip"
    BIT_FLIP = "bit-flip"

    @classmethod
    def parse(cls, text: str) -> "ChannelKind":
        key = text.strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown channel {text!r}; expected one of {[k.value for k in cls]}")


def check_p(p: float, name: str = "p") -> float:
    p = float(p)
    if not math.isfinite(p) or p < -GRID_TOL or p > 1 + GRID_TOL:
        raise ValueError(f"{name}={p} outside [0, 1]")
    return min(max(p, 0.0), 1.0)


@dataclass(frozen=True, eq=False)
class KrausSet:
    kind: ChannelKind
    p: float
    elements: tuple

    def completeness_error(self) -> float:
        s = sum(e.conj().T @ e for e in self.elements)
        return float(np.max(np.abs(s - np.eye(s.shape[0]))))


def kraus_single(kind: ChannelKind, p: float) -> KrausSet:
    """Single-qubit Kraus elements ``(E0, E1)`` of the given channel."""
    p = check_p(p)
    if kind is ChannelKind.PHASE_DAMPING:
        e0 = np.diag([1.0, math.sqrt(1 - p)]).astype(complex)
        e1 = np.array([[0, 0], [0, math.sqrt(p)]], dtype=complex)
    elif kind is ChannelKind.PHASE_FLIP:
        e0 = math.sqrt(1 - p) * I2
        e1 = math.sqrt(p) * Z
    elif kind is ChannelKind.BIT_FLIP:
        e0 = math.sqrt(1 - p) * I2
        e1 = math.sqrt(p) * X
    else:
        raise ValueError(f"unsupported channel kind {kind!r}")
    for e in (e0, e1):
        e.setflags(write=False)
    return KrausSet(kind, p, (e0, e1))


@dataclass(frozen=True)
class CouplingSpec:
    """Per-qubit decoherence parameters; ``None`` leaves a qubit uncoupled."""

    kind: ChannelKind
    per_qubit: tuple

    def __post_init__(self):
        slots = tuple(self.per_qubit)
        if len(slots) != 3:
            raise ValueError(f"per_qubit needs 3 slots, got {len(slots)}")
        slots = tuple(None if v is None else check_p(v, f"p{i}") for i, v in enumerate(slots))
        object.__setattr__(self, "per_qubit", slots)
        if not isinstance(self.kind, ChannelKind):
            raise ValueError(f"kind must be a ChannelKind, got {self.kind!r}")

    @classmethod
    def single(cls, kind: ChannelKind, qubit: int, p: float) -> "CouplingSpec":
        if qubit not in (0, 1, 2):
            raise ValueError(f"qubit {qubit} out of range")
        slots: list[Optional[float]] = [None, None, None]
        slots[qubit] = p
        return cls(kind, tuple(slots))

    @classmethod
    def collective(cls, kind: ChannelKind, p: float) -> "CouplingSpec":
        return cls(kind, (p, p, p))

    @property
    def coupled(self) -> list[int]:
        return [i for i, v in enumerate(self.per_qubit) if v is not None]

    def effective_p(self) -> tuple:
        """Parameters with uncoupled slots read as ``0`` (the identity channel)."""
        return tuple(0.0 if v is None else v for v in self.per_qubit)


def lift(e, qubit: int, n: int = 3) -> np.ndarray:
    """Embed a 2x2 operator on ``qubit`` of an ``n``-qubit register."""
    e = as_matrix(e)
    if e.shape != (2, 2):
        raise ValueError(f"expected a 2x2 operator, got {e.shape}")
    if not 0 <= qubit < n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    ops = [I2] * n
    ops[qubit] = e
    return kron_all(ops)


def _lifted_sets(coupling: CouplingSpec, n: int) -> list[list[np.ndarray]]:
    sets = []
    for q, p in enumerate(coupling.per_qubit):
        if p is None:
            sets.append([np.eye(2**n, dtype=complex)])
        else:
            sets.append([lift(e, q, n) for e in kraus_single(coupling.kind, p).elements])
    return sets


def apply_channel(rho, coupling: CouplingSpec) -> DensityMatrix:
    """Evolve a three-qubit state under the local channels in ``coupling``.

    Sums ``K rho K^dagger`` over the Cartesian product of the lifted Kraus
    elements, one factor per qubit; uncoupled qubits contribute only the
    identity.
    """
    m = as_matrix(rho)
    if num_qubits(m) != 3:
        raise ValueError(f"apply_channel expects 3 qubits, got dimension {m.shape[0]}")
    out = np.zeros_like(m)
    for ki, kj, kk in itertools.product(*_lifted_sets(coupling, 3)):
        k = ki @ kj @ kk
        out += k @ m @ k.conj().T
    return DensityMatrix(out)


def apply_local(rho, kind: ChannelKind, p: float, qubit: int) -> DensityMatrix:
    """Apply one single-qubit channel to ``qubit`` of an n-qubit state."""
    m = as_matrix(rho)
    n = num_qubits(m)
    out = np.zeros_like(m)
    for e in kraus_single(kind, p).elements:
        k = lift(e, qubit, n)
        out += k @ m @ k.conj().T
    return DensityMatrix(out)


def apply_sequential(rho, coupling: CouplingSpec) -> DensityMatrix:
    """Qubit-by-qubit equivalent of :func:`apply_channel`."""
    state = DensityMatrix(rho)
    for q in coupling.coupled:
        state = apply_local(state, coupling.kind, coupling.per_qubit[q], q)
    return state


def flip_composition(p: float, q: float) -> float:
    """Single parameter equivalent to a flip channel at ``p`` followed by ``q``."""
    return p + q - 2 * p * q

