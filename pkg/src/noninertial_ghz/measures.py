"""Negativity-based one-tangles, two-tangles and the pi-tangle.

Negativity here is ``||rho^T_X||_1 - 1``, i.e. twice the sum of the absolute
negative eigenvalues of the partial transpose.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import NEGATIVITY_FLOOR
from .linalg import as_matrix, num_qubits, partial_trace, partial_transpose, trace_norm

#: Qubit pairs for the two-tangles, in report order AB, AC, BC.
PAIRS = ((0, 1), (0, 2), (1, 2))


def negativity(rho, partition) -> float:
    """Raw negativity of ``rho`` against the qubits in ``partition``.

    May dip below zero by eigensolver dust; see :func:`clamp_tangle`.
    """
    m = as_matrix(rho)
    n = num_qubits(m)
    part = [partition] if isinstance(partition, (int, np.integer)) else list(partition)
    if not part or len(set(part)) >= n:
        raise ValueError(f"partition {partition} must be a nonempty proper subset of {n} qubits")
    return trace_norm(partial_transpose(m, part)) - 1.0


def clamp_tangle(value: float) -> float:
    """Map numerical dust in (-NEGATIVITY_FLOOR, 0) to an exact zero."""
    if value < -NEGATIVITY_FLOOR:
        raise ValueError(f"negativity {value:.3e} is below the dust floor; input is not a state")
    return max(value, 0.0)


def _check3(rho) -> np.ndarray:
    m = as_matrix(rho)
    if num_qubits(m) != 3:
        raise ValueError(f"expected a 3-qubit state, got dimension {m.shape[0]}")
    return m


def one_tangles(rho) -> tuple[float, float, float]:
    """Raw (N_A(BC), N_B(AC), N_C(AB))."""
    m = _check3(rho)
    return tuple(negativity(m, q) for q in range(3))


def two_tangles(rho) -> tuple[float, float, float]:
    """Raw (N_AB, N_AC, N_BC), transposing the second qubit of each pair."""
    m = _check3(rho)
    return tuple(negativity(partial_trace(m, pair), 1) for pair in PAIRS)


@dataclass(frozen=True)
class TangleReport:
    """Clamped tangles for a single three-qubit state.

    ``ckw_slack`` is ``N_A(BC)^2 - N_AB^2 - N_AC^2`` and is left unclamped so
    that monogamy violations stay visible.
    """

    one_tangles: tuple
    two_tangles: tuple
    residuals: tuple
    pi_tangle: float
    ckw_slack: float

    @classmethod
    def from_raw(cls, ones, twos) -> "TangleReport":
        n1 = tuple(clamp_tangle(v) for v in ones)
        n2 = tuple(clamp_tangle(v) for v in twos)
        ab, ac, bc = n2
        raw_res = (
            n1[0] ** 2 - ab**2 - ac**2,
            n1[1] ** 2 - ab**2 - bc**2,
            n1[2] ** 2 - ac**2 - bc**2,
        )
        res = tuple(max(v, 0.0) for v in raw_res)
        return cls(n1, n2, res, sum(res) / 3.0, raw_res[0])

    def as_dict(self) -> dict:
        keys1 = ("N_A_BC", "N_B_AC", "N_C_AB")
        keys2 = ("N_AB", "N_AC", "N_BC")
        d = dict(zip(keys1, self.one_tangles))
        d.update(zip(keys2, self.two_tangles))
        d["pi"] = self.pi_tangle
        d["ckw_slack"] = self.ckw_slack
        return d


def pi_tangle(rho) -> TangleReport:
    """Full tangle report: residual entanglements, their mean and CKW slack."""
    m = _check3(rho)
    return TangleReport.from_raw(one_tangles(m), two_tangles(m))
