"""Closed-form tangles for equal accelerations ``r_b = r_c = r``.

Two families live here:

* ``pd_*``, ``pf_*`` and ``bf_special_cases`` evaluate the published closed
  forms literally, absolute values and all. They are what the numeric
  pipeline is cross-checked against.
* ``exact_dephasing_one_tangles`` solves the 2x2 coherence block of the
  partial transpose directly. Phase damping and phase flip both leave the
  state diagonal apart from a single ``|000><111|`` coherence, so each
  one-tangle reduces to that block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import ChannelKind, check_p
from .rindler import check_r


class NoOracleCoverage(ValueError):
    """The requested point has no closed form; use the numeric pipeline."""


@dataclass(frozen=True)
class AnalyticPoint:
    r: float
    p0: float
    p1: float
    p2: float
    kind: ChannelKind

    def __post_init__(self):
        object.__setattr__(self, "r", check_r(self.r))
        for name in ("p0", "p1", "p2"):
            object.__setattr__(self, name, check_p(getattr(self, name), name))

    @property
    def ps(self) -> tuple:
        return (self.p0, self.p1, self.p2)


def _require(pt: AnalyticPoint, kind: ChannelKind) -> None:
    if pt.kind is not kind:
        raise ValueError(f"expected a {kind.value} point, got {pt.kind.value}")


def _pd_terms(pt: AnalyticPoint) -> tuple[float, float]:
    r = pt.r
    x = (1 - pt.p0) * (1 - pt.p1) * (1 - pt.p2)
    c4, s8 = math.cos(r) ** 4, math.sin(r) ** 8
    s2r = math.sin(2 * r)
    a = -2 + 2 * c4 + 2 * math.sqrt(x * c4) + 2 * math.sqrt(x * c4 + s8) + s2r**2
    b = -1 + 8 * math.sqrt(x * c4) + math.cos(4 * r) + 2 * math.sqrt(16 * x * c4 + s2r**4)
    return a, b


def pd_one_tangles(pt: AnalyticPoint) -> tuple[float, float, float]:
    """Published phase-damping one-tangles."""
    _require(pt, ChannelKind.PHASE_DAMPING)
    a, b = _pd_terms(pt)
    return a / 4, b / 16, b / 16


def pd_pi_tangle(pt: AnalyticPoint) -> float:
    """Published phase-damping pi-tangle."""
    _require(pt, ChannelKind.PHASE_DAMPING)
    a, b = _pd_terms(pt)
    return (8 * a**2 + b**2) / 384


def _pf_terms(pt: AnalyticPoint) -> tuple[float, float]:
    r = pt.r
    y = (1 - 2 * pt.p0) * (1 - 2 * pt.p1) * (1 - 2 * pt.p2)
    c2, s2 = math.cos(r) ** 2, math.sin(r) ** 2
    s2r = math.sin(2 * r)
    a = -2 + 2 * c2 * (abs(y) + c2) + 2 * math.sqrt(y * y * c2**2 + s2**4) + s2r**2
    b = (
        -4
        + 4 * abs(y) * c2
        + 4 * c2**2
        + 4 * s2**2
        + s2r**2
        + math.sqrt(16 * y * y * c2**2 + s2r**4)
    )
    return a, b


def pf_one_tangles(pt: AnalyticPoint) -> tuple[float, float, float]:
    """Published phase-flip one-tangles."""
    _require(pt, ChannelKind.PHASE_FLIP)
    a, b = _pf_terms(pt)
    return a / 4, b / 8, b / 8


def pf_pi_tangle(pt: AnalyticPoint) -> float:
    """Published phase-flip pi-tangle."""
    _require(pt, ChannelKind.PHASE_FLIP)
    a, b = _pf_terms(pt)
    # |1-2p0||1-2p1||1-2p2| in the printed form equals |y| used in _pf_terms
    return (2 * a**2 + b**2) / 96


def _bf_local(p: float) -> float:
    return -1 + 2 * math.sqrt(1 - 2 * p + 2 * p * p)


def _bf_collective(p: float) -> float:
    return (
        -1
        + 2 * math.sqrt(2) * math.sqrt((p - 1) ** 2 * p**2)
        + 2 * math.sqrt(1 - 6 * p + 16 * p**2 - 20 * p**3 + 10 * p**4)
    )


def bf_special_cases(pt: AnalyticPoint) -> tuple[float, float, float]:
    """Published bit-flip one-tangles for the inertial frame.

    Covers ``r = 0`` with a single coupled qubit (the other two parameters
    zero) or with equal parameters on all three. Anything else raises
    :class:`NoOracleCoverage`.
    """
    _require(pt, ChannelKind.BIT_FLIP)
    if pt.r != 0.0:
        raise NoOracleCoverage(f"no bit-flip closed form at r={pt.r}")
    p0, p1, p2 = pt.ps
    if p1 == 0 and p2 == 0:
        return _bf_local(p0), 1.0, 1.0
    if p0 == 0 and p2 == 0:
        return 1.0, _bf_local(p1), 1.0
    if p0 == 0 and p1 == 0:
        return 1.0, 1.0, _bf_local(p2)
    if p0 == p1 == p2:
        v = _bf_collective(p0)
        return v, v, v
    raise NoOracleCoverage(f"no bit-flip closed form for p={pt.ps}")


def bf_pi_tangle(pt: AnalyticPoint) -> float:
    """Mean squared one-tangle from :func:`bf_special_cases` (two-tangles vanish)."""
    return sum(v * v for v in bf_special_cases(pt)) / 3


def closed_form(pt: AnalyticPoint) -> tuple[tuple[float, float, float], float]:
    """Published ``(one_tangles, pi_tangle)`` for any covered point."""
    if pt.kind is ChannelKind.PHASE_DAMPING:
        return pd_one_tangles(pt), pd_pi_tangle(pt)
    if pt.kind is ChannelKind.PHASE_FLIP:
        return pf_one_tangles(pt), pf_pi_tangle(pt)
    return bf_special_cases(pt), bf_pi_tangle(pt)


def coherence_block_negativity(diag: float, coherence: float) -> float:
    """Negativity contributed by the block [[0, g], [g, d]]: sqrt(d^2 + 4 g^2) - d."""
    return math.sqrt(diag * diag + 4 * coherence * coherence) - diag


def coherence_factor(pt: AnalyticPoint) -> float:
    """Factor multiplying the ``|000><111|`` coherence after dephasing noise."""
    p0, p1, p2 = pt.ps
    if pt.kind is ChannelKind.PHASE_DAMPING:
        return math.sqrt((1 - p0) * (1 - p1) * (1 - p2))
    if pt.kind is ChannelKind.PHASE_FLIP:
        return (1 - 2 * p0) * (1 - 2 * p1) * (1 - 2 * p2)
    raise NoOracleCoverage("bit flip populates more than one coherence block")


def exact_dephasing_one_tangles(pt: AnalyticPoint) -> tuple[float, float, float]:
    """One-tangles of the dephased state from its 2x2 coherence blocks.

    Transposing qubit A moves the coherence onto ``{|100>, |011>}``, whose
    diagonal is ``(0, sin^4 r / 2)``; transposing B (or C) moves it onto a
    block with diagonal ``(sin^2 r cos^2 r / 2, 0)``.
    """
    f = coherence_factor(pt)
    c2, s2 = math.cos(pt.r) ** 2, math.sin(pt.r) ** 2
    g = 0.5 * f * c2
    na = coherence_block_negativity(0.5 * s2 * s2, g)
    nb = coherence_block_negativity(0.5 * s2 * c2, g)
    return na, nb, nb


def exact_dephasing_pi_tangle(pt: AnalyticPoint) -> float:
    return sum(v * v for v in exact_dephasing_one_tangles(pt)) / 3
