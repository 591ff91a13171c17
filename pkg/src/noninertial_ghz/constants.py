"""Numerical tolerances shared by the library and its tests.

Every tolerance used anywhere in the package is defined here so that
tests and production code agree on a single value.
"""

import math

#: Largest admissible acceleration parameter (infinite acceleration).
R_MAX = math.pi / 4

#: Speed of light in vacuum, m/s.
SPEED_OF_LIGHT = 2.99792458e8

# density matrix invariants
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

# eigensolver
EIG_HERMITIAN_TOL = 1e-10
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

# channels
KRAUS_COMPLETENESS_TOL = 1e-13

#: Raw negativities in (-NEGATIVITY_FLOOR, 0) are eigensolver dust.
NEGATIVITY_FLOOR = 1e-10

#: Maximum |numeric - closed form| accepted by the oracle comparison.
ORACLE_TOL = 1e-9

#: Default threshold below which a tangle counts as dead.
ZERO_THRESHOLD = 1e-9

#: Slack allowed when validating grid values against their ranges.
GRID_TOL = 1e-12
