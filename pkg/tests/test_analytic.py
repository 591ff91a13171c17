import itertools
import math

import numpy as np
import pytest

from noninertial_ghz.analytic import (
    AnalyticPoint,
    NoOracleCoverage,
    bf_special_cases,
    closed_form,
    exact_dephasing_one_tangles,
    exact_dephasing_pi_tangle,
    pd_one_tangles,
    pd_pi_tangle,
    pf_one_tangles,
    pf_pi_tangle,
)
from noninertial_ghz.channels import ChannelKind, CouplingSpec, apply_channel
from noninertial_ghz.measures import pi_tangle
from noninertial_ghz.rindler import rindler_ghz

PD, PF, BF = ChannelKind.PHASE_DAMPING, ChannelKind.PHASE_FLIP, ChannelKind.BIT_FLIP
R_GRID = (0.0, math.pi / 12, math.pi / 6, math.pi / 4)
P_GRID = [round(0.1 * i, 12) for i in range(11)]

# Printed closed forms evaluated to 30 digits with mpmath.
PRINTED_PD_PI6 = (0.720049830587259233754007532199, 0.667791152401655676545757173998)
PRINTED_PD_PI4 = 0.404508497187473712051146708591
PRINTED_PD_PI_TANGLE_PI6 = 0.470120601660201119773285666378


def pt(kind, r, p0=0.0, p1=0.0, p2=0.0):
    return AnalyticPoint(r, p0, p1, p2, kind)


def test_pd_inertial_reduces_to_square_root():
    for ps in itertools.product((0.0, 0.3, 0.7, 1.0), repeat=3):
        expected = math.sqrt((1 - ps[0]) * (1 - ps[1]) * (1 - ps[2]))
        np.testing.assert_allclose(pd_one_tangles(pt(PD, 0.0, *ps)), expected, atol=1e-15)


def test_pd_printed_values():
    na, nb, nc = pd_one_tangles(pt(PD, math.pi / 6))
    assert na == pytest.approx(PRINTED_PD_PI6[0], abs=1e-13)
    assert nb == nc == pytest.approx(PRINTED_PD_PI6[1], abs=1e-13)
    np.testing.assert_allclose(pd_one_tangles(pt(PD, math.pi / 4)), PRINTED_PD_PI4, atol=1e-13)
    assert round(PRINTED_PD_PI4, 1) == 0.4


def test_pd_pi_tangle():
    for q in range(3):
        for p in P_GRID:
            ps = [0.0, 0.0, 0.0]
            ps[q] = p
            assert pd_pi_tangle(pt(PD, 0.0, *ps)) == pytest.approx(1 - p, abs=1e-14)
    assert pd_pi_tangle(pt(PD, 0.0)) == pytest.approx(1.0, abs=1e-15)
    assert pd_pi_tangle(pt(PD, math.pi / 6)) == pytest.approx(PRINTED_PD_PI_TANGLE_PI6, abs=1e-13)
    na, nb = PRINTED_PD_PI6
    assert PRINTED_PD_PI_TANGLE_PI6 == pytest.approx((na**2 + 2 * nb**2) / 3, abs=1e-15)


def test_pf_examples():
    for ps in itertools.product((0.0, 0.2, 0.5, 0.9), repeat=3):
        expected = abs((1 - 2 * ps[0]) * (1 - 2 * ps[1]) * (1 - 2 * ps[2]))
        np.testing.assert_allclose(pf_one_tangles(pt(PF, 0.0, *ps)), expected, atol=1e-15)
    for r in R_GRID:
        for q in range(3):
            ps = [0.0, 0.0, 0.0]
            ps[q] = 0.5
            np.testing.assert_allclose(pf_one_tangles(pt(PF, r, *ps)), 0.0, atol=1e-15)
            assert pf_pi_tangle(pt(PF, r, *ps)) == pytest.approx(0.0, abs=1e-15)
    np.testing.assert_allclose(pf_one_tangles(pt(PF, 0.0, 0.25)), 0.5, atol=1e-15)


def test_pf_pi_tangle_endpoints():
    assert pf_pi_tangle(pt(PF, 0.0)) == pytest.approx(1.0, abs=1e-15)
    assert pf_pi_tangle(pt(PF, 0.0, 1, 1, 1)) == pytest.approx(1.0, abs=1e-15)
    numeric = pi_tangle(apply_channel(rindler_ghz(0.0), CouplingSpec.collective(PF, 1.0)))
    assert numeric.pi_tangle == pytest.approx(1.0, abs=1e-12)


def test_pf_pi_tangle_is_mean_square():
    for r in R_GRID:
        for p in P_GRID:
            x = pt(PF, r, p, 0.3, 0.1)
            assert pf_pi_tangle(x) == pytest.approx(sum(v * v for v in pf_one_tangles(x)) / 3, abs=1e-14)


def test_bf_special_cases():
    np.testing.assert_allclose(bf_special_cases(pt(BF, 0.0, 0.5)), (math.sqrt(2) - 1, 1, 1), atol=1e-7)
    np.testing.assert_allclose(bf_special_cases(pt(BF, 0.0, 1.0)), (1, 1, 1), atol=1e-15)
    np.testing.assert_allclose(bf_special_cases(pt(BF, 0.0, 0.0, 0.3)), (1, -1 + 2 * math.sqrt(0.58), 1))
    np.testing.assert_allclose(bf_special_cases(pt(BF, 0.0, 0.0, 0.0, 0.3)), (1, 1, -1 + 2 * math.sqrt(0.58)))
    np.testing.assert_allclose(bf_special_cases(pt(BF, 0.0, 0.5, 0.5, 0.5)), 0.4142136, atol=1e-7)


@pytest.mark.parametrize("args", [(math.pi / 6, 0.2), (0.0, 0.2, 0.3), (0.0, 0.1, 0.2, 0.3)])
def test_bf_uncovered(args):
    with pytest.raises(NoOracleCoverage):
        bf_special_cases(pt(BF, *args))


def test_wrong_kind_rejected():
    with pytest.raises(ValueError):
        pd_one_tangles(pt(PF, 0.1))
    with pytest.raises(ValueError):
        pf_pi_tangle(pt(PD, 0.1))
    with pytest.raises(ValueError):
        bf_special_cases(pt(PD, 0.0))


def test_point_validation():
    with pytest.raises(ValueError):
        AnalyticPoint(1.0, 0, 0, 0, PD)
    with pytest.raises(ValueError):
        AnalyticPoint(0.1, 0, 2, 0, PD)


def test_pf_symmetric_under_p_reflection():
    for r in R_GRID:
        for p in P_GRID:
            for q in range(3):
                a = [0.2, 0.4, 0.1]
                b = list(a)
                a[q], b[q] = p, 1 - p
                np.testing.assert_allclose(pf_one_tangles(pt(PF, r, *a)), pf_one_tangles(pt(PF, r, *b)), atol=1e-14)


def test_pd_permutation_invariant():
    for r in R_GRID:
        for ps in itertools.product((0.0, 0.25, 0.6), repeat=3):
            ref = pd_one_tangles(pt(PD, r, *ps))
            for perm in itertools.permutations(ps):
                np.testing.assert_allclose(pd_one_tangles(pt(PD, r, *perm)), ref, atol=1e-14)


@pytest.mark.parametrize("kind", [PD, PF])
def test_printed_forms_match_numeric_in_inertial_frame(kind):
    for p in [round(0.01 * i, 12) for i in range(101)]:
        for ps in ((p, 0, 0), (0, p, 0), (p, p, p)):
            rep = pi_tangle(apply_channel(rindler_ghz(0.0), CouplingSpec(kind, ps)))
            ones, pi = closed_form(pt(kind, 0.0, *ps))
            np.testing.assert_allclose(rep.one_tangles, ones, atol=1e-9)
            assert rep.pi_tangle == pytest.approx(pi, abs=1e-9)


@pytest.mark.parametrize("kind", [PD, PF])
def test_exact_block_forms_match_numeric_everywhere(kind):
    for r in R_GRID:
        for p in [round(0.01 * i, 12) for i in range(101)]:
            for ps in ((p, 0, 0), (0, p, 0), (0, 0, p), (p, p, p), (p, 0.3, 0.8)):
                rep = pi_tangle(apply_channel(rindler_ghz(r), CouplingSpec(kind, ps)))
                x = pt(kind, r, *ps)
                np.testing.assert_allclose(rep.one_tangles, exact_dephasing_one_tangles(x), atol=1e-12)
                assert rep.pi_tangle == pytest.approx(exact_dephasing_pi_tangle(x), abs=1e-12)


def test_exact_block_forms_reference_values():
    na, nb, nc = exact_dephasing_one_tangles(pt(PD, math.pi / 6))
    assert (na, nb) == pytest.approx((0.7194007593415196, 0.6620866639029890), abs=1e-15)
    assert nb == nc
    with pytest.raises(NoOracleCoverage):
        exact_dephasing_one_tangles(pt(BF, 0.1))
