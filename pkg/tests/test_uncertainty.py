"""Robertson bound, saturation on the balanced manifold, sensitivity."""

import math

import numpy as np
import pytest
from hypothesis import given

from support import (
    angles,
    hermitians,
    matmul_oracle,
    pure_states,
    random_hermitian,
    random_state,
)
from twopath.interferometer import balanced_state, interference_scan, wave_operator
from twopath.qalgebra import (
    KET_UPPER,
    SIGMA_X,
    SIGMA_Z,
    variance,
)
from twopath.uncertainty import (
    UncertaintyReport,
    duality_report,
    general_bound_rhs,
    robertson_bound,
    sensitivity,
)


def commutator_bound_oracle(a, b, amps) -> float:
    """Half the commutator expectation magnitude via explicit loops."""
    ab = matmul_oracle(a, b)
    ba = matmul_oracle(b, a)
    comm = [[ab[i][j] - ba[i][j] for j in range(2)] for i in range(2)]
    total = 0j
    for i in range(2):
        for j in range(2):
            total += complex(amps[i]).conjugate() * comm[i][j] * complex(amps[j])
    return 0.5 * abs(total)


class TestRobertsonBound:
    def test_vanishes_on_eigenstate(self):
        assert robertson_bound(SIGMA_Z, SIGMA_X, KET_UPPER) < 1e-15

    @given(phi=angles)
    def test_path_wave_bound_is_sine(self, phi):
        bound = robertson_bound(SIGMA_Z, wave_operator(0.0), balanced_state(phi))
        assert abs(bound - abs(math.sin(phi))) < 1e-12

    @given(a=hermitians(), b=hermitians(), state=pure_states())
    def test_matches_oracle_and_inequality(self, a, b, state):
        bound = robertson_bound(a, b, state)
        oracle = commutator_bound_oracle(a.matrix, b.matrix, state.amplitudes)
        assert abs(bound - oracle) < 1e-10
        assert variance(a, state) * variance(b, state) >= bound**2 - 1e-10


class TestGeneralBoundRhs:
    def test_vanishes_at_north_pole(self):
        assert general_bound_rhs(0.0, KET_UPPER) < 1e-15

    @given(phi=angles)
    def test_balanced_specialization(self, phi):
        got = general_bound_rhs(0.0, balanced_state(phi))
        assert abs(got - abs(math.sin(phi))) < 1e-12

    def test_agrees_with_commutator_route(self):
        # 10^4 random (offset, state): two formula routes, one number
        rng = np.random.default_rng(101)
        for _ in range(10_000):
            phi0 = rng.uniform(-math.pi, math.pi)
            state = random_state(rng)
            direct = general_bound_rhs(phi0, state)
            via_commutator = robertson_bound(SIGMA_Z, wave_operator(phi0), state)
            assert abs(direct - via_commutator) < 1e-12


class TestDualityReport:
    def test_maximal_uncertainty_point(self):
        report = duality_report(math.pi / 2, 0.0)
        assert abs(report.delta_p - 1.0) < 1e-12
        assert abs(report.delta_w - 1.0) < 1e-12
        assert abs(report.bound - 1.0) < 1e-12
        assert report.saturated

    def test_vanishing_bound_at_eigenstate(self):
        report = duality_report(0.7, 0.7)
        assert report.delta_w < 1e-12
        assert report.bound < 1e-12
        assert abs(report.gap) < 1e-12

    def test_half_bound_point(self):
        report = duality_report(math.pi / 6, 0.0)
        assert abs(report.delta_w - 0.5) < 1e-12
        assert abs(report.bound - 0.5) < 1e-12

    @given(phi=angles, phi0=angles)
    def test_closed_forms_on_the_balanced_manifold(self, phi, phi0):
        report = duality_report(phi, phi0)
        assert abs(report.delta_p - 1.0) < 1e-12
        assert abs(report.delta_w - abs(math.sin(phi - phi0))) < 1e-12
        assert abs(report.bound - abs(math.sin(phi - phi0))) < 1e-12

    def test_saturation_sweep(self):
        # 10^4 random scan points: the product equals the bound
        rng = np.random.default_rng(59)
        pairs = rng.uniform(-math.pi, math.pi, size=(10_000, 2))
        worst = max(abs(duality_report(phi, phi0).gap) for phi, phi0 in pairs)
        assert worst < 1e-10

    def test_report_invariants_enforced(self):
        with pytest.raises(Exception, match="below its bound"):
            UncertaintyReport(
                phi=0.0, phi0=0.0, delta_p=1.0, delta_w=0.0,
                product=0.0, bound=0.5, gap=-0.5, saturated=False,
            )
        with pytest.raises(Exception, match="saturation flag"):
            UncertaintyReport(
                phi=0.0, phi0=0.0, delta_p=1.0, delta_w=1.0,
                product=1.0, bound=0.5, gap=0.5, saturated=True,
            )


class TestSensitivity:
    def test_maximal_at_quadrature(self):
        assert sensitivity(math.pi / 2, 0.0) == 1.0

    def test_vanishes_at_fringe_extremum(self):
        assert sensitivity(0.7, 0.7) == 0.0

    @given(phi=angles, phi0=angles)
    def test_coincides_with_wave_spread(self, phi, phi0):
        assert abs(sensitivity(phi, phi0) - duality_report(phi, phi0).delta_w) < 1e-12

    def test_matches_finite_difference_of_the_scan(self):
        # central difference of the interference pattern, step 1e-5
        step = 1e-5
        phi0 = 0.4
        for phi in np.linspace(-math.pi, math.pi, 64):
            scan = interference_scan(phi0, [float(phi) - step, float(phi) + step])
            slope = (scan.points[1].w_expect - scan.points[0].w_expect) / (2 * step)
            assert abs(abs(slope) - sensitivity(float(phi), phi0)) < 1e-6


class TestRobertsonInequalityAtScale:
    def test_never_violated_on_random_triples(self):
        # squared-quantity comparison avoids square-root cancellation
        rng = np.random.default_rng(4242)
        worst = 0.0
        for _ in range(20_000):
            a = random_hermitian(rng)
            b = random_hermitian(rng)
            state = random_state(rng)
            bound_sq = robertson_bound(a, b, state) ** 2
            var_product = variance(a, state) * variance(b, state)
            worst = max(worst, bound_sq - var_product)
        assert worst < 1e-10
