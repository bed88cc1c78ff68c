"""Named self-checks over every analytic claim the package makes.

Each check reports a residual and a limit; a check passes when the
residual stays below the limit.  The suite is deterministic: sampled test
points come from fixed grids or a fixed-seed stream.  The override
arguments exist so tests can inject a faulty component and watch the
matching check fail by name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import complementarity as comp
from . import interferometer as ifm
from . import measurement as meas
from . import uncertainty as unc
from .qalgebra import (
    KET_LOWER,
    KET_UPPER,
    SIGMA_X,
    SIGMA_Z,
    StateVector,
    UnitaryGate,
    apply,
    expectation,
    pauli_compose,
    variance,
)
from .rng import RandomStream
from .tolerances import TOL

_PHI0_GRID = np.linspace(-math.pi, math.pi, 17)
_PHI_GRID = np.linspace(-math.pi, math.pi, 41)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float
    limit: float
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _check(name: str, residual: float, limit: float, detail: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        passed=residual < limit,
        residual=float(residual),
        limit=float(limit),
        detail=detail,
    )


def run_verification(
    shots: int | None = None,
    seed: int = 1,
    beam_splitter_override: UnitaryGate | None = None,
    wave_basis_override: comp.EigenBasis | None = None,
) -> VerificationReport:
    """Run every named invariant check; pure algebra unless shots is given.

    beam_splitter_override and wave_basis_override substitute a component
    under test for the library's own; they are fault-injection hooks, not
    configuration.
    """
    checks: list[CheckResult] = []
    splitter = beam_splitter_override if beam_splitter_override is not None else ifm.beam_splitter()

    def basis_for(phi0: float) -> comp.EigenBasis:
        if wave_basis_override is not None:
            return wave_basis_override
        return comp.derive_wave_eigenbasis(phi0)

    b = splitter.matrix

    residual = float(np.max(np.abs(b @ b.conj().T - np.eye(2))))
    checks.append(_check("beam_splitter_unitarity", residual, TOL.unit, "B B' = I"))

    residual = float(np.max(np.abs(b.conj().T @ SIGMA_Z.matrix @ b - SIGMA_X.matrix)))
    checks.append(
        _check("beam_splitter_conjugation", residual, 1e-12, "B' sz B = sx")
    )

    p_upper = abs(np.vdot(KET_UPPER.amplitudes, b @ KET_LOWER.amplitudes)) ** 2
    checks.append(
        _check(
            "lower_port_splits_evenly",
            abs(p_upper - 0.5),
            1e-12,
            "|<upper|B|lower>|^2 = 1/2",
        )
    )

    path = ifm.path_operator()
    path_basis = comp.path_eigenbasis()

    residual = 0.0
    for phi0 in _PHI0_GRID:
        basis = basis_for(phi0)
        residual = max(
            residual,
            abs(expectation(path, basis.plus)),
            abs(expectation(path, basis.minus)),
        )
    checks.append(
        _check(
            "path_blind_on_wave_eigenstates",
            residual,
            TOL.comp,
            "<w|P|w> = 0 for both wave eigenstates",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID:
        w_obs = comp.observable_from_eigensystem(basis_for(phi0))
        residual = max(
            residual,
            abs(expectation(w_obs, path_basis.plus)),
            abs(expectation(w_obs, path_basis.minus)),
        )
    checks.append(
        _check(
            "wave_blind_on_path_eigenstates",
            residual,
            TOL.comp,
            "<p|W|p> = 0 for both arms",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID:
        verdict = comp.is_complementary(path_basis, basis_for(phi0))
        residual = max(residual, verdict.max_deviation)
    checks.append(
        _check(
            "path_wave_mutually_unbiased",
            residual,
            TOL.comp,
            "all cross overlaps squared = 1/2",
        )
    )

    # The derived eigenbasis must match the closed-form solution up to a
    # global phase per vector.
    residual = 0.0
    for phi0 in _PHI0_GRID:
        basis = comp.derive_wave_eigenbasis(phi0)
        half = 0.5 * comp.canonical_phase(float(phi0))
        closed_plus = np.array(
            [np.exp(-1j * half), np.exp(1j * half)]
        ) / math.sqrt(2.0)
        closed_minus = np.array(
            [-np.exp(-1j * half), np.exp(1j * half)]
        ) / math.sqrt(2.0)
        residual = max(
            residual,
            1.0 - abs(np.vdot(basis.plus.amplitudes, closed_plus)),
            1.0 - abs(np.vdot(basis.minus.amplitudes, closed_minus)),
        )
    checks.append(
        _check(
            "wave_eigenbasis_closed_form",
            residual,
            1e-12,
            "derived basis matches its closed form",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID:
        assembled = comp.observable_from_eigensystem(basis_for(phi0))
        target = ifm.wave_operator(float(phi0)).matrix
        residual = max(residual, float(np.max(np.abs(assembled.matrix - target))))
    checks.append(
        _check(
            "wave_operator_pauli_form",
            residual,
            1e-12,
            "assembled W = cos(phi0) sx + sin(phi0) sy",
        )
    )

    residual = 0.0
    p_residual = 0.0
    for phi0 in _PHI0_GRID[::4]:
        scan = ifm.interference_scan(float(phi0), [float(p) for p in _PHI_GRID])
        for point in scan.points:
            residual = max(
                residual, abs(point.w_expect - math.cos(point.phi - float(phi0)))
            )
            p_residual = max(p_residual, abs(point.p_expect))
    checks.append(
        _check(
            "interference_cosine_law",
            residual,
            1e-12,
            "<W> = cos(phi - phi0) on the balanced manifold",
        )
    )
    checks.append(
        _check(
            "balanced_states_hide_path",
            p_residual,
            1e-12,
            "<P> = 0 along every scan",
        )
    )

    dp_residual = 0.0
    dw_residual = 0.0
    gap_residual = 0.0
    for phi0 in _PHI0_GRID[::4]:
        for phi in _PHI_GRID:
            report = unc.duality_report(float(phi), float(phi0))
            dp_residual = max(dp_residual, abs(report.delta_p - 1.0))
            dw_residual = max(
                dw_residual,
                abs(report.delta_w - abs(math.sin(float(phi) - float(phi0)))),
            )
            gap_residual = max(gap_residual, abs(report.gap))
    checks.append(_check("path_spread_unity", dp_residual, 1e-12, "delta_p = 1"))
    checks.append(
        _check(
            "wave_spread_sine",
            dw_residual,
            1e-12,
            "delta_w = |sin(phi - phi0)|",
        )
    )
    checks.append(
        _check(
            "uncertainty_product_saturation",
            gap_residual,
            TOL.var,
            "delta_p * delta_w = robertson bound on balanced states",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID[::4]:
        for k in (-2, -1, 0, 1, 2):
            phi = float(phi0) + k * math.pi
            report = unc.duality_report(phi, float(phi0))
            residual = max(residual, report.bound, report.delta_w)
    checks.append(
        _check(
            "bound_vanishes_at_wave_eigenstates",
            residual,
            1e-12,
            "bound and delta_w vanish at phi = phi0 + k pi",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID[::4]:
        for phi in _PHI_GRID:
            report = unc.duality_report(float(phi), float(phi0))
            residual = max(
                residual, abs(unc.sensitivity(float(phi), float(phi0)) - report.delta_w)
            )
    checks.append(
        _check(
            "sensitivity_matches_wave_spread",
            residual,
            1e-12,
            "|d<W>/dphi| = delta_w",
        )
    )

    step = 1e-5
    residual = 0.0
    for phi in np.linspace(-math.pi, math.pi, 9):
        scan = ifm.interference_scan(0.0, [float(phi) - step, float(phi) + step])
        slope = (scan.points[1].w_expect - scan.points[0].w_expect) / (2 * step)
        residual = max(residual, abs(abs(slope) - unc.sensitivity(float(phi), 0.0)))
    checks.append(
        _check(
            "sensitivity_finite_difference",
            residual,
            1e-6,
            "slope of the scan matches the analytic sensitivity",
        )
    )

    # Full pipeline: splitter, shifter, splitter, then a path measurement.
    # With the library's splitter the fringe is cos(phi) with unit contrast.
    fringe_grid = np.linspace(-math.pi, math.pi, 129)
    fringe = []
    for phi in fringe_grid:
        state = apply(splitter, KET_LOWER)
        state = apply(ifm.phase_shifter(float(phi)), state)
        state = apply(splitter, state)
        fringe.append(expectation(SIGMA_Z, state))
    fringe_arr = np.array(fringe)
    checks.append(
        _check(
            "pipeline_unit_visibility",
            abs(1.0 - float(np.max(np.abs(fringe_arr)))),
            1e-9,
            "full-pipeline fringe reaches unit contrast",
        )
    )
    checks.append(
        _check(
            "pipeline_fringe_shape",
            float(np.max(np.abs(fringe_arr - np.cos(fringe_grid)))),
            1e-12,
            "fringe is cos(phi) under the library's splitter convention",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID:
        w_now = ifm.wave_operator(float(phi0)).matrix
        w_later = ifm.wave_operator(float(phi0) + 2 * math.pi).matrix
        residual = max(residual, float(np.max(np.abs(w_later - w_now))))
    checks.append(
        _check(
            "wave_operator_periodicity",
            residual,
            1e-13,
            "W(phi0 + 2 pi) = W(phi0)",
        )
    )

    residual = 0.0
    for phi0 in _PHI0_GRID:
        basis = basis_for(phi0)
        w_obs = comp.observable_from_eigensystem(basis)
        residual = max(
            residual, variance(w_obs, basis.plus), variance(w_obs, basis.minus)
        )
    checks.append(
        _check(
            "variance_vanishes_on_eigenstates",
            residual,
            TOL.var,
            "eigenstates of W have zero spread",
        )
    )

    # Robertson inequality on deterministic pseudo-random triples.
    coeff_rng = RandomStream(0xC0FFEE)
    worst = 0.0
    for _ in range(512):
        raw = coeff_rng.uniforms(10)
        a = pauli_compose(*(2.0 * raw[0:4] - 1.0))
        b2 = pauli_compose(*(2.0 * raw[4:8] - 1.0))
        theta = math.pi * raw[8]
        xi = 2 * math.pi * raw[9]
        state = StateVector(
            np.array(
                [
                    math.cos(0.5 * theta),
                    math.sin(0.5 * theta) * np.exp(1j * xi),
                ],
                dtype=np.complex128,
            )
        )
        bound = unc.robertson_bound(a, b2, state)
        worst = max(worst, bound**2 - variance(a, state) * variance(b2, state))
    checks.append(
        _check(
            "robertson_inequality",
            worst,
            TOL.var,
            "var(a) var(b) >= bound^2 on random triples",
        )
    )

    if shots is not None:
        checks.extend(_sampled_checks(shots, seed))

    return VerificationReport(checks=tuple(checks))


def variance_window(mean: float, shots: int, sigmas: float = 4.0) -> float:
    """Acceptance window for the sample variance of +1/-1 outcomes.

    For outcomes of magnitude one the sample variance is 1 - mean^2, so
    its standard error follows from the mean's by the delta method,
    2|mu| sigma / sqrt(n); the quadratic term sigma^2 sigmas^2 / n keeps
    the window meaningful where mu vanishes and the linear term with it.
    """
    sigma_sq = max(1.0 - mean**2, 0.0)
    sigma = math.sqrt(sigma_sq)
    window = (
        sigmas * 2.0 * abs(mean) * sigma / math.sqrt(shots)
        + sigmas**2 * sigma_sq / shots
    )
    # Degenerate direction (certain outcome): the estimate is exact.
    return max(window, 1e-30)


def _sampled_checks(shots: int, seed: int) -> list[CheckResult]:
    """Monte Carlo checks: randomization and convergence at finite shots."""
    checks: list[CheckResult] = []
    pair_draws = RandomStream(seed).uniforms(8)
    pairs = [
        (
            float(2 * math.pi * pair_draws[2 * i] - math.pi),
            float(2 * math.pi * pair_draws[2 * i + 1] - math.pi),
        )
        for i in range(4)
    ]

    stream_index = 0
    for order in meas.MeasurementOrder:
        worst_chi2 = 0.0
        worst_var = 0.0
        for phi, phi0 in pairs:
            stream = RandomStream(seed).derive(stream_index)
            stream_index += 1
            stats = meas.sequential_experiment(order, phi, phi0, shots, stream)
            chi2, _ = meas.uniformity_test(stats.second_counts)
            worst_chi2 = max(worst_chi2, chi2)
            if order is meas.MeasurementOrder.P_THEN_W:
                mean, target_var = 0.0, 1.0
            else:
                mean = math.cos(phi - phi0)
                target_var = math.sin(phi - phi0) ** 2
            window = variance_window(mean, shots)
            worst_var = max(worst_var, abs(stats.first_variance - target_var) / window)
        tag = order.value
        checks.append(
            _check(
                f"second_outcome_uniform_{tag}",
                worst_chi2,
                meas.CHI2_CRITICAL_1PCT,
                "chi-square of second-measurement counts vs 50/50",
            )
        )
        checks.append(
            _check(
                f"first_variance_convergence_{tag}",
                worst_var,
                1.0,
                "first-measurement variance within 4 standard errors",
            )
        )

    stats_a = meas.sequential_experiment(
        meas.MeasurementOrder.P_THEN_W, 0.7, 0.1, shots, RandomStream(seed)
    )
    stats_b = meas.sequential_experiment(
        meas.MeasurementOrder.P_THEN_W, 0.7, 0.1, shots, RandomStream(seed)
    )
    checks.append(
        _check(
            "sampling_determinism",
            0.0 if stats_a == stats_b else 1.0,
            0.5,
            "same seed reproduces identical statistics",
        )
    )
    return checks


def format_report(report: VerificationReport) -> str:
    """One PASS/FAIL line per named check."""
    lines = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(
            f"{status}  {c.name}  (residual {c.residual:.3e} vs limit "
            f"{c.limit:.3e})  {c.detail}"
        )
    tally = sum(1 for c in report.checks if c.passed)
    lines.append(f"{tally}/{len(report.checks)} checks passed")
    return "\n".join(lines)
