"""Born-rule projective measurement and the sequential-order experiment.

A measurement projects the state onto an eigenvector of the measured
observable, chosen with probability given by the squared overlap.  The
sequential experiment prepares a balanced state, measures one of the
path/wave pair, then measures the other on the projected state; whichever
goes second comes out 50/50, which is complementarity seen operationally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .interferometer import balanced_state, path_operator, wave_operator
from .qalgebra import (
    InvariantViolation,
    Observable,
    StateVector,
    eig_hermitian,
)
from .rng import RandomStream

#: Upper 1% critical value of the chi-square distribution with one degree
#: of freedom; the acceptance threshold for the 50/50 uniformity test.
CHI2_CRITICAL_1PCT = 6.635


class MeasurementOrder(enum.Enum):
    P_THEN_W = "pw"
    W_THEN_P = "wp"


@dataclass(frozen=True, eq=False)
class MeasurementRecord:
    """One projective measurement: the +1/-1 outcome and the projected state."""

    outcome: float
    post_state: StateVector


@dataclass(frozen=True)
class SequentialStats:
    """Empirical statistics of ordered measurement pairs."""

    order: MeasurementOrder
    shots: int
    first_mean: float
    first_variance: float
    second_mean: float
    second_variance: float
    second_counts: tuple[int, int]

    def __post_init__(self) -> None:
        n_plus, n_minus = self.second_counts
        if n_plus + n_minus != self.shots:
            raise InvariantViolation(
                f"second-outcome counts {self.second_counts} do not sum to "
                f"shots = {self.shots}"
            )
        for name in ("first_mean", "second_mean"):
            value = getattr(self, name)
            if not -1.0 <= value <= 1.0:
                raise InvariantViolation(f"{name} = {value!r} outside [-1, 1]")


def _binary_eigensystem(obs: Observable) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors of a +1/-1 observable, validated."""
    evals, vecs = eig_hermitian(obs)
    if abs(evals[0] - evals[1]) < 1e-9:
        raise InvariantViolation(
            f"measured observable is degenerate (eigenvalues {evals[0]!r}, "
            f"{evals[1]!r})"
        )
    if abs(evals[0] - 1.0) > 1e-9 or abs(evals[1] + 1.0) > 1e-9:
        raise InvariantViolation(
            f"measured observable must have eigenvalues +1 and -1, got "
            f"{evals[0]!r} and {evals[1]!r}"
        )
    return evals, vecs


def measure(obs: Observable, state: StateVector, rng: RandomStream) -> MeasurementRecord:
    """Projective measurement of a +1/-1 observable on a pure state.

    The outcome is +1 with probability |<e+|state>|^2 and -1 otherwise;
    the returned post-measurement state is the matching eigenvector.
    Consumes exactly one uniform draw from the stream.
    """
    _, vecs = _binary_eigensystem(obs)
    p_plus = abs(np.vdot(vecs[:, 0], state.amplitudes)) ** 2
    if rng.uniform() < p_plus:
        return MeasurementRecord(outcome=1.0, post_state=StateVector(vecs[:, 0]))
    return MeasurementRecord(outcome=-1.0, post_state=StateVector(vecs[:, 1]))


def born_sample(
    obs: Observable, state: StateVector, rng: RandomStream, shots: int
) -> np.ndarray:
    """`shots` repeated measurements of obs on fresh copies of state.

    Vectorized over the batch but stream-identical to calling
    :func:`measure` in a loop: draw k decides shot k.
    """
    if shots < 1:
        raise InvariantViolation(f"shots must be >= 1, got {shots!r}")
    _, vecs = _binary_eigensystem(obs)
    p_plus = abs(np.vdot(vecs[:, 0], state.amplitudes)) ** 2
    return np.where(rng.uniforms(shots) < p_plus, 1.0, -1.0)


def _outcome_stats(outcomes: np.ndarray) -> tuple[float, float]:
    mean = float(np.mean(outcomes))
    var = float(np.var(outcomes))
    return mean, var


def sequential_experiment(
    order: MeasurementOrder,
    phi: float,
    phi0: float,
    shots: int,
    rng: RandomStream,
) -> SequentialStats:
    """Measure the path/wave pair in the given order, shot by shot.

    Every shot prepares the balanced state at phi, measures the first
    observable, then measures the second on the projected state.  The
    implementation batches the Born sampling, consuming two stream draws
    per shot in shot order, so it reproduces a literal measure-then-
    measure loop bit for bit.
    """
    if shots < 1:
        raise InvariantViolation(f"shots must be >= 1, got {shots!r}")
    order = MeasurementOrder(order)
    if order is MeasurementOrder.P_THEN_W:
        first, second = path_operator(), wave_operator(phi0)
    else:
        first, second = wave_operator(phi0), path_operator()

    state = balanced_state(phi)
    _, vecs1 = _binary_eigensystem(first)
    _, vecs2 = _binary_eigensystem(second)
    p1 = abs(np.vdot(vecs1[:, 0], state.amplitudes)) ** 2
    # Second-measurement odds depend only on which eigenvector the first
    # projection selected.
    p2_after_plus = abs(np.vdot(vecs2[:, 0], vecs1[:, 0])) ** 2
    p2_after_minus = abs(np.vdot(vecs2[:, 0], vecs1[:, 1])) ** 2

    draws = rng.uniforms(2 * shots)
    first_outcomes = np.where(draws[0::2] < p1, 1.0, -1.0)
    p2 = np.where(first_outcomes > 0, p2_after_plus, p2_after_minus)
    second_outcomes = np.where(draws[1::2] < p2, 1.0, -1.0)

    first_mean, first_var = _outcome_stats(first_outcomes)
    second_mean, second_var = _outcome_stats(second_outcomes)
    n_plus = int(np.count_nonzero(second_outcomes > 0))
    return SequentialStats(
        order=order,
        shots=shots,
        first_mean=first_mean,
        first_variance=first_var,
        second_mean=second_mean,
        second_variance=second_var,
        second_counts=(n_plus, shots - n_plus),
    )


def merge_sequential_stats(parts: Sequence[SequentialStats]) -> SequentialStats:
    """Pool per-worker statistics: counts add, moments combine by weight."""
    if not parts:
        raise InvariantViolation("cannot merge an empty list of statistics")
    order = parts[0].order
    if any(p.order is not order for p in parts):
        raise InvariantViolation("cannot merge statistics from different orders")
    total = sum(p.shots for p in parts)
    # clamp: weighted averages of values in [-1, 1] can round a hair outside
    first_mean = min(1.0, max(-1.0, sum(p.shots * p.first_mean for p in parts) / total))
    second_mean = min(1.0, max(-1.0, sum(p.shots * p.second_mean for p in parts) / total))
    first_sq = sum(p.shots * (p.first_variance + p.first_mean**2) for p in parts)
    second_sq = sum(p.shots * (p.second_variance + p.second_mean**2) for p in parts)
    n_plus = sum(p.second_counts[0] for p in parts)
    n_minus = sum(p.second_counts[1] for p in parts)
    return SequentialStats(
        order=order,
        shots=total,
        first_mean=first_mean,
        first_variance=max(first_sq / total - first_mean**2, 0.0),
        second_mean=second_mean,
        second_variance=max(second_sq / total - second_mean**2, 0.0),
        second_counts=(n_plus, n_minus),
    )


def sequential_experiment_partitioned(
    order: MeasurementOrder,
    phi: float,
    phi0: float,
    shots: int,
    rng: RandomStream,
    workers: int,
) -> SequentialStats:
    """Partition shots across independently seeded sub-streams and pool.

    Worker i runs its chunk on rng.derive(i); chunk sizes differ by at
    most one.  With workers == 1 this is exactly the plain experiment on
    the parent stream, which remains the reference behavior.
    """
    if workers < 1:
        raise InvariantViolation(f"workers must be >= 1, got {workers!r}")
    if workers == 1:
        return sequential_experiment(order, phi, phi0, shots, rng)
    if shots < workers:
        raise InvariantViolation(
            f"cannot split {shots} shots across {workers} workers"
        )
    base, extra = divmod(shots, workers)
    parts = []
    for i in range(workers):
        chunk = base + (1 if i < extra else 0)
        parts.append(
            sequential_experiment(order, phi, phi0, chunk, rng.derive(i))
        )
    return merge_sequential_stats(parts)


def uniformity_test(counts: tuple[int, int]) -> tuple[float, bool]:
    """One-degree-of-freedom chi-square test against a 50/50 split.

    Returns (chi2, passed); passed means the statistic stays below the
    1% critical value, i.e. the counts are consistent with uniformity.
    """
    n_plus, n_minus = counts
    if n_plus < 0 or n_minus < 0:
        raise InvariantViolation(f"counts must be non-negative, got {counts!r}")
    total = n_plus + n_minus
    if total == 0:
        raise InvariantViolation("uniformity test needs at least one count")
    expected = total / 2.0
    chi2 = (n_plus - expected) ** 2 / expected + (n_minus - expected) ** 2 / expected
    return chi2, chi2 < CHI2_CRITICAL_1PCT
