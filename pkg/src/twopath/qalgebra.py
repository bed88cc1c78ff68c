"""Complex two-dimensional Hilbert-space primitives.

States, Hermitian observables, and unitaries are thin immutable wrappers
around validated numpy arrays; all operations are pure functions.
Constructors reject invalid input instead of repairing it; use
:func:`normalized` when renormalization is actually wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .tolerances import TOL


class InvariantViolation(ValueError):
    """A value failed one of the library's validity invariants."""


def _finite(values: np.ndarray) -> bool:
    return bool(np.all(np.isfinite(values)))


def require_finite_angle(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvariantViolation(f"{name} must be a finite angle, got {value!r}")
    return value


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized complex 2-vector of probability amplitudes.

    The global phase carries no physics; compare states with
    :func:`states_equal`, never element-wise.
    """

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitudes, dtype=np.complex128)
        if a.shape != (2,):
            raise InvariantViolation(
                f"state must be a complex 2-vector, got shape {a.shape}"
            )
        if not _finite(a):
            raise InvariantViolation("state amplitudes must be finite (no NaN/Inf)")
        norm_sq = float(a.real @ a.real + a.imag @ a.imag)
        if abs(norm_sq - 1.0) > TOL.norm:
            raise InvariantViolation(
                f"state is not normalized: |a0|^2 + |a1|^2 = {norm_sq!r}"
            )
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    def probabilities(self) -> np.ndarray:
        """Born probabilities of the two basis outcomes."""
        a = self.amplitudes
        return a.real**2 + a.imag**2


@dataclass(frozen=True, eq=False)
class Observable:
    """Hermitian 2x2 operator."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise InvariantViolation(f"observable must be 2x2, got shape {m.shape}")
        if not _finite(m):
            raise InvariantViolation("observable entries must be finite (no NaN/Inf)")
        residual = float(np.max(np.abs(m - m.conj().T)))
        if residual > TOL.herm:
            raise InvariantViolation(
                f"observable is not Hermitian: max |M - M^dag| = {residual:.3e}"
            )
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class UnitaryGate:
    """Unitary 2x2 operator."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise InvariantViolation(f"gate must be 2x2, got shape {m.shape}")
        if not _finite(m):
            raise InvariantViolation("gate entries must be finite (no NaN/Inf)")
        residual = float(np.max(np.abs(m @ m.conj().T - np.eye(2))))
        if residual > TOL.unit:
            raise InvariantViolation(
                f"gate is not unitary: max |U U^dag - I| = {residual:.3e}"
            )
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


class BlochVector(NamedTuple):
    """Pauli expectation triple (x, y, z); unit length for pure states."""

    x: float
    y: float
    z: float


SIGMA_X = Observable(np.array([[0, 1], [1, 0]], dtype=np.complex128))
SIGMA_Y = Observable(np.array([[0, -1j], [1j, 0]], dtype=np.complex128))
SIGMA_Z = Observable(np.array([[1, 0], [0, -1]], dtype=np.complex128))
IDENTITY = Observable(np.eye(2, dtype=np.complex128))

#: Computational basis kets; the upper/lower interferometer arms.
KET_UPPER = StateVector(np.array([1, 0], dtype=np.complex128))
KET_LOWER = StateVector(np.array([0, 1], dtype=np.complex128))


def expectation(obs: Observable, state: StateVector) -> float:
    """<state|obs|state>, a real number within the spectrum of obs."""
    return float(np.vdot(state.amplitudes, obs.matrix @ state.amplitudes).real)


def variance(obs: Observable, state: StateVector) -> float:
    """<obs^2> - <obs>^2, always >= 0.

    Evaluated as the squared norm of the residual vector
    (obs - <obs>)|state>, which is algebraically the same quantity but
    keeps full precision near eigenstates, where the textbook difference
    of two near-unit terms cancels catastrophically.
    """
    mean = expectation(obs, state)
    residual = obs.matrix @ state.amplitudes - mean * state.amplitudes
    return max(float(np.vdot(residual, residual).real), 0.0)


def commutator(a: Observable, b: Observable) -> np.ndarray:
    """ab - ba; anti-Hermitian for Hermitian inputs."""
    return a.matrix @ b.matrix - b.matrix @ a.matrix


def pauli_decompose(obs: Observable) -> tuple[float, float, float, float]:
    """Coefficients (c0, cx, cy, cz) with obs = c0 I + cx sx + cy sy + cz sz.

    Coefficients are real for Hermitian input; obtained from the trace
    inner products with the Pauli basis.
    """
    m = obs.matrix
    c0 = 0.5 * (m[0, 0] + m[1, 1])
    cx = 0.5 * (m[0, 1] + m[1, 0])
    cy = 0.5j * (m[0, 1] - m[1, 0])
    cz = 0.5 * (m[0, 0] - m[1, 1])
    return (float(c0.real), float(cx.real), float(cy.real), float(cz.real))


def pauli_compose(c0: float, cx: float, cy: float, cz: float) -> Observable:
    """Hermitian operator c0 I + cx sx + cy sy + cz sz from real coefficients."""
    m = (
        c0 * IDENTITY.matrix
        + cx * SIGMA_X.matrix
        + cy * SIGMA_Y.matrix
        + cz * SIGMA_Z.matrix
    )
    return Observable(m)


def bloch_vector(state: StateVector) -> BlochVector:
    """Bloch-sphere coordinates (<sx>, <sy>, <sz>) of a pure state."""
    return BlochVector(
        expectation(SIGMA_X, state),
        expectation(SIGMA_Y, state),
        expectation(SIGMA_Z, state),
    )


def apply(gate: UnitaryGate, state: StateVector) -> StateVector:
    """The state gate|state>."""
    return StateVector(gate.matrix @ state.amplitudes)


def normalized(values) -> StateVector:
    """Explicitly renormalize a raw complex 2-vector into a StateVector."""
    v = np.asarray(values, dtype=np.complex128)
    if v.shape != (2,):
        raise InvariantViolation(f"expected a complex 2-vector, got shape {v.shape}")
    if not _finite(v):
        raise InvariantViolation("cannot normalize non-finite amplitudes")
    norm = float(np.linalg.norm(v))
    if norm < 1e-150:
        raise InvariantViolation("cannot normalize a (near-)zero vector")
    return StateVector(v / norm)


def states_equal(a: StateVector, b: StateVector) -> bool:
    """Ray equality: true iff |<a|b>| exceeds 1 - norm tolerance."""
    return bool(abs(np.vdot(a.amplitudes, b.amplitudes)) > 1.0 - TOL.norm)


def eig_hermitian(obs: Observable) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form eigendecomposition of a Hermitian 2x2 operator.

    Returns (eigenvalues, eigenvectors) with eigenvalues in descending
    order and eigenvectors as the matching columns.  Each eigenvector is
    normalized and phase-fixed so its first non-negligible component is
    real and positive.
    """
    m = obs.matrix
    a = float(m[0, 0].real)
    d = float(m[1, 1].real)
    b = complex(m[0, 1])
    mid = 0.5 * (a + d)
    radius = math.hypot(0.5 * (a - d), abs(b))
    evals = np.array([mid + radius, mid - radius])

    if b == 0:
        if a >= d:
            vecs = np.eye(2, dtype=np.complex128)
        else:
            vecs = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    else:
        lam = evals[0]
        # Two algebraically equivalent eigenvector formulas; pick the
        # better-conditioned (larger) one and rescale by its biggest
        # component before normalizing, so subnormal entries cannot
        # underflow the norm.
        cand1 = np.array([b, lam - a], dtype=np.complex128)
        cand2 = np.array([lam - d, np.conj(b)], dtype=np.complex128)
        scale1 = max(abs(cand1[0]), abs(cand1[1]))
        scale2 = max(abs(cand2[0]), abs(cand2[1]))
        chosen = cand1 if scale1 >= scale2 else cand2
        scale = max(scale1, scale2)
        # Divide component-wise in real arithmetic: complex division by a
        # subnormal scale overflows inside numpy.
        v = np.empty(2, dtype=np.complex128)
        v.real = chosen.real / scale
        v.imag = chosen.imag / scale
        v = v / np.linalg.norm(v)
        # The second eigenvector of a Hermitian 2x2 is the orthogonal ray.
        w = np.array([-np.conj(v[1]), np.conj(v[0])])
        vecs = np.column_stack([v, w])

    for k in (0, 1):
        col = vecs[:, k]
        pivot = col[0] if abs(col[0]) > 1e-12 else col[1]
        vecs[:, k] = col * (np.conj(pivot) / abs(pivot))
    return evals, vecs
