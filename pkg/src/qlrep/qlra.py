"""Quantum-like representation algorithm.

Builds the complex amplitude

    psi(beta) = sqrt(p^a_1 p_{beta 1}) + exp(i phi_beta) sqrt(p^a_2 p_{beta 2})

for a trigonometric context, together with orthonormal bases for both
observables, so that Born's rule reproduces ``pb`` in the b-basis and
``pa`` in the a-basis.

Vectors are complex numpy arrays of shape ``(2,)`` indexed by the b
outcome.  The scalar product is linear in the first argument and
antilinear in the second.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotTrigonometric, PhaseConstraintViolated
from .interference import (
    TWO_PI,
    Branch,
    InterferenceProfile,
    interference_profile,
)
from .prob_model import DEFAULT_TOL, ContextData, TransitionMatrix, validate_context

IDENTITY_TOL = 1e-12


class BasisLabel(str, Enum):
    B_STANDARD = "b_standard"
    A_INTERFERENCE = "a_interference"
    A_CANONICAL = "a_canonical"


def _vec(v0, v1) -> np.ndarray:
    out = np.array([v0, v1], dtype=complex)
    if not np.all(np.isfinite(out)):
        raise ValueError(f"vector components must be finite, got {out}")
    out.setflags(write=False)
    return out


def inner_product(u, v) -> complex:
    """``<u, v> = sum_beta u(beta) * conj(v(beta))``."""
    return complex(np.vdot(v, u))


@dataclass(frozen=True)
class OperatorBasis:
    vectors: tuple[np.ndarray, np.ndarray]
    label: BasisLabel

    def gram(self) -> np.ndarray:
        return np.array([[inner_product(u, v) for v in self.vectors] for u in self.vectors])

    def is_orthonormal(self, tol: float = IDENTITY_TOL) -> bool:
        return bool(np.max(np.abs(self.gram() - np.eye(2))) <= tol)


@dataclass(frozen=True)
class Observable:
    """Operator diagonal in ``basis`` with the given eigenvalues."""

    basis: OperatorBasis
    eigenvalues: tuple[float, float]

    @property
    def matrix(self) -> np.ndarray:
        m = np.zeros((2, 2), dtype=complex)
        for lam, v in zip(self.eigenvalues, self.basis.vectors):
            m += lam * np.outer(v, v.conj())
        return m

    def is_hermitian(self, tol: float = IDENTITY_TOL) -> bool:
        m = self.matrix
        return bool(np.max(np.abs(m - m.conj().T)) <= tol)


@dataclass(frozen=True)
class QLState:
    """Amplitude ``psi = (psi(beta1), psi(beta2))`` with its provenance."""

    psi: np.ndarray
    source: ContextData
    profile: InterferenceProfile

    def norm_squared(self) -> float:
        return inner_product(self.psi, self.psi).real


def amplitude(c: ContextData, phases) -> np.ndarray:
    """Raw amplitude for arbitrary phases; no constraint is enforced."""
    m = c.matrix.entries
    q1, q2 = c.pa
    return _vec(*(
        math.sqrt(q1 * m[beta][0]) + cmath.exp(1j * phases[beta]) * math.sqrt(q2 * m[beta][1])
        for beta in range(2)
    ))


def represent(c: ContextData, sign: Branch = Branch.PLUS) -> QLState:
    """Complex amplitude of a trigonometric context.

    Raises
    ------
    NotTrigonometric
        When some ``|lambda_beta| > 1``; there is no state to return.
    """
    profile = interference_profile(c, sign)
    if not profile.is_trigonometric:
        raise NotTrigonometric(
            f"|lambda| = {max(map(abs, profile.lambdas))!r} > 1; no complex amplitude exists"
        )
    return QLState(psi=amplitude(c, profile.phases), source=c, profile=profile)


def b_basis() -> OperatorBasis:
    return OperatorBasis((_vec(1, 0), _vec(0, 1)), BasisLabel.B_STANDARD)


def phases_satisfy_constraint(phases, tol: float = IDENTITY_TOL) -> bool:
    diff = (phases[1] - phases[0] - math.pi) % TWO_PI
    return min(diff, TWO_PI - diff) <= tol


def a_interference_basis(c: ContextData, phases, *, enforce: bool = True,
                         tol: float = IDENTITY_TOL) -> OperatorBasis:
    """Phase-dependent a-basis ``f_1, f_2``.

    Orthonormal exactly when ``phi_2 - phi_1 = pi (mod 2pi)``.  Pass
    ``enforce=False`` to build the vectors anyway, e.g. to observe the
    loss of orthogonality.
    """
    if enforce and not phases_satisfy_constraint(phases, tol):
        raise PhaseConstraintViolated(
            f"phi_2 - phi_1 = {phases[1] - phases[0]!r} is not pi mod 2pi"
        )
    m = c.matrix.entries
    f1 = _vec(math.sqrt(m[0][0]), math.sqrt(m[1][0]))
    f2 = _vec(cmath.exp(1j * phases[0]) * math.sqrt(m[0][1]),
              cmath.exp(1j * phases[1]) * math.sqrt(m[1][1]))
    return OperatorBasis((f1, f2), BasisLabel.A_INTERFERENCE)


def a_canonical_basis(m: TransitionMatrix, tol: float = DEFAULT_TOL) -> OperatorBasis:
    """Phase-free a-basis depending only on the transition matrix."""
    if not isinstance(m, TransitionMatrix):
        m = TransitionMatrix(m)
    # reuse the context checks on the matrix alone
    probe = ContextData(pa=(0.5, 0.5), pb=(0.5, 0.5), matrix=m)
    m = validate_context(probe, tol).matrix
    e = m.entries
    e1 = _vec(math.sqrt(e[0][0]), math.sqrt(e[1][0]))
    e2 = _vec(math.sqrt(e[0][1]), -math.sqrt(e[1][1]))
    return OperatorBasis((e1, e2), BasisLabel.A_CANONICAL)


def _psi(s) -> np.ndarray:
    return s.psi if isinstance(s, QLState) else np.asarray(s, dtype=complex)


def decompose(s, basis: OperatorBasis) -> tuple[complex, complex]:
    """Coefficients ``(<psi, v1>, <psi, v2>)`` of ``psi`` in ``basis``."""
    psi = _psi(s)
    return tuple(inner_product(psi, v) for v in basis.vectors)


def recompose(coefficients, basis: OperatorBasis) -> np.ndarray:
    return sum(c * v for c, v in zip(coefficients, basis.vectors))


def born_probabilities(s, basis: OperatorBasis) -> tuple[float, float]:
    return tuple(abs(c) ** 2 for c in decompose(s, basis))


def b_observable(c: ContextData) -> Observable:
    return Observable(b_basis(), c.spectrum.b_labels)


def a_observable(c: ContextData) -> Observable:
    return Observable(a_canonical_basis(c.matrix), c.spectrum.a_labels)


def expectation(s, obs: Observable) -> float:
    """``<A psi, psi>`` evaluated with the operator matrix."""
    psi = _psi(s)
    value = inner_product(obs.matrix @ psi, psi)
    if abs(value.imag) > IDENTITY_TOL:
        raise ValueError(f"expectation has imaginary part {value.imag!r}; operator not Hermitian?")
    return value.real


def spectral_expectation(s, obs: Observable) -> float:
    """``sum_i eigenvalue_i * |<psi, v_i>|^2``."""
    probs = born_probabilities(s, obs.basis)
    return sum(lam * pr for lam, pr in zip(obs.eigenvalues, probs))


def round_trip(c: ContextData, sign: Branch = Branch.PLUS) -> ContextData:
    """Rebuild ``pa`` and ``pb`` from the state by Born's rule in both bases."""
    s = represent(c, sign)
    pb = born_probabilities(s, b_basis())
    pa = born_probabilities(s, a_canonical_basis(c.matrix))
    return ContextData(pa=pa, pb=pb, matrix=c.matrix, spectrum=c.spectrum)
