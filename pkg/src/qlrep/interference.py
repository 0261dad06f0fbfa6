"""Interference of probabilities and relative phases.

For a context ``C`` the deviation of ``p^b_beta`` from the classical
formula of total probability is measured by the coefficient of
interference

    lambda_beta = (p^b_beta - sum_a p^a_a p_{beta a}) / (2 sqrt(prod_a p^a_a p_{beta a}))

Contexts with ``|lambda_beta| <= 1`` for both outcomes are trigonometric
and admit relative phases ``cos(phi_beta) = lambda_beta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InconsistentInterference, OutOfRange
from .prob_model import ContextData

TWO_PI = 2.0 * math.pi

# |lambda| in (1, 1 + RC_SLACK] is rounding noise at the RC boundary
RC_SLACK = 1e-12
ANTISYMMETRY_TOL = 1e-9


class Classification(str, Enum):
    TRIGONOMETRIC = "trigonometric"
    HYPERBOLIC = "hyperbolic"


class Branch(str, Enum):
    """Sign of ``sin(phi_beta1)``; the two branches give conjugate states."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class InterferenceProfile:
    lambdas: tuple[float, float]
    phases: tuple[float, float] | None
    classification: Classification
    sign_branch: Branch

    @property
    def is_trigonometric(self) -> bool:
        return self.classification is Classification.TRIGONOMETRIC


def _terms(c: ContextData, beta: int) -> tuple[float, float]:
    m = c.matrix.entries[beta]
    return c.pa[0] * m[0], c.pa[1] * m[1]


def ftp_prediction(c: ContextData, beta: int) -> float:
    """Classical total-probability prediction of ``P(b = beta)``."""
    t1, t2 = _terms(c, beta)
    return t1 + t2


def interference_coefficient(c: ContextData, beta: int) -> float:
    t1, t2 = _terms(c, beta)
    return (c.pb[beta] - (t1 + t2)) / (2.0 * math.sqrt(t1 * t2))


def interference_coefficients(c: ContextData) -> tuple[float, float]:
    """Both coefficients, each computed independently and cross-checked.

    Under a doubly stochastic matrix ``lambda_2 = -lambda_1``; a larger
    discrepancy than ``ANTISYMMETRY_TOL`` means the data was not DS.
    """
    lam1 = interference_coefficient(c, 0)
    lam2 = interference_coefficient(c, 1)
    if abs(lam1 + lam2) > ANTISYMMETRY_TOL:
        raise InconsistentInterference(
            f"lambda_beta2 = {lam2!r} is not -lambda_beta1 = {-lam1!r}"
        )
    return lam1, lam2


def interference_reconstruct(c: ContextData, beta: int) -> float:
    """Right-hand side of the interference formula; reproduces ``pb[beta]``."""
    t1, t2 = _terms(c, beta)
    lam = interference_coefficient(c, beta)
    return t1 + t2 + 2.0 * lam * math.sqrt(t1 * t2)


def _classify_lambdas(lambdas) -> Classification:
    if max(abs(lam) for lam in lambdas) <= 1.0 + RC_SLACK:
        return Classification.TRIGONOMETRIC
    return Classification.HYPERBOLIC


def classify(c: ContextData) -> Classification:
    return _classify_lambdas(interference_coefficients(c))


def relative_phases(lam1: float, sign: Branch = Branch.PLUS) -> tuple[float, float]:
    """Phases ``(phi_1, phi_2)`` in ``[0, 2pi)`` with ``cos(phi_1) = lam1``.

    ``phi_2 = phi_1 + pi (mod 2pi)``, which is what makes the
    phase-dependent a-basis orthonormal.
    """
    sign = Branch(sign)
    if not abs(lam1) <= 1.0 + RC_SLACK:
        raise OutOfRange(f"|lambda| = {abs(lam1)!r} exceeds 1; the context is hyperbolic")
    lam1 = min(1.0, max(-1.0, lam1))
    phi1 = math.acos(lam1)
    if sign is Branch.MINUS:
        phi1 = (TWO_PI - phi1) % TWO_PI
    phi2 = (phi1 + math.pi) % TWO_PI
    return phi1, phi2


def interference_profile(c: ContextData, sign: Branch = Branch.PLUS) -> InterferenceProfile:
    sign = Branch(sign)
    lambdas = interference_coefficients(c)
    kind = _classify_lambdas(lambdas)
    phases = relative_phases(lambdas[0], sign) if kind is Classification.TRIGONOMETRIC else None
    return InterferenceProfile(lambdas=lambdas, phases=phases, classification=kind,
                               sign_branch=sign)
