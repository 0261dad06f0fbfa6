"""Bloch-sphere coordinates for trigonometric contexts.

With ``|0> = e_1`` and ``|1> = e_2`` of the canonical a-basis the state
reads ``sqrt(q)|0> + exp(i phi_1) sqrt(1-q)|1>``, hence

    x = 2 sqrt(q(1-q)) lambda_1
    y = +/- 2 sqrt(q(1-q)) sqrt(1 - lambda_1^2)
    z = q - (1-q)

The amplitude moduli are ``cos(theta) = sqrt(q)``, ``sin(theta) = sqrt(1-q)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import Degenerate, NotTrigonometric
from .interference import Branch, interference_profile
from .prob_model import DEFAULT_TOL, ContextData, Spectrum, TransitionMatrix, validate_context
from .qlra import QLState, a_canonical_basis, decompose

RGB = tuple[float, float, float]


@dataclass(frozen=True)
class BlochPoint:
    x: float
    y: float
    z: float
    color: RGB = (0.0, 0.0, 0.0)
    branch: Branch = Branch.PLUS

    def norm_squared(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z


def color_of(q: float, p: float) -> RGB:
    """Red grows with q, green with p; blue stays off.

    Small (q, p) is dark, large (q, p) is yellow.
    """
    return (float(q), float(p), 0.0)


def to_bloch(c: ContextData, sign: Branch = Branch.PLUS) -> BlochPoint:
    profile = interference_profile(c, sign)
    if not profile.is_trigonometric:
        raise NotTrigonometric("RC violated: no point on the Bloch sphere")
    lam = min(1.0, max(-1.0, profile.lambdas[0]))
    q1, q2 = c.pa
    r = 2.0 * math.sqrt(q1 * q2)
    y = r * math.sqrt(1.0 - lam * lam)
    if profile.sign_branch is Branch.MINUS:
        y = -y
    return BlochPoint(r * lam, y, q1 - q2, color_of(c.pa[0], c.pb[0]), profile.sign_branch)


def state_to_bloch(s: QLState) -> BlochPoint:
    """Bloch point from the state's coordinates in the canonical a-basis.

    Uses ``psi = cos(theta)|0> + sin(theta) exp(i phi)|1>`` and
    ``(x, y, z) = (sin 2theta cos phi, sin 2theta sin phi, cos 2theta)``.
    """
    c0, c1 = decompose(s, a_canonical_basis(s.source.matrix))
    theta = math.atan2(abs(c1), abs(c0))
    phi = cmath.phase(c1) - cmath.phase(c0)
    return BlochPoint(
        math.sin(2 * theta) * math.cos(phi),
        math.sin(2 * theta) * math.sin(phi),
        math.cos(2 * theta),
        color_of(s.source.pa[0], s.source.pb[0]),
        s.profile.sign_branch,
    )


def from_bloch(pt: BlochPoint, m: TransitionMatrix, *, spectrum: Spectrum | None = None,
               tol: float = DEFAULT_TOL) -> ContextData:
    """Inverse of :func:`to_bloch` for a given transition matrix (testing aid)."""
    if abs(pt.z) >= 1.0:
        raise Degenerate(f"z = {pt.z!r} is a pole; q would be 0 or 1")
    q = (1.0 + pt.z) / 2.0
    lam = pt.x / (2.0 * math.sqrt(q * (1.0 - q)))
    e = m.entries if isinstance(m, TransitionMatrix) else m
    t1, t2 = q * e[0][0], (1.0 - q) * e[0][1]
    p = t1 + t2 + 2.0 * lam * math.sqrt(t1 * t2)
    c = ContextData(pa=(q, 1.0 - q), pb=(p, 1.0 - p), matrix=m,
                    spectrum=spectrum or Spectrum())
    return validate_context(c, tol)
