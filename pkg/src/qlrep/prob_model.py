"""Probabilistic contexts for two dichotomous observables.

A context collects the marginal distribution of ``a``, the marginal
distribution of ``b`` and the matrix of transition probabilities
``p[beta][alpha] = P(b = beta | a = alpha)``.  Rows are indexed by the
``b`` outcome and columns by the ``a`` outcome.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from os import PathLike
from typing import Sequence

import numpy as np

from .errors import NonPositive, NotDoublyStochastic, NotNormalized

DEFAULT_TOL = 1e-9

Pair = tuple[float, float]


@dataclass(frozen=True)
class Spectrum:
    """Outcome labels of the two observables, used for expectation values."""

    a_labels: Pair = (1.0, -1.0)
    b_labels: Pair = (1.0, -1.0)

    def __post_init__(self):
        a = tuple(float(v) for v in self.a_labels)
        b = tuple(float(v) for v in self.b_labels)
        if len(a) != 2 or len(b) != 2:
            raise ValueError("spectra must have exactly two outcomes")
        if a[0] == a[1] or b[0] == b[1]:
            raise ValueError("outcome labels must be distinct")
        object.__setattr__(self, "a_labels", a)
        object.__setattr__(self, "b_labels", b)


@dataclass(frozen=True)
class TransitionMatrix:
    """2x2 matrix of conditional probabilities, ``entries[beta][alpha]``."""

    entries: tuple[Pair, Pair]

    def __post_init__(self):
        rows = tuple(tuple(float(v) for v in row) for row in self.entries)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise ValueError("transition matrix must be 2x2")
        object.__setattr__(self, "entries", rows)

    def __getitem__(self, index):
        beta, alpha = index
        return self.entries[beta][alpha]

    def column_sums(self) -> Pair:
        e = self.entries
        return (e[0][0] + e[1][0], e[0][1] + e[1][1])

    def row_sums(self) -> Pair:
        e = self.entries
        return (e[0][0] + e[0][1], e[1][0] + e[1][1])

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)


@dataclass(frozen=True)
class ContextData:
    """Probabilistic data: marginals ``pa``, ``pb`` and the transition matrix.

    Construction only normalizes the container types; call
    :func:`validate_context` (or use :meth:`from_qpP`) to enforce the
    probabilistic invariants.
    """

    pa: Pair
    pb: Pair
    matrix: TransitionMatrix
    spectrum: Spectrum = field(default_factory=Spectrum)

    def __post_init__(self):
        object.__setattr__(self, "pa", _as_pair(self.pa, "pa"))
        object.__setattr__(self, "pb", _as_pair(self.pb, "pb"))
        if not isinstance(self.matrix, TransitionMatrix):
            object.__setattr__(self, "matrix", TransitionMatrix(self.matrix))

    @classmethod
    def from_qpP(cls, q, p, P, *, spectrum=None, tol=DEFAULT_TOL) -> "ContextData":
        """Validated context with ``pa = (q, 1-q)``, ``pb = (p, 1-p)`` and a DS matrix set by ``P``."""
        c = cls(
            pa=(q, 1.0 - q),
            pb=(p, 1.0 - p),
            matrix=((P, 1.0 - P), (1.0 - P, P)),
            spectrum=spectrum or Spectrum(),
        )
        return validate_context(c, tol)

    @property
    def q(self) -> float:
        return self.pa[0]

    @property
    def p(self) -> float:
        return self.pb[0]

    @property
    def P(self) -> float:
        return self.matrix[0, 0]


@dataclass(frozen=True)
class SampleCounts:
    """Raw frequencies from two independent samples.

    ``cond_counts[beta][alpha]`` counts ``b = beta`` inside the sub-sample
    where ``a = alpha`` was observed.  ``b_counts`` comes from its own
    sample and is never derived from ``cond_counts``.
    """

    a_counts: tuple[int, int]
    b_counts: tuple[int, int]
    cond_counts: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        a = _as_count_pair(self.a_counts, "a_counts")
        b = _as_count_pair(self.b_counts, "b_counts")
        if len(self.cond_counts) != 2:
            raise ValueError("cond_counts must be 2x2")
        cond = tuple(_as_count_pair(row, "cond_counts row") for row in self.cond_counts)
        object.__setattr__(self, "a_counts", a)
        object.__setattr__(self, "b_counts", b)
        object.__setattr__(self, "cond_counts", cond)
        if sum(a) == 0:
            raise NonPositive("a sample is empty")
        if sum(b) == 0:
            raise NonPositive("b sample is empty")
        for alpha in range(2):
            if cond[0][alpha] + cond[1][alpha] == 0:
                raise NonPositive(f"conditional sub-sample for alpha{alpha + 1} is empty")

    @classmethod
    def from_json(cls, text: str) -> "SampleCounts":
        data = json.loads(text)
        try:
            return cls(data["a_counts"], data["b_counts"], data["cond_counts"])
        except KeyError as exc:
            raise ValueError(f"counts file is missing key {exc}") from None

    @classmethod
    def load(cls, path: str | PathLike) -> "SampleCounts":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())


def _as_pair(values: Sequence[float], name: str) -> Pair:
    pair = tuple(float(v) for v in values)
    if len(pair) != 2:
        raise ValueError(f"{name} must have exactly two entries")
    return pair


def _as_count_pair(values, name):
    pair = tuple(values)
    if len(pair) != 2:
        raise ValueError(f"{name} must have exactly two entries")
    out = []
    for v in pair:
        if isinstance(v, bool) or int(v) != v:
            raise ValueError(f"{name} entries must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"{name} entries must be nonnegative, got {v!r}")
        out.append(int(v))
    return tuple(out)


def _renormalized(pair: Pair, name: str, tol: float) -> Pair:
    total = pair[0] + pair[1]
    if not math.isfinite(total) or abs(total - 1.0) > tol:
        raise NotNormalized(f"{name} sums to {total!r}")
    first = pair[0] / total
    # complement keeps the pair summing to exactly 1.0
    return (first, 1.0 - first)


def validate_context(c: ContextData, tol: float = DEFAULT_TOL) -> ContextData:
    """Check positivity, normalization and double stochasticity of ``c``.

    Returns a context whose marginals and matrix columns sum to one
    exactly; deviations within ``tol`` are repaired by dividing by the
    actual sum.

    Raises
    ------
    NonPositive
        Any probability is not strictly positive.
    NotNormalized
        A marginal or a matrix column is off by more than ``tol``.
    NotDoublyStochastic
        A matrix row is off by more than ``tol``.
    """
    values = [*c.pa, *c.pb, *c.matrix.entries[0], *c.matrix.entries[1]]
    if any(not math.isfinite(v) for v in values):
        raise NotNormalized("probabilities must be finite")
    if any(v <= 0.0 for v in values):
        raise NonPositive(f"probabilities must be strictly positive: pa={c.pa}, pb={c.pb}, "
                          f"matrix={c.matrix.entries}")

    pa = _renormalized(c.pa, "pa", tol)
    pb = _renormalized(c.pb, "pb", tol)
    e = c.matrix.entries
    col1 = _renormalized((e[0][0], e[1][0]), "matrix column alpha1", tol)
    col2 = _renormalized((e[0][1], e[1][1]), "matrix column alpha2", tol)
    matrix = TransitionMatrix(((col1[0], col2[0]), (col1[1], col2[1])))
    for beta, s in enumerate(matrix.row_sums()):
        if abs(s - 1.0) > tol:
            raise NotDoublyStochastic(f"matrix row beta{beta + 1} sums to {s!r}")

    if pa == c.pa and pb == c.pb and matrix == c.matrix:
        return c
    return ContextData(pa=pa, pb=pb, matrix=matrix, spectrum=c.spectrum)


def ds_matrix_from_P(P: float) -> TransitionMatrix:
    """Symmetric doubly stochastic matrix ``[[P, 1-P], [1-P, P]]``."""
    P = float(P)
    if not 0.0 < P < 1.0:
        raise NonPositive(f"P must lie in the open interval (0, 1), got {P!r}")
    return TransitionMatrix(((P, 1.0 - P), (1.0 - P, P)))


def estimate_context(counts: SampleCounts, tol: float = DEFAULT_TOL,
                     spectrum: Spectrum | None = None) -> ContextData:
    """Relative-frequency estimate of a context from two-sample counts."""
    a, b, cond = counts.a_counts, counts.b_counts, counts.cond_counts
    na, nb = sum(a), sum(b)
    pa = (a[0] / na, a[1] / na)
    pb = (b[0] / nb, b[1] / nb)
    col_totals = (cond[0][0] + cond[1][0], cond[0][1] + cond[1][1])
    entries = tuple(
        tuple(cond[beta][alpha] / col_totals[alpha] for alpha in range(2))
        for beta in range(2)
    )
    c = ContextData(pa=pa, pb=pb, matrix=TransitionMatrix(entries),
                    spectrum=spectrum or Spectrum())
    return validate_context(c, tol)
