"""Quantum-like representation of probabilistic data for two dichotomous observables."""

from .bloch import BlochPoint, color_of, from_bloch, state_to_bloch, to_bloch
from .errors import (
    Degenerate,
    InconsistentInterference,
    NonPositive,
    NotDoublyStochastic,
    NotNormalized,
    NotTrigonometric,
    OutOfRange,
    PhaseConstraintViolated,
    QLError,
)
from .interference import (
    Branch,
    Classification,
    InterferenceProfile,
    classify,
    ftp_prediction,
    interference_coefficient,
    interference_coefficients,
    interference_profile,
    interference_reconstruct,
    relative_phases,
)
from .prob_model import (
    ContextData,
    SampleCounts,
    Spectrum,
    TransitionMatrix,
    ds_matrix_from_P,
    estimate_context,
    validate_context,
)
from .qlra import (
    BasisLabel,
    Observable,
    OperatorBasis,
    QLState,
    a_canonical_basis,
    a_interference_basis,
    a_observable,
    b_basis,
    b_observable,
    born_probabilities,
    decompose,
    expectation,
    inner_product,
    represent,
    round_trip,
    spectral_expectation,
)
from .sweep import SweepConfig, SweepResult, rc_fraction, run_sweep

__version__ = "0.1.0"
