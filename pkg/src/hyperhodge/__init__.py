"""Exact irregular Hodge spectra of hypergeometric connections.

The direct computation is a closed-form jump formula over exact rationals;
an independent pipeline (strong non-resonance shift, nearby-cycle Hodge
numbers of the regular model, cyclic-covering pullback, stationary-phase
reindexing) reproduces the same normalized spectrum and serves as a
built-in cross-check.  Grid sweeps over millions of parameter pairs run
through a compiled kernel when available (see :mod:`hyperhodge.grid`).
"""

from .errors import (
    Empty,
    EmptySpectrum,
    IndexOutOfRange,
    LengthMismatch,
    NotConfluent,
    NotIncreasing,
    NotPolynomial,
    NotSplitting,
    NotStrong,
    OutOfRange,
    Resonant,
    SearchExhausted,
    UnitEigenvalue,
    ValidationError,
    WrongOrientation,
    WrongPoint,
)
from .grid import backend_name, sweep_balanced, sweep_confluent
from .params import (
    HypergeomParams,
    StrengthenResult,
    bar_beta,
    check_strong,
    format_rational,
    parse_rational,
    strengthen,
    validate,
)
from .spectra import (
    HodgeSpectrum,
    NearbyCycleSpectrum,
    fedorov_nu,
    kummer_pullback,
    normalize,
    relabel_infinity,
    stationary_phase_reindex,
)
from .theorem import (
    VerificationReport,
    irregular_hodge_spectrum,
    oracle_spectrum,
    p_index,
    raw_jump_spectrum,
    report_to_json,
    rho,
    verify,
)
from .weyl import (
    ThetaOperator,
    WeylElement,
    build_hypergeom,
    fourier,
    indicial_exponents,
    invert_variable,
    transformation_chain,
    kummer_pull,
    multiply,
    reduce_exponents,
    theta_to_weyl,
    weyl_to_theta,
)

__version__ = "0.1.0"

__all__ = [
    "HodgeSpectrum",
    "HypergeomParams",
    "NearbyCycleSpectrum",
    "StrengthenResult",
    "ThetaOperator",
    "VerificationReport",
    "WeylElement",
    "backend_name",
    "bar_beta",
    "build_hypergeom",
    "check_strong",
    "fedorov_nu",
    "format_rational",
    "fourier",
    "indicial_exponents",
    "invert_variable",
    "irregular_hodge_spectrum",
    "transformation_chain",
    "kummer_pull",
    "kummer_pullback",
    "multiply",
    "normalize",
    "oracle_spectrum",
    "p_index",
    "parse_rational",
    "raw_jump_spectrum",
    "reduce_exponents",
    "relabel_infinity",
    "report_to_json",
    "rho",
    "stationary_phase_reindex",
    "strengthen",
    "sweep_balanced",
    "sweep_confluent",
    "theta_to_weyl",
    "validate",
    "verify",
    "weyl_to_theta",
    # errors
    "ValidationError",
    "Empty",
    "EmptySpectrum",
    "IndexOutOfRange",
    "LengthMismatch",
    "NotConfluent",
    "NotIncreasing",
    "NotPolynomial",
    "NotSplitting",
    "NotStrong",
    "OutOfRange",
    "Resonant",
    "SearchExhausted",
    "UnitEigenvalue",
    "WrongOrientation",
    "WrongPoint",
]
