"""Irregular Hodge jumps of a hypergeometric connection, two ways.

The direct route evaluates the closed-form jump values

    rho(k) = mu * alpha_k - k + #{i : beta_i < alpha_k},        mu = n - m,

and reads the spectrum off as the multiset {rho(k)} (normalized so the
minimum jump is 0, since the filtration is canonical only up to a global
shift).

The oracle route never looks at that formula: it shifts the parameters to
strong non-resonance, takes the nearby-cycle Hodge numbers of the associated
regular operator, pulls them back along the degree-mu covering, moves them
to infinity, and reindexes jumps as a + p.  ``verify`` runs both routes and
compares the normalized results exactly.

The raw (un-normalized) outputs of the two routes differ by the constant
1 + mu * gamma: the oracle's Hodge indices come from a lattice-point count
that exceeds the floor used in the direct formula by exactly one, and the
strengthening shift gamma moves every jump by mu * gamma.  Both effects are
global shifts, so they are invisible after normalization; ``verify`` records
the observed constant as ``raw_shift``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, NotConfluent, NotStrong, WrongOrientation
from .params import (
    HypergeomParams,
    StrengthenResult,
    bar_beta,
    check_strong,
    format_rational,
    strengthen,
)
from .spectra import (
    HodgeSpectrum,
    NearbyCycleSpectrum,
    fedorov_nu,
    kummer_pullback,
    normalize,
    relabel_infinity,
    spectrum_to_json,
    stationary_phase_reindex,
)


def rho(params: HypergeomParams, k: int) -> Fraction:
    """The k-th jump value (1-based), defined for n >= m."""
    if params.mu < 0:
        raise WrongOrientation(
            f"rho needs n >= m, got n = {params.n}, m = {params.m}; swap the pair"
        )
    if not 1 <= k <= params.n:
        raise IndexOutOfRange(f"k = {k} outside 1..{params.n}")
    ak = params.alpha[k - 1]
    below = sum(1 for b in params.beta if b < ak)
    return params.mu * ak - k + below


def p_index(params: HypergeomParams, k: int) -> int:
    """Integer part of rho(k): floor(mu*alpha_k) + #{i : beta_i < alpha_k} - k.

    Requires strong non-resonance, which makes mu*alpha_k non-integral, so
    rho(k) = frac(mu*alpha_k) + p_index(k) splits rho into its fractional
    and integer parts.
    """
    if not check_strong(params):
        raise NotStrong("p_index needs strongly non-resonant parameters")
    if not 1 <= k <= params.n:
        raise IndexOutOfRange(f"k = {k} outside 1..{params.n}")
    ak = params.alpha[k - 1]
    below = sum(1 for b in params.beta if b < ak)
    return (params.mu * ak) // 1 + below - k


def _raw_jumps(params: HypergeomParams) -> list[Fraction]:
    """Un-normalized jump multiset {rho(k)} for an n >= m pair."""
    return [rho(params, k) for k in range(1, params.n + 1)]


def raw_jump_spectrum(params: HypergeomParams) -> HodgeSpectrum:
    """Un-normalized jump multiset {rho(k)}.

    For n < m the values come from the swapped pair (beta, alpha):
    inverting the base coordinate exchanges the roles of the two sequences.
    """
    if params.mu < 0:
        params = HypergeomParams(params.beta, params.alpha)
    return HodgeSpectrum.from_jumps(_raw_jumps(params))


def irregular_hodge_spectrum(params: HypergeomParams) -> HodgeSpectrum:
    """Normalized jump multiset; total multiplicity max(n, m)."""
    return normalize(raw_jump_spectrum(params))


def oracle_spectrum(
    params: HypergeomParams, gamma_override: Fraction | None = None
) -> tuple[HodgeSpectrum, NearbyCycleSpectrum]:
    """Spectrum through the nearby-cycle pipeline, with the intermediate
    spectrum at infinity (the stage whose reindexing yields the jumps).

    Pipeline: strengthen -> nearby-cycle numbers of the regular model ->
    pullback along the degree-mu covering -> relabel at infinity ->
    stationary-phase reindexing -> normalize.
    """
    strong = strengthen(params, gamma_override)
    at_inf = _pipeline_intermediate(strong)
    return normalize(stationary_phase_reindex(at_inf)), at_inf


def _pipeline_intermediate(strong: StrengthenResult) -> NearbyCycleSpectrum:
    p = strong.params
    nu_zero = fedorov_nu(p.alpha, bar_beta(p))
    return relabel_infinity(kummer_pullback(nu_zero, p.mu))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of running both routes on one parameter pair."""

    params: HypergeomParams
    gamma_used: Fraction
    theorem_spectrum: HodgeSpectrum
    oracle_spectrum: HodgeSpectrum
    intermediate: NearbyCycleSpectrum
    agrees: bool
    raw_shift: Fraction | None


def verify(
    params: HypergeomParams, gamma_override: Fraction | None = None
) -> VerificationReport:
    """Run the direct formula and the oracle pipeline and compare.

    Disagreement is reported, not raised.  ``raw_shift`` is the constant
    difference oracle - direct between the two un-normalized multisets when
    they are translates of each other (equivalently: when the normalized
    spectra agree), else None.
    """
    if params.mu <= 0:
        raise NotConfluent(
            f"verification needs n > m, got n = {params.n}, m = {params.m}"
        )
    strong = strengthen(params, gamma_override)
    at_inf = _pipeline_intermediate(strong)
    oracle_raw = stationary_phase_reindex(at_inf)
    theorem_raw = HodgeSpectrum.from_jumps(_raw_jumps(params))

    raw_shift = None
    a, b = theorem_raw.jumps(), oracle_raw.jumps()
    if len(a) == len(b):
        d = b[0] - a[0]
        if all(y - x == d for x, y in zip(a, b)):
            raw_shift = d

    theorem_spec = normalize(theorem_raw)
    oracle_spec = normalize(oracle_raw)
    return VerificationReport(
        params=params,
        gamma_used=strong.gamma,
        theorem_spectrum=theorem_spec,
        oracle_spectrum=oracle_spec,
        intermediate=at_inf,
        agrees=theorem_spec == oracle_spec,
        raw_shift=raw_shift,
    )


def report_to_json(report: VerificationReport) -> dict:
    return {
        "alpha": [format_rational(a) for a in report.params.alpha],
        "beta": [format_rational(b) for b in report.params.beta],
        "mu": report.params.mu,
        "gamma": format_rational(report.gamma_used),
        "spectrum": spectrum_to_json(report.theorem_spectrum),
        "oracle": spectrum_to_json(report.oracle_spectrum),
        "agrees": report.agrees,
        "raw_shift": None if report.raw_shift is None else format_rational(report.raw_shift),
    }
