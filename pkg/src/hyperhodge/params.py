"""Parameter data for hypergeometric operators.

A parameter pair is two strictly increasing sequences of rationals in
[0, 1), written alpha (length n) and beta (length m), with alpha_i never
equal to beta_j (non-resonance).  The confluent operations additionally
need the *strong* form: all entries in the open interval (0, 1) and alpha
disjoint from the merged sequence ``bar_beta`` (which in particular forces
mu * alpha_i to be non-integral, mu = n - m).  ``strengthen`` produces a
uniform shift gamma that upgrades a merely non-resonant pair to a strong
one; the spectrum downstream is invariant under such shifts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    Empty,
    NotConfluent,
    NotIncreasing,
    NotStrong,
    OutOfRange,
    Resonant,
    SearchExhausted,
    ValidationError,
)

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")

#: Number of shift candidates tried by :func:`strengthen`.
SHIFT_SEARCH_DEPTH = 40


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer ``"p"`` (optional sign, no spaces)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValidationError(f"not a rational literal: {text!r} (expected p/q or p)")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValidationError(f"zero denominator in rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`: ``1/3 -> "1/3"``, ``2 -> "2"``."""
    return str(Fraction(value))


def _checked_sequence(name: str, entries) -> tuple[Fraction, ...]:
    out = tuple(Fraction(e) for e in entries)
    for i, e in enumerate(out):
        if not (0 <= e < 1):
            raise OutOfRange(f"{name}_{i + 1} = {e} lies outside [0, 1)")
    for i in range(1, len(out)):
        if out[i - 1] >= out[i]:
            raise NotIncreasing(
                f"{name} is not strictly increasing: {name}_{i} = {out[i - 1]} >= "
                f"{name}_{i + 1} = {out[i]}"
            )
    return out


@dataclass(frozen=True)
class HypergeomParams:
    """A validated non-resonant parameter pair.

    Invariants (enforced on construction): both sequences strictly
    increasing with entries in [0, 1), not both empty, and no shared entry.
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", _checked_sequence("alpha", self.alpha))
        object.__setattr__(self, "beta", _checked_sequence("beta", self.beta))
        if not self.alpha and not self.beta:
            raise Empty("at least one of alpha, beta must be nonempty")
        bset = set(self.beta)
        for i, a in enumerate(self.alpha):
            if a in bset:
                j = self.beta.index(a)
                raise Resonant(
                    f"non-resonance fails: alpha_{i + 1} = beta_{j + 1} = {a}"
                )

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def m(self) -> int:
        return len(self.beta)

    @property
    def mu(self) -> int:
        return self.n - self.m

    def shifted(self, gamma: Fraction) -> "HypergeomParams":
        """Both sequences shifted by the same constant (revalidated)."""
        g = Fraction(gamma)
        return HypergeomParams(
            tuple(a + g for a in self.alpha), tuple(b + g for b in self.beta)
        )


def validate(alpha, beta) -> HypergeomParams:
    """Build a :class:`HypergeomParams` from two iterables of rationals."""
    return HypergeomParams(tuple(alpha), tuple(beta))


def bar_beta(params: HypergeomParams) -> tuple[Fraction, ...]:
    """Weakly increasing merge of beta with 0, 1/mu, ..., (mu-1)/mu.

    Defined only in the confluent case mu = n - m > 0; the result has
    length n and may contain repeats.
    """
    mu = params.mu
    if mu <= 0:
        raise NotConfluent(f"bar_beta needs mu > 0, got mu = {mu}")
    return tuple(sorted(list(params.beta) + [Fraction(l, mu) for l in range(mu)]))


def check_strong(params: HypergeomParams) -> bool:
    """True iff all entries lie in (0, 1) and alpha avoids ``bar_beta``.

    The second clause implies mu * alpha_i is never an integer.
    """
    ov = set(bar_beta(params))  # raises NotConfluent when mu <= 0
    for x in params.alpha + params.beta:
        if not (0 < x < 1):
            return False
    return all(a not in ov for a in params.alpha)


@dataclass(frozen=True)
class StrengthenResult:
    """A strongly non-resonant pair plus the shift that produced it."""

    params: HypergeomParams
    gamma: Fraction


def shift_candidates(params: HypergeomParams):
    """Deterministic shift schedule: 1/(2^s * D), s = 1..SHIFT_SEARCH_DEPTH.

    D is the lcm of every denominator appearing in alpha, beta and the
    merged-in fractions l/mu.  The first candidate 1/(2D) already works for
    any rational input (shifted entries get odd numerators over 2D while
    the forbidden values keep even ones), so the deeper candidates are a
    safety net only.
    """
    mu = params.mu
    dens = [x.denominator for x in params.alpha + params.beta]
    dens += [Fraction(l, mu).denominator for l in range(mu)]
    base = lcm(*dens)
    for s in range(1, SHIFT_SEARCH_DEPTH + 1):
        yield Fraction(1, (2**s) * base)


def _admissible(params: HypergeomParams, gamma: Fraction) -> HypergeomParams | None:
    """Shifted params when the shift keeps everything valid and strong."""
    top = max(params.alpha + params.beta)
    if top + gamma >= 1:
        return None
    shifted = params.shifted(gamma)
    return shifted if check_strong(shifted) else None


def strengthen(params: HypergeomParams, gamma_override: Fraction | None = None) -> StrengthenResult:
    """Shift (alpha, beta) by the first admissible gamma from the schedule.

    Returns gamma = 0 when the pair is already strong.  ``gamma_override``
    forces a specific shift and raises :class:`NotStrong` when that shift
    does not yield a strong pair.
    """
    mu = params.mu
    if mu <= 0:
        raise NotConfluent(f"strengthen needs mu > 0, got mu = {mu}")
    if gamma_override is not None:
        g = Fraction(gamma_override)
        if g < 0:
            raise NotStrong(f"shift must be >= 0, got {g}")
        if g == 0:
            if not check_strong(params):
                raise NotStrong("shift 0 requested but the pair is not strong")
            return StrengthenResult(params, Fraction(0))
        shifted = _admissible(params, g)
        if shifted is None:
            raise NotStrong(f"shift {g} does not produce a strong pair")
        return StrengthenResult(shifted, g)
    if check_strong(params):
        return StrengthenResult(params, Fraction(0))
    for gamma in shift_candidates(params):
        shifted = _admissible(params, gamma)
        if shifted is not None:
            return StrengthenResult(shifted, gamma)
    raise SearchExhausted(
        f"no admissible shift within {SHIFT_SEARCH_DEPTH} candidates for "
        f"alpha={params.alpha}, beta={params.beta}"
    )
