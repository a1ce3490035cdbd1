"""Combinatorics of filtered nearby-cycle spectra and Hodge spectra.

A nearby-cycle spectrum records, at a chosen fiber point (0 or infinity),
the dimensions nu^p of the Hodge graded pieces of the monodromy eigenspaces.
Eigenvalues are kept exact through their exponent residue a in [0, 1): the
eigenvalue is exp(-2*pi*i*a) and never materializes as a float.

A Hodge spectrum is the finite multiset of jump values of a real-indexed
filtration; it is canonical only up to a global rational shift, and
:func:`normalize` picks the representative whose minimum jump is 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    EmptySpectrum,
    LengthMismatch,
    NotIncreasing,
    OutOfRange,
    Resonant,
    UnitEigenvalue,
    ValidationError,
    WrongPoint,
)
from .params import format_rational, parse_rational

POINT_ZERO = "zero"
POINT_INFINITY = "infinity"


def _frac(x: Fraction) -> Fraction:
    return x - (x // 1)


@dataclass(frozen=True)
class NearbyCycleSpectrum:
    """Map (eigenvalue exponent a in [0,1), Hodge index p) -> multiplicity."""

    entries: dict[tuple[Fraction, int], int]
    point: str = POINT_ZERO

    def __post_init__(self):
        if self.point not in (POINT_ZERO, POINT_INFINITY):
            raise ValidationError(f"unknown fiber point tag {self.point!r}")
        clean: dict[tuple[Fraction, int], int] = {}
        for (a, p), mult in self.entries.items():
            a = Fraction(a)
            if not (0 <= a < 1):
                raise OutOfRange(f"eigenvalue exponent {a} outside [0, 1)")
            if mult < 1:
                raise ValidationError(f"multiplicity at ({a}, {p}) must be >= 1")
            clean[(a, int(p))] = int(mult)
        object.__setattr__(self, "entries", clean)

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self):
        return tuple(sorted(self.entries.items()))


@dataclass(frozen=True)
class HodgeSpectrum:
    """Finite multiset of rational jump values."""

    entries: dict[Fraction, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Fraction, int] = {}
        for jump, mult in self.entries.items():
            if mult < 1:
                raise ValidationError(f"multiplicity at jump {jump} must be >= 1")
            clean[Fraction(jump)] = int(mult)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_jumps(cls, jumps) -> "HodgeSpectrum":
        out: dict[Fraction, int] = {}
        for j in jumps:
            j = Fraction(j)
            out[j] = out.get(j, 0) + 1
        return cls(out)

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self):
        return tuple(sorted(self.entries.items()))

    def jumps(self) -> tuple[Fraction, ...]:
        """All jumps, repeated by multiplicity, ascending."""
        out = []
        for j, mult in self.sorted_items():
            out.extend([j] * mult)
        return tuple(out)

    def min_jump(self) -> Fraction:
        if not self.entries:
            raise EmptySpectrum("empty spectrum has no minimum jump")
        return min(self.entries)

    def shifted(self, c: Fraction) -> "HodgeSpectrum":
        c = Fraction(c)
        return HodgeSpectrum({j + c: m for j, m in self.entries.items()})


def fedorov_nu(a_seq, b_seq) -> NearbyCycleSpectrum:
    """Nearby-cycle Hodge numbers at 0 of the regular operator with upper
    exponents ``a_seq`` and lower exponents ``b_seq`` (equal lengths; each
    eigenvalue carries a single Jordan block).

    Entry k contributes multiplicity 1 at (a_k, #{i : b_i < a_k} - k).
    """
    a = tuple(Fraction(x) for x in a_seq)
    b = tuple(Fraction(x) for x in b_seq)
    if len(a) != len(b):
        raise LengthMismatch(f"sequence lengths differ: {len(a)} vs {len(b)}")
    if len(a) == 0:
        raise LengthMismatch("need at least one exponent")
    for i in range(1, len(a)):
        if a[i - 1] >= a[i]:
            raise NotIncreasing("upper exponents must be strictly increasing")
    for x in a:
        if not (0 < x < 1):
            raise OutOfRange(f"upper exponent {x} outside (0, 1)")
    bset = set(b)
    for x in a:
        if x in bset:
            raise Resonant(f"shared exponent {x} between the two sequences")
    entries: dict[tuple[Fraction, int], int] = {}
    for k, ak in enumerate(a, start=1):
        p = sum(1 for x in b if x < ak) - k
        entries[(ak, p)] = 1
    return NearbyCycleSpectrum(entries, POINT_ZERO)


def kummer_pullback(s: NearbyCycleSpectrum, mu: int) -> NearbyCycleSpectrum:
    """Pullback along the degree-mu cyclic covering: the eigenvalue exponent
    a becomes frac(mu * a); colliding keys add up, total multiplicity is
    preserved and the Hodge index p is untouched."""
    if mu < 1:
        raise ValidationError(f"covering order must be a positive integer, got {mu}")
    entries: dict[tuple[Fraction, int], int] = {}
    for (a, p), mult in s.entries.items():
        key = (_frac(mu * a), p)
        entries[key] = entries.get(key, 0) + mult
    return NearbyCycleSpectrum(entries, s.point)


def relabel_infinity(s: NearbyCycleSpectrum) -> NearbyCycleSpectrum:
    """Re-tag a spectrum at 0 as a spectrum at infinity (the coordinate
    inversion exchanges the two points; the data is unchanged)."""
    if s.point != POINT_ZERO:
        raise WrongPoint(f"expected a spectrum at {POINT_ZERO}, got {s.point}")
    return NearbyCycleSpectrum(dict(s.entries), POINT_INFINITY)


def stationary_phase_reindex(s: NearbyCycleSpectrum) -> HodgeSpectrum:
    """Convert nearby-cycle data at infinity into filtration jumps a + p.

    Requires that no eigenvalue equals 1 (no key with a = 0); colliding
    jumps add up, total multiplicity is preserved.
    """
    if s.point != POINT_INFINITY:
        raise WrongPoint(f"expected a spectrum at {POINT_INFINITY}, got {s.point}")
    entries: dict[Fraction, int] = {}
    for (a, p), mult in s.entries.items():
        if a == 0:
            raise UnitEigenvalue("eigenvalue 1 present (exponent a = 0)")
        jump = a + p
        entries[jump] = entries.get(jump, 0) + mult
    return HodgeSpectrum(entries)


def normalize(s: HodgeSpectrum) -> HodgeSpectrum:
    """Shift all jumps by one constant so that the minimum jump is 0."""
    if not s.entries:
        raise EmptySpectrum("cannot normalize an empty spectrum")
    return s.shifted(-s.min_jump())


# ---------------------------------------------------------------------------
# JSON forms
# ---------------------------------------------------------------------------


def spectrum_to_json(s: HodgeSpectrum) -> list[dict]:
    """``[{"jump": "p/q", "mult": k}, ...]`` sorted by ascending jump."""
    return [
        {"jump": format_rational(j), "mult": m} for j, m in s.sorted_items()
    ]


def spectrum_from_json(obj) -> HodgeSpectrum:
    entries: dict[Fraction, int] = {}
    for row in obj:
        jump = parse_rational(row["jump"])
        mult = int(row["mult"])
        if jump in entries:
            raise ValidationError(f"duplicate jump {row['jump']} in spectrum JSON")
        entries[jump] = mult
    return HodgeSpectrum(entries)


def nearby_to_json(s: NearbyCycleSpectrum) -> list[dict]:
    """``[{"a": "p/q", "p": k, "mult": m}, ...]`` sorted by (a, p)."""
    return [
        {"a": format_rational(a), "p": p, "mult": m}
        for (a, p), m in s.sorted_items()
    ]


def nearby_from_json(obj, point: str = POINT_ZERO) -> NearbyCycleSpectrum:
    entries: dict[tuple[Fraction, int], int] = {}
    for row in obj:
        key = (parse_rational(row["a"]), int(row["p"]))
        if key in entries:
            raise ValidationError(f"duplicate key {row} in spectrum JSON")
        entries[key] = int(row["mult"])
    return NearbyCycleSpectrum(entries, point)
