"""Grid sweeps over all parameter pairs with bounded denominators.

The heavy lifting runs in a kernel module: the compiled extension
``_fastcore`` when it was built, otherwise the pure-Python twin
``_purecore``.  Selection happens once, at import; :func:`backend_name`
reports the choice and :func:`kernels` lists everything available (the
benchmark script uses that to compare the two).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import _purecore

try:
    from . import _fastcore
except ImportError:  # extension not built; pure Python does the job, slower
    _fastcore = None

_ACTIVE = _fastcore if _fastcore is not None else _purecore


def backend_name() -> str:
    return _ACTIVE.LABEL


def kernels() -> dict:
    """Available kernel modules keyed by label."""
    out = {_purecore.LABEL: _purecore}
    if _fastcore is not None:
        out[_fastcore.LABEL] = _fastcore
    return out


def farey_fractions(max_den: int) -> list[Fraction]:
    """All fractions in [0, 1) with reduced denominator <= max_den, sorted."""
    return sorted(
        {Fraction(p, q) for q in range(1, max_den + 1) for p in range(q)}
    )


@dataclass(frozen=True)
class ConfluentSweep:
    """Tallies from running both routes over the full confluent grid."""

    cases: int
    disagreements: int
    rank_violations: int
    shift_undefined: int
    shift_unexpected: int
    unit_eigenvalue_hits: int
    shifted_cases: int
    elapsed: float
    backend: str

    @property
    def all_agree(self) -> bool:
        return self.disagreements == 0


@dataclass(frozen=True)
class BalancedSweep:
    """Tallies from the n = m grid: integrality and counting-formula match."""

    cases: int
    nonintegral: int
    mismatches: int
    elapsed: float
    backend: str


def sweep_confluent(max_n: int = 4, max_den: int = 8, kernel=None) -> ConfluentSweep:
    k = kernel if kernel is not None else _ACTIVE
    t0 = time.perf_counter()
    raw = k.sweep_confluent(max_n, max_den)
    dt = time.perf_counter() - t0
    return ConfluentSweep(
        cases=raw["cases"],
        disagreements=raw["cases"] - raw["agree"],
        rank_violations=raw["cases"] - raw["rank_ok"],
        shift_undefined=raw["cases"] - raw["shift_defined"],
        shift_unexpected=raw["cases"] - raw["shift_expected"],
        unit_eigenvalue_hits=raw["strong_violations"],
        shifted_cases=raw["gamma_positive"],
        elapsed=dt,
        backend=k.LABEL,
    )


def sweep_balanced(max_n: int = 4, max_den: int = 8, kernel=None) -> BalancedSweep:
    k = kernel if kernel is not None else _ACTIVE
    t0 = time.perf_counter()
    raw = k.sweep_balanced(max_n, max_den)
    dt = time.perf_counter() - t0
    return BalancedSweep(
        cases=raw["cases"],
        nonintegral=raw["cases"] - raw["integral"],
        mismatches=raw["cases"] - raw["formula_match"],
        elapsed=dt,
        backend=k.LABEL,
    )


@dataclass(frozen=True)
class KernelCase:
    """One case through a kernel, lifted back to exact fractions."""

    agrees: bool
    gamma: Fraction
    raw_shift: Fraction | None
    theorem_jumps: tuple[Fraction, ...]
    oracle_jumps: tuple[Fraction, ...]
    backend: str


def verify_case(alpha, beta, kernel=None) -> KernelCase:
    """Run one confluent pair of Fractions through a kernel."""
    k = kernel if kernel is not None else _ACTIVE
    a = [(Fraction(x).numerator, Fraction(x).denominator) for x in alpha]
    b = [(Fraction(x).numerator, Fraction(x).denominator) for x in beta]
    raw = k.verify_case(a, b)
    q = raw["q"]
    return KernelCase(
        agrees=raw["agrees"],
        gamma=Fraction(raw["gamma_num"], q),
        raw_shift=Fraction(raw["raw_shift_num"], q) if raw["agrees"] else None,
        theorem_jumps=tuple(Fraction(x, q) for x in raw["theorem_nums"]),
        oracle_jumps=tuple(Fraction(x, q) for x in raw["oracle_nums"]),
        backend=k.LABEL,
    )


def grid_size(max_n: int, max_den: int, balanced: bool = False) -> int:
    """Number of valid pairs in the sweep, counted without running it."""
    from math import comb

    nv = len(farey_fractions(max_den))
    if balanced:
        return sum(comb(nv, n) * comb(nv - n, n) for n in range(1, max_n + 1))
    return sum(
        comb(nv, n) * comb(nv - n, m)
        for n in range(1, max_n + 1)
        for m in range(0, n)
    )
