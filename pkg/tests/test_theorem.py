import random
from fractions import Fraction as F

import pytest

from hyperhodge import (
    HodgeSpectrum,
    IndexOutOfRange,
    NotConfluent,
    NotStrong,
    WrongOrientation,
    bar_beta,
    check_strong,
    irregular_hodge_spectrum,
    normalize,
    oracle_spectrum,
    p_index,
    raw_jump_spectrum,
    report_to_json,
    rho,
    stationary_phase_reindex,
    strengthen,
    validate,
    verify,
)
import hyperhodge.grid as grid


def params(alpha, beta=()):
    return validate([F(x) if isinstance(x, str) else x for x in alpha],
                    [F(x) if isinstance(x, str) else x for x in beta])


# -- rho -----------------------------------------------------------------------


def test_rho_confluent():
    p = params(["1/3", "2/3"])
    assert rho(p, 1) == F(-1, 3)
    assert rho(p, 2) == F(-2, 3)


def test_rho_interlaced():
    p = params(["1/4", "3/4"], ["0", "1/2"])
    assert rho(p, 1) == 0
    assert rho(p, 2) == 0


def test_rho_rank_one():
    assert rho(params(["1/2"]), 1) == F(-1, 2)


def test_rho_errors():
    p = params(["1/3", "2/3"])
    with pytest.raises(IndexOutOfRange):
        rho(p, 0)
    with pytest.raises(IndexOutOfRange):
        rho(p, 3)
    with pytest.raises(WrongOrientation):
        rho(params(["1/2"], ["1/3", "2/3"]), 1)


# -- p_index -------------------------------------------------------------------


def test_p_index_reference():
    p = params(["1/3", "2/3"])
    assert p_index(p, 1) == -1
    assert p_index(p, 2) == -1
    for k in (1, 2):
        frac = (p.mu * p.alpha[k - 1]) % 1
        assert rho(p, k) == frac + p_index(p, k)


def test_p_index_shifted_instance():
    p = params(["5/16", "9/16"])
    assert p_index(p, 1) == -1


def test_p_index_requires_strong():
    with pytest.raises(NotStrong):
        p_index(params(["1/4", "1/2"]), 1)


def test_p_index_splits_rho_generally():
    rng = random.Random(11)
    farey = grid.farey_fractions(8)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = rng.randint(0, n - 1)
        chosen = rng.sample(farey, n + m)
        p = strengthen(params(sorted(chosen[:n]), sorted(chosen[n:]))).params
        for k in range(1, n + 1):
            assert rho(p, k) == (p.mu * p.alpha[k - 1]) % 1 + p_index(p, k)


# -- spectra -------------------------------------------------------------------


def test_spectrum_reference_instance():
    assert irregular_hodge_spectrum(params(["1/3", "2/3"])).entries == {
        F(0): 1,
        F(1, 3): 1,
    }


def test_spectrum_interlaced_unitary():
    assert irregular_hodge_spectrum(
        params(["1/4", "3/4"], ["0", "1/2"])
    ).entries == {F(0): 2}


def test_spectrum_rank_one():
    assert irregular_hodge_spectrum(params(["1/2"])).entries == {F(0): 1}


def test_spectrum_swaps_orientation():
    p = params(["1/2"], ["1/3", "2/3"])
    q = params(["1/3", "2/3"], ["1/2"])
    assert irregular_hodge_spectrum(p) == irregular_hodge_spectrum(q)
    assert irregular_hodge_spectrum(p).total() == 2


def test_spectrum_empty_alpha():
    p = params([], ["1/2"])
    assert irregular_hodge_spectrum(p).entries == {F(0): 1}


def test_raw_spectrum_not_normalized():
    raw = raw_jump_spectrum(params(["1/3", "2/3"]))
    assert raw.entries == {F(-1, 3): 1, F(-2, 3): 1}


def test_rank_conservation():
    rng = random.Random(23)
    farey = grid.farey_fractions(8)
    for _ in range(300):
        n = rng.randint(1, 4)
        m = rng.randint(0, 4)
        if n == m == 0:
            continue
        try:
            chosen = rng.sample(farey, n + m)
            p = params(sorted(chosen[:n]), sorted(chosen[n:]))
        except Exception:
            continue
        assert irregular_hodge_spectrum(p).total() == max(n, m)


def test_balanced_pairs_reduce_to_counting():
    rng = random.Random(5)
    farey = grid.farey_fractions(8)
    for _ in range(200):
        n = rng.randint(1, 4)
        chosen = rng.sample(farey, 2 * n)
        p = params(sorted(chosen[:n]), sorted(chosen[n:]))
        spec = irregular_hodge_spectrum(p)
        assert all(j.denominator == 1 for j in spec.entries)
        counts = [
            sum(1 for b in p.beta if b < a) - k
            for k, a in enumerate(p.alpha, start=1)
        ]
        assert spec == normalize(HodgeSpectrum.from_jumps(counts))


def test_pure_confluent_closed_form():
    rng = random.Random(6)
    farey = grid.farey_fractions(8)
    for _ in range(200):
        n = rng.randint(1, 4)
        alpha = sorted(rng.sample(farey, n))
        p = params(alpha)
        expected = normalize(
            HodgeSpectrum.from_jumps([n * a - k for k, a in enumerate(alpha, start=1)])
        )
        assert irregular_hodge_spectrum(p) == expected


# -- oracle pipeline -----------------------------------------------------------


def test_oracle_reference_instance():
    spec, inter = oracle_spectrum(params(["1/3", "2/3"]))
    assert spec.entries == {F(0): 1, F(1, 3): 1}
    assert inter.point == "infinity"
    assert inter.entries == {(F(2, 3), 0): 1, (F(1, 3), 0): 1}


def test_oracle_rank_one():
    spec, _ = oracle_spectrum(params(["1/2"]))
    assert spec.entries == {F(0): 1}


def test_oracle_with_shift():
    p = params(["1/4", "1/2"])
    spec, _ = oracle_spectrum(p)
    assert spec == irregular_hodge_spectrum(p)
    spec16, _ = oracle_spectrum(p, gamma_override=F(1, 16))
    assert spec16 == spec


def test_intermediate_invariant():
    # the spectrum at infinity carries, at (frac(mu*a_k), 1 + p_index(k)),
    # the number of indices sharing the jump value rho(k)
    rng = random.Random(17)
    farey = grid.farey_fractions(8)
    for _ in range(150):
        n = rng.randint(1, 4)
        m = rng.randint(0, n - 1)
        chosen = rng.sample(farey, n + m)
        p = params(sorted(chosen[:n]), sorted(chosen[n:]))
        strong = strengthen(p).params
        _, inter = oracle_spectrum(p)
        jumps = [rho(strong, k) for k in range(1, strong.n + 1)]
        expected = {}
        for k in range(1, strong.n + 1):
            key = ((strong.mu * strong.alpha[k - 1]) % 1, p_index(strong, k) + 1)
            expected[key] = sum(1 for j in jumps if j == jumps[k - 1])
        assert inter.entries == expected


def test_oracle_needs_confluent():
    with pytest.raises(NotConfluent):
        verify(params(["1/4", "3/4"], ["0", "1/2"]))


# -- verify --------------------------------------------------------------------


def test_verify_reference():
    rep = verify(params(["1/3", "2/3"]))
    assert rep.agrees
    assert rep.gamma_used == 0
    assert rep.raw_shift == 1
    assert rep.theorem_spectrum == rep.oracle_spectrum


def test_verify_acceptance_instance():
    rep = verify(params(["1/2", "3/4", "5/6"], ["1/3"]))
    assert rep.agrees


def test_verify_shifted_instance():
    rep = verify(params(["1/4", "1/2"]))
    assert rep.agrees
    assert rep.gamma_used == F(1, 8)
    assert rep.raw_shift == 1 + rep.params.mu * rep.gamma_used


def test_verify_report_json():
    rep = verify(params(["1/3", "2/3"]))
    obj = report_to_json(rep)
    assert obj == {
        "alpha": ["1/3", "2/3"],
        "beta": [],
        "mu": 2,
        "gamma": "0",
        "spectrum": [{"jump": "0", "mult": 1}, {"jump": "1/3", "mult": 1}],
        "oracle": [{"jump": "0", "mult": 1}, {"jump": "1/3", "mult": 1}],
        "agrees": True,
        "raw_shift": "1",
    }


def test_verify_raw_shift_formula():
    rng = random.Random(3)
    farey = grid.farey_fractions(8)
    for _ in range(150):
        n = rng.randint(1, 4)
        m = rng.randint(0, n - 1)
        chosen = rng.sample(farey, n + m)
        p = params(sorted(chosen[:n]), sorted(chosen[n:]))
        rep = verify(p)
        assert rep.agrees
        assert rep.raw_shift == 1 + p.mu * rep.gamma_used
        raw_oracle = stationary_phase_reindex(rep.intermediate)
        assert normalize(raw_oracle) == rep.oracle_spectrum


def test_shift_invariance():
    rng = random.Random(41)
    farey = grid.farey_fractions(6)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = rng.randint(0, 4)
        if n + m == 0 or n + m > len(farey):
            continue
        chosen = rng.sample(farey, n + m)
        p = params(sorted(chosen[:n]), sorted(chosen[n:]))
        base = irregular_hodge_spectrum(p)
        top = max(p.alpha + p.beta)
        for _ in range(3):
            den = rng.randint(2, 24)
            num = rng.randint(0, den - 1)
            gamma = F(num, den)
            if top + gamma >= 1:
                continue
            shifted = p.shifted(gamma)
            if any(a in set(shifted.beta) for a in shifted.alpha):
                continue
            assert irregular_hodge_spectrum(shifted) == base
