from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperhodge import (
    EmptySpectrum,
    HodgeSpectrum,
    LengthMismatch,
    NearbyCycleSpectrum,
    Resonant,
    UnitEigenvalue,
    WrongPoint,
    fedorov_nu,
    kummer_pullback,
    normalize,
    relabel_infinity,
    stationary_phase_reindex,
)
from hyperhodge.spectra import (
    POINT_INFINITY,
    POINT_ZERO,
    nearby_from_json,
    nearby_to_json,
    spectrum_from_json,
    spectrum_to_json,
)


def nbc(entries, point=POINT_ZERO):
    return NearbyCycleSpectrum(entries, point)


# -- fedorov_nu ---------------------------------------------------------------


def test_fedorov_interlaced():
    s = fedorov_nu([F(1, 3), F(2, 3)], [F(0), F(1, 2)])
    assert s.entries == {(F(1, 3), 0): 1, (F(2, 3), 0): 1}
    assert s.point == POINT_ZERO


def test_fedorov_single():
    assert fedorov_nu([F(1, 2)], [F(0)]).entries == {(F(1, 2), 0): 1}


def test_fedorov_quarters():
    s = fedorov_nu([F(1, 4), F(3, 4)], [F(0), F(1, 2)])
    assert s.entries == {(F(1, 4), 0): 1, (F(3, 4), 0): 1}


def test_fedorov_errors():
    with pytest.raises(LengthMismatch):
        fedorov_nu([F(1, 2)], [F(0), F(1, 3)])
    with pytest.raises(Resonant):
        fedorov_nu([F(1, 2), F(2, 3)], [F(0), F(1, 2)])
    with pytest.raises(LengthMismatch):
        fedorov_nu([], [])


def test_fedorov_total_and_index_bounds():
    a = [F(1, 7), F(2, 7), F(3, 7), F(5, 7)]
    b = [F(0), F(1, 4), F(1, 2), F(3, 4)]
    s = fedorov_nu(a, b)
    n = len(a)
    assert s.total() == n
    assert len(s.entries) == n
    for (_, p), _mult in s.entries.items():
        assert -n <= p <= n


# -- kummer_pullback ----------------------------------------------------------


def test_pullback_collision():
    s = nbc({(F(1, 3), 0): 1, (F(5, 6), 0): 1})
    assert kummer_pullback(s, 2).entries == {(F(2, 3), 0): 2}


def test_pullback_identity():
    s = nbc({(F(1, 3), -1): 2, (F(2, 3), 0): 1})
    assert kummer_pullback(s, 1) == s


def test_pullback_swap():
    s = nbc({(F(1, 3), 0): 1, (F(2, 3), 0): 1})
    assert kummer_pullback(s, 2).entries == {(F(2, 3), 0): 1, (F(1, 3), 0): 1}


small_keys = st.tuples(
    st.fractions(min_value=0, max_value=1, max_denominator=12).filter(lambda x: x < 1),
    st.integers(min_value=-3, max_value=3),
)


@st.composite
def nearby_spectra(draw):
    entries = draw(
        st.dictionaries(small_keys, st.integers(min_value=1, max_value=4), max_size=6)
    )
    return nbc(entries)


@given(nearby_spectra(), st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=200, deadline=None)
def test_pullback_conserves_and_composes(s, mu1, mu2):
    assert kummer_pullback(s, mu1).total() == s.total()
    once = kummer_pullback(s, mu1 * mu2)
    twice = kummer_pullback(kummer_pullback(s, mu2), mu1)
    assert once == twice


# -- relabel / reindex ---------------------------------------------------------


def test_relabel():
    s = nbc({(F(2, 3), 0): 1})
    t = relabel_infinity(s)
    assert t.entries == s.entries and t.point == POINT_INFINITY
    with pytest.raises(WrongPoint):
        relabel_infinity(t)


def test_relabel_empty():
    t = relabel_infinity(nbc({}))
    assert t.entries == {} and t.point == POINT_INFINITY


def test_relabel_preserves_all_data():
    s = nbc({(F(1, 3), -1): 2})
    assert relabel_infinity(s).entries == {(F(1, 3), -1): 2}


def test_reindex():
    s = nbc({(F(2, 3), 0): 1, (F(1, 3), 0): 1}, POINT_INFINITY)
    assert stationary_phase_reindex(s).entries == {F(2, 3): 1, F(1, 3): 1}
    s = nbc({(F(1, 2), -1): 1}, POINT_INFINITY)
    assert stationary_phase_reindex(s).entries == {F(-1, 2): 1}
    s = nbc({(F(1, 3), 0): 2}, POINT_INFINITY)
    assert stationary_phase_reindex(s).entries == {F(1, 3): 2}


def test_reindex_errors():
    with pytest.raises(WrongPoint):
        stationary_phase_reindex(nbc({(F(1, 2), 0): 1}))
    with pytest.raises(UnitEigenvalue):
        stationary_phase_reindex(nbc({(F(0), 0): 1}, POINT_INFINITY))


def test_reindex_merges_colliding_jumps():
    s = nbc({(F(1, 2), 0): 1, (F(1, 2), -1): 2}, POINT_INFINITY)
    out = stationary_phase_reindex(s)
    assert out.entries == {F(1, 2): 1, F(-1, 2): 2}
    assert out.total() == s.total()


@given(nearby_spectra())
@settings(max_examples=200, deadline=None)
def test_reindex_conserves_total(s):
    if any(a == 0 for (a, _p) in s.entries):
        return
    out = stationary_phase_reindex(relabel_infinity(s))
    assert out.total() == s.total()


# -- normalize -----------------------------------------------------------------


def test_normalize():
    assert normalize(HodgeSpectrum({F(-1, 3): 1, F(-2, 3): 1})).entries == {
        F(1, 3): 1,
        F(0): 1,
    }
    assert normalize(HodgeSpectrum({F(0): 2})).entries == {F(0): 2}
    assert normalize(HodgeSpectrum({F(5, 4): 1, F(7, 4): 2})).entries == {
        F(0): 1,
        F(1, 2): 2,
    }


def test_normalize_empty():
    with pytest.raises(EmptySpectrum):
        normalize(HodgeSpectrum({}))


@given(
    st.dictionaries(
        st.fractions(min_value=-5, max_value=5, max_denominator=8),
        st.integers(min_value=1, max_value=3),
        min_size=1,
        max_size=6,
    ),
    st.fractions(min_value=-3, max_value=3, max_denominator=8),
)
@settings(max_examples=200, deadline=None)
def test_normalize_idempotent_and_equivariant(entries, c):
    s = HodgeSpectrum(entries)
    ns = normalize(s)
    assert normalize(ns) == ns
    assert normalize(s.shifted(c)) == ns
    assert ns.min_jump() == 0
    assert ns.total() == s.total()


# -- JSON ----------------------------------------------------------------------


def test_spectrum_json_round_trip():
    s = HodgeSpectrum({F(0): 1, F(1, 3): 2, F(-5, 4): 1})
    rows = spectrum_to_json(s)
    assert rows == [
        {"jump": "-5/4", "mult": 1},
        {"jump": "0", "mult": 1},
        {"jump": "1/3", "mult": 2},
    ]
    assert spectrum_from_json(rows) == s


def test_nearby_json_round_trip():
    s = nbc({(F(1, 3), -1): 2, (F(1, 3), 0): 1, (F(2, 3), 1): 1})
    rows = nearby_to_json(s)
    assert rows == [
        {"a": "1/3", "p": -1, "mult": 2},
        {"a": "1/3", "p": 0, "mult": 1},
        {"a": "2/3", "p": 1, "mult": 1},
    ]
    assert nearby_from_json(rows) == s
