from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperhodge import (
    Empty,
    NotConfluent,
    NotIncreasing,
    NotStrong,
    OutOfRange,
    Resonant,
    ValidationError,
    bar_beta,
    check_strong,
    format_rational,
    parse_rational,
    strengthen,
    validate,
)
from hyperhodge.params import shift_candidates
from hyperhodge.theorem import rho


# -- rational text format ----------------------------------------------------


def test_parse_rational():
    assert parse_rational("1/3") == F(1, 3)
    assert parse_rational("-2/5") == F(-2, 5)
    assert parse_rational("7") == F(7)
    assert parse_rational("+3/4") == F(3, 4)


@pytest.mark.parametrize("bad", ["", "1/ 3", "1.5", "a/b", "1//2", " 1/3", "1/3 ", "1/0"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValidationError):
        parse_rational(bad)


def test_format_round_trip():
    for text in ["0", "1/3", "-5/7", "2"]:
        assert format_rational(parse_rational(text)) == text


# -- validate ----------------------------------------------------------------


def test_validate_confluent_pair():
    p = validate([F(1, 3), F(2, 3)], [])
    assert (p.n, p.m, p.mu) == (2, 0, 2)


def test_validate_resonant_pair():
    with pytest.raises(Resonant):
        validate([F(1, 2)], [F(1, 2)])


def test_validate_interlaced_pair():
    p = validate([F(1, 4), F(3, 4)], [F(0), F(1, 2)])
    assert p.mu == 0
    for a in p.alpha:
        for b in p.beta:
            assert a != b


def test_validate_rejects_decreasing():
    with pytest.raises(NotIncreasing):
        validate([F(2, 3), F(1, 3)], [])
    with pytest.raises(NotIncreasing):
        validate([F(1, 3), F(1, 3)], [])


def test_validate_rejects_out_of_range():
    with pytest.raises(OutOfRange):
        validate([F(1, 2), F(1)], [])
    with pytest.raises(OutOfRange):
        validate([F(-1, 3)], [])


def test_validate_rejects_empty_pair():
    with pytest.raises(Empty):
        validate([], [])


def test_zero_allowed_in_weak_validation():
    p = validate([F(0), F(1, 3)], [])
    assert p.alpha[0] == 0


# -- bar_beta ----------------------------------------------------------------


def test_bar_beta_merges():
    p = validate([F(1, 6), F(5, 12), F(11, 12)], [F(1, 3)])
    assert bar_beta(p) == (F(0), F(1, 3), F(1, 2))


def test_bar_beta_empty_beta():
    assert bar_beta(validate([F(1, 3), F(2, 3)], [])) == (F(0), F(1, 2))
    assert bar_beta(validate([F(1, 2)], [])) == (F(0),)


def test_bar_beta_allows_repeats():
    p = validate([F(1, 5), F(2, 5), F(3, 5)], [F(1, 2)])
    assert bar_beta(p) == (F(0), F(1, 2), F(1, 2))


def test_bar_beta_needs_confluent():
    with pytest.raises(NotConfluent):
        bar_beta(validate([F(1, 4), F(3, 4)], [F(0), F(1, 2)]))


# -- check_strong ------------------------------------------------------------


def test_check_strong_holds():
    assert check_strong(validate([F(1, 3), F(2, 3)], []))


def test_check_strong_fails_on_merged_collision():
    # alpha_2 = 1/2 appears among the merged lower exponents
    assert not check_strong(validate([F(1, 4), F(1, 2)], []))


def test_check_strong_fails_on_boundary():
    assert not check_strong(validate([F(0), F(1, 3)], []))


def test_check_strong_needs_confluent():
    with pytest.raises(NotConfluent):
        check_strong(validate([F(1, 4), F(3, 4)], [F(0), F(1, 2)]))


# -- strengthen --------------------------------------------------------------


def test_strengthen_noop_when_strong():
    p = validate([F(1, 3), F(2, 3)], [])
    res = strengthen(p)
    assert res.gamma == 0
    assert res.params == p


def test_strengthen_first_candidate():
    # denominators lcm = 4, so the schedule starts at 1/8; that shift
    # already separates alpha from {0, 1/2} and stays inside (0, 1)
    p = validate([F(1, 4), F(1, 2)], [])
    res = strengthen(p)
    assert res.gamma == F(1, 8)
    assert res.gamma == next(iter(shift_candidates(p)))
    assert res.params.alpha == (F(3, 8), F(5, 8))
    assert check_strong(res.params)
    assert all((p.mu * a) % 1 != 0 for a in res.params.alpha)


def test_strengthen_moves_boundary_entry():
    p = validate([F(0), F(1, 3)], [])
    res = strengthen(p)
    assert res.gamma > 0
    assert check_strong(res.params)
    assert all(0 < a < 1 for a in res.params.alpha)


def test_strengthen_needs_confluent():
    with pytest.raises(NotConfluent):
        strengthen(validate([F(1, 4)], [F(1, 2)]))


def test_strengthen_override():
    p = validate([F(1, 4), F(1, 2)], [])
    res = strengthen(p, gamma_override=F(1, 16))
    assert res.gamma == F(1, 16)
    assert res.params.alpha == (F(5, 16), F(9, 16))
    assert check_strong(res.params)
    # 1/4 + 1/4 lands on the merged exponent 1/2
    with pytest.raises(NotStrong):
        strengthen(p, gamma_override=F(1, 4))
    with pytest.raises(NotStrong):
        strengthen(p, gamma_override=F(0))


# -- invariants --------------------------------------------------------------

farey8 = sorted({F(p, q) for q in range(1, 9) for p in range(q)})


@st.composite
def confluent_params(draw, max_n=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=n - 1))
    chosen = draw(
        st.lists(st.sampled_from(farey8), min_size=n + m, max_size=n + m, unique=True)
    )
    return validate(sorted(chosen[:n]), sorted(chosen[n:]))


@given(confluent_params())
@settings(max_examples=150, deadline=None)
def test_bar_beta_shape(p):
    ov = bar_beta(p)
    assert len(ov) == p.n
    assert list(ov) == sorted(ov)
    merged = sorted(list(p.beta) + [F(l, p.mu) for l in range(p.mu)])
    assert list(ov) == merged


@given(confluent_params())
@settings(max_examples=150, deadline=None)
def test_strengthen_idempotent_and_shifts_jumps(p):
    res = strengthen(p)
    assert strengthen(res.params).gamma == 0
    # every jump moves by exactly mu * gamma
    for k in range(1, p.n + 1):
        assert rho(res.params, k) == rho(p, k) + p.mu * res.gamma


@given(confluent_params())
@settings(max_examples=150, deadline=None)
def test_strong_implies_nonintegral_multiples(p):
    res = strengthen(p)
    assert check_strong(res.params)
    for a in res.params.alpha:
        assert (p.mu * a) % 1 != 0
