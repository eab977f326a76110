import math

import pytest
from hypothesis import given, settings, strategies as st

import fellowtravel as ft
from fellowtravel import GenSymbol
from fellowtravel.baumslag import (Block, BSMetricConstants, BSNormalForm,
                                   BSParams, BSParseError, bs_metric_bounds,
                                   bs_mul_gen, bs_normal_form_of, bs_parse,
                                   bs_sharpness_family, bs_to_word, bs_validate,
                                   calibrate_metric_constants)

from oracles import britton_equal, britton_is_identity

P12 = BSParams(1, 2)
P23 = BSParams(2, 3)

A = GenSymbol(0, False)
A_INV = GenSymbol(0, True)
T = GenSymbol(1, False)
T_INV = GenSymbol(1, True)


def test_params_checked():
    with pytest.raises(ValueError):
        BSParams.checked(2, 2)
    with pytest.raises(ValueError):
        BSParams.checked(0, 3)


def test_validate_examples():
    assert bs_validate(BSNormalForm((), 3), P12)
    assert not bs_validate(BSNormalForm((Block(2, -1),), 0), P23)
    # t^-1 t with a zero middle power flips the t sign: not freely reduced.
    assert not bs_validate(BSNormalForm((Block(0, -1), Block(0, 1)), 0), P12)


def test_serialize_examples():
    model = ft.BaumslagSolitar(1, 2)
    assert model.format(bs_to_word(BSNormalForm((), -2))) == "AA"
    assert model.format(bs_to_word(BSNormalForm((Block(0, 1),), 1))) == "ta"


def test_word_length_formula():
    nf = BSNormalForm((Block(1, 1), Block(0, -1)), -3)
    assert len(bs_to_word(nf)) == 2 + 1 + 3


def test_parse_roundtrip():
    model = ft.BaumslagSolitar(2, 3)
    for text in ("", "a", "AAA", "ta", "aataT", "atA"):
        nf = bs_parse(model.parse(text), P23)
        assert model.format(bs_to_word(nf)) == text


def test_parse_rejects_free_reduction_violation():
    model = ft.BaumslagSolitar(1, 2)
    with pytest.raises(BSParseError):
        bs_parse(model.parse("tT"), P12)


def test_parse_rejects_negative_block_power():
    model = ft.BaumslagSolitar(1, 2)
    with pytest.raises(BSParseError) as err:
        bs_parse(model.parse("Ata"), P12)
    assert err.value.position == 1


def test_parse_rejects_mixed_tail():
    model = ft.BaumslagSolitar(1, 2)
    with pytest.raises(BSParseError) as err:
        bs_parse(model.parse("taA"), P12)
    assert err.value.position == 2


def test_mul_examples():
    assert bs_mul_gen(BSNormalForm((), 0), A, P12) == BSNormalForm((), 1)
    # a^2 t = t a in BS(1,2)
    assert bs_mul_gen(BSNormalForm((), 2), T, P12) == \
        BSNormalForm((Block(0, 1),), 1)
    # t a t^-1 = a^2: multiplying t a by t^-1 cancels the block
    assert bs_mul_gen(BSNormalForm((Block(0, 1),), 1), T_INV, P12) == \
        BSNormalForm((), 2)


def test_normal_form_of_examples():
    model = ft.BaumslagSolitar(1, 2)
    assert bs_normal_form_of((), P12) == BSNormalForm((), 0)
    assert bs_normal_form_of(model.parse("taT"), P12) == BSNormalForm((), 2)
    assert bs_normal_form_of(model.parse("aatA"), P12) == \
        BSNormalForm((Block(0, 1),), 0)


@pytest.mark.parametrize("params", [P12, P23])
def test_negative_tail_division_convention(params):
    # k = m*q + r with 0 <= r < q even for negative k.
    nf = bs_mul_gen(BSNormalForm((), -1), T, params)
    assert bs_validate(nf, params)
    word = bs_to_word(BSNormalForm((), -1)) + (T,)
    assert britton_equal(word, bs_to_word(nf), params.p, params.q)


bs_words = st.lists(
    st.sampled_from([A, A_INV, T, T_INV]), max_size=14).map(tuple)


@settings(max_examples=200, deadline=None)
@given(bs_words)
def test_normal_form_agrees_with_relation_oracle(word):
    for params in (P12, P23):
        nf = bs_normal_form_of(word, params)
        assert bs_validate(nf, params)
        assert britton_equal(word, bs_to_word(nf), params.p, params.q)


@settings(max_examples=100, deadline=None)
@given(bs_words, st.sampled_from([A, A_INV, T, T_INV]))
def test_mul_then_inverse_restores(word, s):
    for params in (P12, P23):
        nf = bs_normal_form_of(word, params)
        assert bs_mul_gen(bs_mul_gen(nf, s, params), s.inverse(), params) == nf


@pytest.mark.parametrize("params", [P12, P23])
def test_prefix_closed_on_sample(params):
    model = ft.BaumslagSolitar(params.p, params.q)
    ball = ft.bfs_ball(model, 6)
    for g in ball.elements():
        word = bs_to_word(g)
        for j in range(len(word) + 1):
            prefix_nf = bs_parse(word[:j], params)
            assert bs_validate(prefix_nf, params)
            # Uniqueness: parsing equals folding multiplication.
            assert prefix_nf == bs_normal_form_of(word[:j], params)


def test_identity_word_is_identity_only():
    # Britton: a word equals the identity iff the oracle reduces it away;
    # the canonical form must agree on a sample of loops.
    model = ft.BaumslagSolitar(1, 2)
    for text in ("taTAA", "ttaTTAAAA", "aA", "", "ta", "taT"):
        word = model.parse(text)
        assert britton_is_identity(word, 1, 2) == \
            (bs_normal_form_of(word, P12) == BSNormalForm((), 0))


def test_metric_bounds_examples():
    consts = BSMetricConstants(1.0, 1.0, 1.0, 1.0)
    lower, upper = bs_metric_bounds(0, 0, consts)
    assert (lower, upper) == (0.0, 1.0)
    lower, upper = bs_metric_bounds(2, 0, BSMetricConstants(1, 1, 1e-9, 1e-9))
    assert math.isclose(lower, 2.0, abs_tol=1e-6)
    assert math.isclose(upper, 2.0, abs_tol=1e-6)


def test_metric_bounds_require_positive_constants():
    with pytest.raises(ValueError):
        bs_metric_bounds(1, 1, BSMetricConstants(1.0, 1.0, 0.0, 1.0))


@pytest.mark.parametrize("ball_fixture", ["bs12_ball8", "bs23_ball8"])
def test_calibrated_bounds_bracket_ball(ball_fixture, request):
    ball = request.getfixturevalue(ball_fixture)
    consts = calibrate_metric_constants(ball)
    assert all(value > 0 for value in consts)
    for g in ball.elements():
        lower, upper = bs_metric_bounds(g.t_length, g.tail, consts)
        assert lower <= ball.distance(g) <= upper


def test_sharpness_family_examples():
    model = ft.BaumslagSolitar(1, 2)
    probe = bs_sharpness_family(1, P12)
    assert model.format(probe.word) == "aaaa"
    assert model.format(probe.word_t) == "taa"
    assert probe.index == 2
    probe2 = bs_sharpness_family(2, P12)
    assert model.format(probe2.word) == "a" * 8
    assert model.format(probe2.word_t) == "t" + "a" * 4
    assert probe2.index == 4


def test_sharpness_family_is_a_neighbor_pair():
    for params in (P12, P23):
        probe = bs_sharpness_family(3, params)
        assert britton_equal(probe.word + (T,), probe.word_t,
                             params.p, params.q)
