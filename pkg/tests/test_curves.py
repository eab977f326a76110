import pytest

import fellowtravel as ft
from fellowtravel.balls import make_distance_oracle
from fellowtravel.baumslag import bs_sharpness_family, BSParams
from fellowtravel.curves import (curve_to_csv, divergence, divergence_curve,
                                 read_curve_csv)


def test_divergence_of_equal_words():
    model = ft.IntLattice(2)
    w = model.parse("abA")
    oracle = make_distance_oracle(model)
    assert divergence(model, w, w, oracle) == [0, 0, 0, 0]


def test_divergence_single_step():
    model = ft.IntLattice(2)
    oracle = make_distance_oracle(model)
    assert divergence(model, (), model.parse("a"), oracle) == [0, 1]


def test_divergence_bs_sharpness_probe():
    model = ft.BaumslagSolitar(1, 2)
    probe = bs_sharpness_family(1, BSParams(1, 2))
    oracle = ft.GrowingBall(model, 2)
    profile = divergence(model, probe.word, probe.word_t, oracle)
    # After two steps the paths stand at a^2 and t a, one letter apart.
    delta = ft.evaluate(model, model.parse("AAta"))
    assert profile[probe.index] == oracle.distance(delta) == 1


def test_divergence_out_of_range_with_fixed_ball():
    model = ft.IntLattice(2)
    ball = ft.bfs_ball(model, 1)
    with pytest.raises(ft.OutOfBallError, match="larger radius"):
        divergence(model, model.parse("aaaa"), model.parse("bbbb"), ball)


def test_generic_path_matches_commutative_path():
    model = ft.IntLattice(2)
    oracle = make_distance_oracle(model)
    provider = ft.grid_lex_provider()
    ball = ft.bfs_ball(model, 3)
    for g in ball.elements():
        w1 = provider.nf(g)
        for s in model.generators():
            w2 = provider.nf(model.apply(g, s))
            fast = divergence(model, w1, w2, oracle)
            model.commutative = False
            try:
                slow = divergence(model, w1, w2, oracle)
            finally:
                model.commutative = True
            assert fast == slow


def test_line_curve_is_constant_one(z_provider):
    curve = divergence_curve(z_provider, 6)
    assert curve.values[0] == 0
    assert set(curve.values[1:]) == {1}


def test_grid_curve_is_constant_two(z2_curve6):
    assert z2_curve6.values[0] == 0
    assert set(z2_curve6.values[1:]) == {2}


def test_grid_curve_stable_across_radii(z2_provider, z2_curve6):
    small = divergence_curve(z2_provider, 3)
    shared = min(len(small), len(z2_curve6))
    assert small.values[:shared] == z2_curve6.values[:shared]


def test_curve_monotone_and_linear_bound(z2_curve6):
    values = z2_curve6.values
    assert all(values[i] <= values[i + 1] for i in range(len(values) - 1))
    assert all(s <= 2 * n for n, s in z2_curve6.samples() if n >= 1)


def test_curve_metadata(z2_curve6):
    assert z2_curve6.group == "z2-lex"
    assert z2_curve6.radius == 6
    assert z2_curve6.generators == ("a", "b")
    assert z2_curve6.distance_radius >= 2


def test_csv_roundtrip(z2_curve6):
    text = curve_to_csv(z2_curve6)
    assert text.startswith("# group=z2-lex\n")
    assert "n,s\n" in text
    again = read_curve_csv(text)
    assert again == z2_curve6


def test_csv_rejects_bad_header():
    with pytest.raises(ValueError):
        read_curve_csv("# group=x\nwrong\n0,0\n")
