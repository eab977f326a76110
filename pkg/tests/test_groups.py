import pytest
from hypothesis import given, strategies as st

import fellowtravel as ft
from fellowtravel import GenSymbol
from fellowtravel.groups import AlphabetError

from oracles import britton_equal


def test_evaluate_grid():
    model = ft.IntLattice(2)
    assert ft.evaluate(model, model.parse("abA")) == (0, 1)


def test_evaluate_bs_relation():
    # t a t^-1 equals a^2 for exponents (1, 2); checked by the pinch oracle.
    model = ft.BaumslagSolitar(1, 2)
    got = ft.evaluate(model, model.parse("taT"))
    assert got.tail == 2 and got.blocks == ()
    assert britton_equal(model.parse("taT"), model.parse("aa"), 1, 2)


def test_evaluate_lamp():
    model = ft.PlaneLamplighter()
    got = ft.evaluate(model, model.parse("cac"))
    assert got.support == frozenset({(0, 0), (1, 0)})
    assert got.position == (1, 0)


def test_evaluate_rejects_foreign_symbols():
    model = ft.IntLattice(1)
    with pytest.raises(AlphabetError):
        ft.evaluate(model, (GenSymbol(3, False),))


@pytest.mark.parametrize("make", [
    lambda: ft.IntLattice(1),
    lambda: ft.IntLattice(2),
    lambda: ft.BaumslagSolitar(1, 2),
    lambda: ft.BaumslagSolitar(2, 3),
    lambda: ft.PlaneLamplighter(),
])
def test_apply_then_inverse_restores(make):
    model = make()
    ball = ft.bfs_ball(model, 3)
    for g in ball.elements():
        for s in model.directions():
            back = model.apply(model.apply(g, s), s.inverse())
            assert model.key(back) == model.key(g)


@pytest.mark.parametrize("make", [
    lambda: ft.IntLattice(2),
    lambda: ft.PlaneLamplighter(),
])
def test_composition_matches_words(make):
    model = make()
    ball = ft.bfs_ball(model, 3)
    elements = list(ball.elements())
    for g in elements[::7]:
        wg = ball.shortest_word(g)
        assert model.key(model.multiply(model.invert(g), g)) == \
            model.key(model.identity())
        for h in elements[::11]:
            wh = ball.shortest_word(h)
            via_words = ft.evaluate(model, wg + wh)
            assert model.key(model.multiply(g, h)) == model.key(via_words)


def test_directions_skip_involution_inverse():
    lamp = ft.PlaneLamplighter()
    assert lamp.directions() == (
        GenSymbol(0, False), GenSymbol(0, True),
        GenSymbol(1, False), GenSymbol(1, True),
        GenSymbol(2, False),
    )
