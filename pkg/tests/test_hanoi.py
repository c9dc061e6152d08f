import pytest
from hypothesis import given, strategies as st

from acckit.hanoi import BARS, HanoiGame, SourceEmpty, optimal_moves


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_optimal_solution_wins(n):
    g = HanoiGame(n)
    moves = optimal_moves(n)
    assert len(moves) == 2 ** n - 1
    assert all(g.move_disk(s, d) for s, d in moves)
    assert g.is_won() and g.state() == ((), (), tuple(range(n, 0, -1)))


def test_illegal_moves():
    g = HanoiGame(3)
    g.move_disk("A", "B")
    before = g.state()
    assert not g.move_disk("A", "B")
    assert g.state() == before
    with pytest.raises(SourceEmpty):
        g.move_disk("C", "A")
    with pytest.raises(ValueError):
        g.move_disk("A", "a")
    with pytest.raises(ValueError):
        g.move_disk("A", "Q")


def test_render():
    assert HanoiGame(2).render() == "A: 2 1\nB: \nC: "


@given(st.lists(st.tuples(st.sampled_from(BARS), st.sampled_from(BARS)), max_size=80))
def test_bars_always_ordered(moves):
    g = HanoiGame(4)
    for s, d in moves:
        if s == d:
            continue
        try:
            g.move_disk(s, d)
        except SourceEmpty:
            pass
        assert sorted(x for bar in g.state() for x in bar) == [1, 2, 3, 4]
        assert all(list(bar) == sorted(bar, reverse=True) for bar in g.state())
