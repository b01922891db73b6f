from fractions import Fraction

import pytest

from dominia import (
    DuplicateLabel,
    EmptyRestriction,
    EmptyStrategySet,
    Game,
    IncompatibleParents,
    IndexOutOfRange,
    MissingPayoff,
    Restriction,
    intersect,
    new_game,
    restrict,
)
from dominia.gallery import nonconfluent_weak_2x2, trivial_1x1


def test_new_game_validates_and_stores_exact_payoffs():
    g = nonconfluent_weak_2x2()
    assert g.n == 2
    assert g.strategies == (("T", "B"), ("L", "R"))
    assert g.payoff((1, 1), 0) == Fraction(1)
    assert g.payoff((1, 1), 1) == Fraction(0)
    assert g.payoff((0, 1), 0) == Fraction(2)


def test_smallest_legal_game():
    g = trivial_1x1()
    assert g.shape == (1,)
    assert g.payoff((0,), 0) == 0


def test_missing_payoff_rejected():
    with pytest.raises(MissingPayoff):
        new_game([["T", "B"], ["L"]], {("T", "L"): (1, 1)})


def test_duplicate_labels_rejected_within_and_across_players():
    with pytest.raises(DuplicateLabel):
        new_game([["T", "T"], ["L"]], {})
    with pytest.raises(DuplicateLabel):
        new_game([["T"], ["T"]], {("T", "T"): (0, 0)})


def test_empty_strategy_set_rejected_without_flag():
    with pytest.raises(EmptyStrategySet):
        Game((("T",), ()), {})
    g = Game((("T",), ()), {}, allow_degenerate=True)
    assert g.degenerate


def test_payoff_bounds_checked():
    g = nonconfluent_weak_2x2()
    with pytest.raises(IndexOutOfRange):
        g.payoff((0, 0), 2)
    with pytest.raises(IndexOutOfRange):
        g.payoff((2, 0), 0)


def test_restrict_preserves_payoffs_and_order():
    g = nonconfluent_weak_2x2()
    top = restrict(g, [(0,), (0, 1)])
    assert top.shape == (1, 2)
    assert top.strategies == (("T",), ("L", "R"))
    assert top.payoff((0, 0), 0) == 2 and top.payoff((0, 1), 1) == 1


def test_restrict_identity_is_structural_equality():
    g = nonconfluent_weak_2x2()
    assert restrict(g, [(0, 1), (0, 1)]) == g


def test_restrict_empty_needs_flag():
    g = nonconfluent_weak_2x2()
    with pytest.raises(EmptyRestriction):
        restrict(g, [(), (0,)])
    degenerate = restrict(g, [(), (0,)], allow_degenerate=True)
    assert degenerate.degenerate


def test_restriction_view_materializes():
    g = nonconfluent_weak_2x2()
    view = Restriction(g, [(0,), (0,)])
    assert view.to_game().shape == (1, 1)


def test_intersect_basics():
    g = nonconfluent_weak_2x2()
    r1 = restrict(g, [(0,), (0, 1)])
    r2 = restrict(g, [(0, 1), (0,)])
    both = intersect(r1, r2)
    assert both.strategies == (("T",), ("L",))
    assert both.payoff((0, 0), 0) == 2
    assert intersect(g, g) == g


def test_intersect_disjoint_rows_is_empty():
    g = nonconfluent_weak_2x2()
    r1 = restrict(g, [(0,), (0,)])
    r2 = restrict(g, [(1,), (0,)])
    with pytest.raises(EmptyRestriction):
        intersect(r1, r2)


def test_intersect_rejects_different_parents():
    g = nonconfluent_weak_2x2()
    other = new_game(
        [["T", "B"], ["L", "R"]],
        {("T", "L"): (9, 9), ("T", "R"): (2, 1), ("B", "L"): (2, 1), ("B", "R"): (1, 0)},
    )
    with pytest.raises(IncompatibleParents):
        intersect(g, other)


def test_intersect_commutes_and_associates(small_games):
    for g in small_games[:6]:
        full = tuple(tuple(range(k)) for k in g.shape)
        r1 = restrict(g, [full[0][: max(1, len(full[0]) - 1)]] + [full[i] for i in range(1, g.n)])
        r2 = restrict(g, [full[0]] + [full[i][:1] if i == 1 else full[i] for i in range(1, g.n)])
        r3 = restrict(g, [full[0][:1]] + [full[i] for i in range(1, g.n)])
        assert intersect(r1, r2) == intersect(r2, r1)
        left = intersect(intersect(r1, r2), r3)
        right = intersect(r1, intersect(r2, r3))
        assert left == right


def test_games_hash_consistently():
    g1 = nonconfluent_weak_2x2()
    g2 = nonconfluent_weak_2x2()
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != trivial_1x1()


def test_game_is_immutable():
    g = trivial_1x1()
    with pytest.raises(AttributeError):
        g.n = 3
