from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import helpers
from dominia import (
    COMPAT,
    NW,
    PE,
    S,
    VW,
    W,
    check_iiia,
    check_tdi,
    check_tdi_plus,
    check_tdi_plus_plus,
    compatible,
    dominated_set,
    dominates,
    generator_params,
    is_hereditary,
    is_strict_partial_order,
    new_game,
    random_game,
    restrict,
    union,
)
from dominia.errors import SizeBoundExceeded
from dominia.gallery import (
    inherently_dominated_middle_3x2,
    nonconfluent_weak_2x2,
    trivial_1x1,
)

G11 = nonconfluent_weak_2x2()


def seeded_game(seed, players=2, strats=(2, 2)):
    return random_game(generator_params(players, strats, -3, 3, Fraction(1, 4), seed))


games_strategy = st.integers(min_value=0, max_value=10_000).map(
    lambda seed: seeded_game(seed, 2 + seed % 2, tuple(2 + (seed + j) % 3 for j in range(2 + seed % 2)))
)


class TestDominates:
    def test_weak_on_reference_game(self):
        assert dominates(G11, W, 0, 1, 0)  # B weakly dominated by T
        assert not dominates(G11, S, 0, 1, 0)  # tie at the left column

    def test_irreflexive_relations_never_self_dominate(self):
        for rel in (S, W, NW):
            for i in range(G11.n):
                for s in range(len(G11.strategies[i])):
                    assert not dominates(G11, rel, i, s, s)

    def test_reflexive_relations_self_relate(self):
        assert dominates(G11, VW, 0, 0, 0)
        assert dominates(G11, PE, 0, 0, 0)

    def test_nice_weak_on_reference_game(self):
        # oracle: exhaust all opponent profiles and all players
        assert helpers.naive_nice_weak(G11, 0, 1, 0)
        assert dominates(G11, NW, 0, 1, 0)

    def test_union_is_member_or(self):
        rel = union(S, PE)
        for i in range(G11.n):
            for a in range(2):
                for b in range(2):
                    expected = dominates(G11, S, i, a, b) or dominates(G11, PE, i, a, b)
                    assert dominates(G11, rel, i, a, b) == expected

    @settings(max_examples=40, deadline=None)
    @given(games_strategy)
    def test_matches_naive_definitions(self, g):
        oracles = {
            "S": helpers.naive_strict,
            "W": helpers.naive_weak,
            "VW": helpers.naive_very_weak,
            "NW": helpers.naive_nice_weak,
            "PE": helpers.naive_payoff_equivalent,
        }
        rels = {"S": S, "W": W, "VW": VW, "NW": NW, "PE": PE}
        for i in range(g.n):
            for a in range(len(g.strategies[i])):
                for b in range(len(g.strategies[i])):
                    for tag, fn in oracles.items():
                        assert dominates(g, rels[tag], i, a, b) == fn(g, i, a, b)

    @settings(max_examples=40, deadline=None)
    @given(games_strategy)
    def test_inclusion_chain(self, g):
        for i in range(g.n):
            k = len(g.strategies[i])
            for a in range(k):
                for b in range(k):
                    if dominates(g, S, i, a, b):
                        assert dominates(g, NW, i, a, b)
                    if dominates(g, NW, i, a, b):
                        assert dominates(g, W, i, a, b)
                    if dominates(g, W, i, a, b):
                        assert dominates(g, VW, i, a, b)


class TestCompatible:
    def test_reference_columns_compatible(self):
        # equality only at the top row, where the row player also ties
        assert compatible(G11, 1, 0, 1)

    def test_uniform_game_all_compatible(self):
        g = new_game([["T", "B"], ["L"]], {("T", "L"): (1, 1), ("B", "L"): (1, 1)})
        assert compatible(g, 0, 0, 1)

    def test_violation_in_2x1_game(self):
        g = new_game([["T", "B"], ["L"]], {("T", "L"): (0, 1), ("B", "L"): (0, 0)})
        assert not compatible(g, 0, 0, 1)


class TestDominatedSet:
    def test_reference_witnesses(self):
        per_player = dominated_set(G11, W)
        assert [(w.player, w.dominated, w.dominator) for w in per_player[0]] == [(0, 1, 0)]
        assert [(w.player, w.dominated, w.dominator) for w in per_player[1]] == [(1, 1, 0)]

    def test_trivial_game_empty(self):
        assert dominated_set(trivial_1x1(), W) == [[]]

    def test_column_filled_game_has_no_strict_dominance(self):
        g = inherently_dominated_middle_3x2()
        assert dominated_set(g, S)[0] == []

    def test_least_index_dominator_chosen(self):
        g = new_game(
            [["a", "b", "c"], ["x"]],
            {("a", "x"): (3, 0), ("b", "x"): (3, 0), ("c", "x"): (1, 0)},
        )
        witness = dominated_set(g, S)[0][0]
        assert witness.dominated == 2 and witness.dominator == 0


class TestTdiFamily:
    def test_reference_game_satisfies_all(self):
        assert check_tdi(G11).ok
        assert check_tdi_plus(G11).ok
        assert check_tdi_plus_plus(G11).ok

    def test_tdi_counterexample_is_lexicographically_first(self):
        g = new_game([["T", "B"], ["L"]], {("T", "L"): (0, 1), ("B", "L"): (0, 0)})
        out = check_tdi(g)
        assert not out.ok
        assert out.counterexample == (0, 1, 0, 1, (-1, 0))

    def test_trivial_game_vacuous(self):
        t = trivial_1x1()
        assert check_tdi(t).ok and check_tdi_plus(t).ok and check_tdi_plus_plus(t).ok

    def test_tdi_plus_violated_only_in_proper_restriction(self):
        # search a seeded pool for a game that satisfies "W implies
        # compatible" at the top level but not in some proper restriction
        found = None
        for seed in range(400):
            g = seeded_game(seed, 2, (3, 2))
            top_ok = all(
                not dominates(g, W, i, a, b) or compatible(g, i, a, b)
                for i in range(g.n)
                for a in range(len(g.strategies[i]))
                for b in range(len(g.strategies[i]))
            )
            plus = check_tdi_plus(g)
            if top_ok and not plus.ok:
                found = (g, plus.counterexample)
                break
        assert found is not None, "seeded search found no witness game"
        g, (kept, witness) = found
        sub = restrict(g, kept)
        assert sub.shape != g.shape
        a, b = kept[witness.player].index(witness.dominated), kept[witness.player].index(witness.dominator)
        assert dominates(sub, W, witness.player, a, b)
        assert not compatible(sub, witness.player, a, b)

    def test_tdi_plus_plus_counterexample(self):
        g = new_game([["T", "B"], ["L"]], {("T", "L"): (0, 1), ("B", "L"): (0, 0)})
        out = check_tdi_plus_plus(g)
        assert not out.ok

    def test_tdi_iff_all_pairs_compatible(self, small_games):
        for g in small_games:
            all_compat = all(
                compatible(g, i, a, b)
                for i in range(g.n)
                for a in range(len(g.strategies[i]))
                for b in range(len(g.strategies[i]))
            )
            assert check_tdi(g).ok == all_compat

    def test_size_bound(self):
        g = seeded_game(7, 2, (4, 4))
        with pytest.raises(SizeBoundExceeded):
            check_tdi_plus(g, bound=6)


class TestStructuralProperties:
    def test_strict_partial_orders(self, small_games):
        for g in small_games:
            assert is_strict_partial_order(g, S)
            assert is_strict_partial_order(g, NW)
            assert is_strict_partial_order(g, W)

    def test_pe_not_a_strict_partial_order(self):
        assert not is_strict_partial_order(G11, PE)

    def test_pe_symmetric_and_transitive(self, small_games):
        for g in small_games:
            for i in range(g.n):
                k = len(g.strategies[i])
                for a in range(k):
                    for b in range(k):
                        if dominates(g, PE, i, a, b):
                            assert dominates(g, PE, i, b, a)
                        for c in range(k):
                            if dominates(g, PE, i, a, b) and dominates(g, PE, i, b, c):
                                assert dominates(g, PE, i, a, c)

    def test_weak_dominance_not_hereditary_on_reference(self):
        out = is_hereditary(G11, W)
        assert not out.ok
        kept, witness = out.counterexample
        assert kept == ((0,), (0, 1))  # the top-row restriction
        assert (witness.player, witness.dominated, witness.dominator) == (1, 1, 0)

    def test_strict_and_pe_hereditary(self, small_games):
        for g in small_games[:10]:
            assert is_hereditary(g, S).ok
            assert is_hereditary(g, PE).ok

    def test_iiia_holds_for_all_relations(self, small_games):
        for g in small_games[:10]:
            for rel in (S, W, NW, PE, VW, COMPAT):
                assert check_iiia(g, rel).ok

    def test_trivial_game_vacuous_everywhere(self):
        t = trivial_1x1()
        assert check_iiia(t, W).ok
        assert is_hereditary(t, W).ok
        assert is_strict_partial_order(t, S)
        assert not is_strict_partial_order(t, PE)  # the lone strategy relates to itself
