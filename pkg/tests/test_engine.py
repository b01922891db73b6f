from fractions import Fraction as F

import pytest

from dominia import (
    ANY,
    LOOSE,
    NW,
    NWM,
    PE,
    PEM,
    S,
    SINGLE,
    SM,
    STRICT,
    W,
    WM,
    Inherent,
    RelationSpec,
    check_left_commutes,
    check_one_at_a_time,
    check_one_step_closed,
    check_weak_confluence,
    equivalent,
    maximal_reduce,
    new_game,
    normal_forms,
    single_step_trace,
    structured_elimination_scenario,
    successors,
    union,
)
from dominia.errors import SizeBoundExceeded
from dominia.gallery import (
    nonconfluent_weak_2x2,
    redundant_middle_3x2,
    trivial_1x1,
)

G11 = nonconfluent_weak_2x2()
NW_STRICT_ANY = RelationSpec(NW, STRICT, ANY)
NW_STRICT_SINGLE = RelationSpec(NW, STRICT, SINGLE)


class TestSuccessors:
    def test_reference_game_bulk_successors(self):
        succ = successors(G11, NW_STRICT_ANY)
        shapes = sorted(g.shape for g in succ)
        assert shapes == [(1, 1), (1, 2), (2, 1)]  # both single removals plus the joint one

    def test_reference_game_single_successors(self):
        succ = successors(G11, NW_STRICT_SINGLE)
        assert sorted(g.shape for g in succ) == [(1, 2), (2, 1)]

    def test_normal_form_has_no_successors(self):
        assert successors(trivial_1x1(), RelationSpec(S, STRICT, ANY)) == ()

    def test_loose_equals_strict_for_strict_dominance(self, small_games):
        for g in small_games[:10]:
            assert successors(g, RelationSpec(S, LOOSE, ANY)) == successors(g, RelationSpec(S, STRICT, ANY))

    def test_single_subset_of_bulk(self, small_games):
        for g in small_games[:10]:
            for rel in (S, W, PE):
                single = set(successors(g, RelationSpec(rel, STRICT, SINGLE)))
                bulk = set(successors(g, RelationSpec(rel, STRICT, ANY)))
                assert single <= bulk

    def test_strict_never_degenerate(self, small_games):
        for g in small_games[:10]:
            for rel in (W, PE, union(NW, PE)):
                for succ in successors(g, RelationSpec(rel, STRICT, ANY)):
                    assert not succ.degenerate

    def test_size_bound(self):
        g = nonconfluent_weak_2x2()
        with pytest.raises(SizeBoundExceeded):
            successors(g, NW_STRICT_ANY, bound=3)


class TestSuccessorOracle:
    """Cross-check the engine against a direct reading of the step condition:
    enumerate every proper restriction and test each removed strategy for a
    dominator in the required set, using the naive per-definition helpers."""

    @staticmethod
    def _brute(g, naive, arrow):
        import itertools

        import helpers

        per_player = []
        for i in range(g.n):
            k = len(g.strategies[i])
            subsets = [
                combo
                for size in range(1, k + 1)
                for combo in itertools.combinations(range(k), size)
            ]
            per_player.append(subsets)
        out = []
        full = tuple(tuple(range(k)) for k in g.shape)
        for kept in itertools.product(*per_player):
            if kept == full:
                continue
            ok = True
            for i in range(g.n):
                removed = [s for s in range(len(g.strategies[i])) if s not in kept[i]]
                pool = kept[i] if arrow == STRICT else range(len(g.strategies[i]))
                for s in removed:
                    if not any(t != s and naive(g, i, s, t) for t in pool):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                from dominia import restrict

                out.append(restrict(g, kept))
        return sorted(out, key=lambda x: x.strategies)

    def test_pure_relations_match_brute_force(self, small_games):
        import helpers

        cases = {
            S: helpers.naive_strict,
            W: helpers.naive_weak,
            NW: helpers.naive_nice_weak,
            PE: helpers.naive_payoff_equivalent,
        }
        for g in small_games[:8]:
            for rel, naive in cases.items():
                for arrow in (STRICT, LOOSE):
                    mine = sorted(
                        successors(g, RelationSpec(rel, arrow, ANY)), key=lambda x: x.strategies
                    )
                    assert mine == self._brute(g, naive, arrow)

    def test_strict_mixed_matches_support_oracle(self, small_games):
        from dominia.oracles import sm_dominated_oracle

        for g in [x for x in small_games if x.total_strategies <= 8][:4]:
            import itertools

            from dominia import restrict

            per_player = []
            for i in range(g.n):
                k = len(g.strategies[i])
                per_player.append(
                    [c for size in range(1, k + 1) for c in itertools.combinations(range(k), size)]
                )
            full = tuple(tuple(range(k)) for k in g.shape)
            expected = []
            for kept in itertools.product(*per_player):
                if kept == full:
                    continue
                ok = True
                for i in range(g.n):
                    removed = [s for s in range(len(g.strategies[i])) if s not in kept[i]]
                    for s in removed:
                        if not sm_dominated_oracle(g, i, s, kept[i]):
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    expected.append(restrict(g, kept))
            mine = sorted(successors(g, RelationSpec(SM, STRICT, ANY)), key=lambda x: x.strategies)
            assert mine == sorted(expected, key=lambda x: x.strategies)


class TestNormalForms:
    def test_reference_game_two_normal_forms_single_step(self):
        rep = normal_forms(G11, NW_STRICT_SINGLE)
        assert len(rep.normal_forms) == 2
        assert len(rep.classes) == 2
        assert not rep.unique
        assert rep.counterexample is not None

    def test_reference_game_three_normal_forms_bulk(self):
        # the joint removal reaches the 1x1 game in one bulk step
        rep = normal_forms(G11, NW_STRICT_ANY)
        assert sorted(nf.shape for nf in rep.normal_forms) == [(1, 1), (1, 2), (2, 1)]

    def test_combined_relation_single_class(self):
        rep = normal_forms(G11, RelationSpec(union(NW, PE), STRICT, SINGLE), up_to_renaming=True)
        assert rep.unique and len(rep.classes) == 1
        for nf in rep.normal_forms:
            assert nf.shape == (1, 1)
            assert nf.payoff_vector((0, 0)) == (F(2), F(1))

    def test_strict_unique_on_samples(self, small_games):
        for g in small_games[:12]:
            rep = normal_forms(g, RelationSpec(S, STRICT, ANY))
            assert rep.unique and len(rep.normal_forms) == 1

    def test_inherent_relations_unique_on_samples(self, small_games):
        picks = [g for g in small_games if g.total_strategies <= 7][:4]
        assert picks
        for g in picks:
            for rel in (Inherent(W), Inherent(NW), Inherent(NWM)):
                rep = normal_forms(g, RelationSpec(rel, STRICT, ANY))
                assert rep.unique and len(rep.normal_forms) == 1

    def test_explored_states_within_lattice_bound(self, small_games):
        for g in small_games[:6]:
            rep = normal_forms(g, RelationSpec(W, STRICT, ANY))
            lattice = 1
            for k in g.shape:
                lattice *= 2**k - 1
            assert rep.explored_states <= lattice


class TestWeakConfluence:
    def test_reference_counterexample_pair(self):
        out = check_weak_confluence(G11, NW_STRICT_SINGLE)
        assert not out.ok
        assert sorted(g.shape for g in out.counterexample) == [(1, 2), (2, 1)]

    def test_strict_dominance_weakly_confluent(self, small_games):
        for g in small_games[:10]:
            assert check_weak_confluence(g, RelationSpec(S, STRICT, ANY)).ok

    def test_pe_single_step_confluent_up_to_renaming(self, small_games):
        for g in small_games[:10]:
            assert check_weak_confluence(g, RelationSpec(PE, STRICT, SINGLE), up_to_renaming=True).ok


class TestOneStepClosed:
    def test_reference_game_fails_at_root(self):
        out = check_one_step_closed(G11, NW_STRICT_ANY)
        assert not out.ok
        assert out.counterexample == G11

    def test_strict_mixed_closed_on_samples(self, small_games):
        for g in small_games[:8]:
            assert check_one_step_closed(g, RelationSpec(SM, STRICT, ANY)).ok

    def test_trivial_game_closed(self):
        assert check_one_step_closed(trivial_1x1(), NW_STRICT_ANY).ok


class TestOneAtATime:
    def test_strict_dominance(self, small_games):
        for g in small_games[:10]:
            assert check_one_at_a_time(g, S)

    def test_payoff_equivalence(self, small_games):
        for g in small_games[:10]:
            assert check_one_at_a_time(g, PE)

    def test_inherent_weak(self, small_games):
        for g in small_games[:4]:
            assert check_one_at_a_time(g, Inherent(W))

    def test_nice_weak_can_fail(self):
        # bulk elimination reaches the 1x1 game; single steps cannot
        assert not check_one_at_a_time(G11, NW)


class TestLeftCommutes:
    def test_pe_with_nice_weak_and_strict(self, small_games):
        for g in small_games[:8]:
            for second in (NW, W, S):
                assert check_left_commutes(
                    g, RelationSpec(PE, STRICT, ANY), RelationSpec(second, STRICT, ANY)
                ).ok

    def test_vacuous_when_no_transitions(self):
        g = trivial_1x1()
        assert check_left_commutes(g, RelationSpec(PE, STRICT, ANY), RelationSpec(PE, STRICT, ANY)).ok

    def test_mixed_pairs(self, small_games):
        for g in small_games[:4]:
            for second in (NWM, WM):
                assert check_left_commutes(
                    g, RelationSpec(PEM, STRICT, ANY), RelationSpec(second, STRICT, ANY)
                ).ok


class TestMaximalReduce:
    def test_reference_game_one_step(self):
        path = maximal_reduce(G11, W)
        assert len(path.steps) == 1
        step = path.steps[0]
        assert step.removed == (("B",), ("R",))
        assert step.result.shape == (1, 1)
        assert step.strict_valid and not step.degenerate

    def test_no_dominated_strategies_empty_path(self):
        assert maximal_reduce(trivial_1x1(), W).steps == ()

    def test_matches_unique_strict_normal_form(self, small_games):
        for g in small_games[:10]:
            rep = normal_forms(g, RelationSpec(S, STRICT, ANY))
            assert maximal_reduce(g, S).endpoint == rep.normal_forms[0]

    def test_all_zero_game_degenerates_under_pe(self):
        g = new_game(
            [["T", "B"], ["L", "R"]],
            {p: (0, 0) for p in [("T", "L"), ("T", "R"), ("B", "L"), ("B", "R")]},
        )
        path = maximal_reduce(g, PE)
        assert path.steps[-1].degenerate
        assert path.endpoint.degenerate


class TestSingleStepTrace:
    def test_trace_reaches_normal_form(self):
        path = single_step_trace(G11, NW_STRICT_SINGLE)
        assert path.steps
        final = path.endpoint
        assert successors(final, NW_STRICT_SINGLE) == ()


class TestStructuredElimination:
    def test_reference_game_scenario(self):
        rep = structured_elimination_scenario(G11, NW, PE)
        assert rep.all_equivalent and rep.closed_under_union
        for h in rep.endpoints:
            assert h.shape == (1, 1)
            assert h.payoff_vector((0, 0)) == (F(2), F(1))

    def test_unique_base_normal_form_no_pe(self):
        g = new_game([["T", "B"], ["L"]], {("T", "L"): (1, 0), ("B", "L"): (0, 0)})
        rep = structured_elimination_scenario(g, W, PE)
        assert len(rep.base_normal_forms) == 1
        assert rep.endpoints[0] == rep.base_normal_forms[0]


class TestBisimilarity:
    def test_transitions_transport_across_renamings(self, small_games):
        import itertools

        for g in small_games[:5]:
            perms = [tuple(reversed(range(k))) for k in g.shape]
            labels = [tuple(g.strategies[i][p] for p in perms[i]) for i in range(g.n)]
            table = {}
            for new_profile in itertools.product(*(range(k) for k in g.shape)):
                old = tuple(perms[i][new_profile[i]] for i in range(g.n))
                table[new_profile] = g.payoff_vector(old)
            twin = new_game(labels, table)
            ren = equivalent(g, twin)
            assert ren is not None
            succ_g = successors(g, RelationSpec(W, STRICT, SINGLE))
            succ_twin = set(successors(twin, RelationSpec(W, STRICT, SINGLE)))
            for child in succ_g:
                kept = tuple(
                    tuple(sorted(g.strategies[i].index(lab) for lab in child.strategies[i]))
                    for i in range(g.n)
                )
                image_kept = ren.apply_kept(kept)
                from dominia import restrict

                image = restrict(twin, image_kept)
                assert image in succ_twin
                assert equivalent(child, image) is not None
