"""The abstract-reduction-system layer over games.

A RelationSpec picks a dominance relation, an arrow flavor and a step mode:

* arrow "strict": every removed strategy needs a dominator (or, for mixed
  dominators, a support) that survives the step;
* arrow "loose": dominators range over the full pre-step strategy sets;
* step "any": one transition may remove any valid non-empty combination of
  strategies across players (bulk elimination);
* step "single": one transition removes exactly one strategy.

All reachable games are restrictions of the root, so the search memoizes on
per-player kept-index sets; the state space is capped by the subset lattice.
Everything exhaustive here raises SizeBoundExceeded past the configured total
strategy bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from . import config
from .errors import SizeBoundExceeded
from .game import Game, restrict
from .inherent import InherentQuery, is_inherently_dominated
from .mixed import find_dominator
from .pure import CheckOutcome, dominates
from .equivalence import canonical_signature, equivalent, partition_by_equivalence
from .relations import Inherent, Relation

STRICT, LOOSE = "strict", "loose"
ANY, SINGLE = "any", "single"

StateKey = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RelationSpec:
    relation: Union[Relation, Inherent]
    arrow: str = STRICT
    step: str = ANY

    def __post_init__(self):
        if self.arrow not in (STRICT, LOOSE):
            raise ValueError(f"arrow must be strict or loose, got {self.arrow!r}")
        if self.step not in (ANY, SINGLE):
            raise ValueError(f"step must be any or single, got {self.step!r}")

    def __str__(self) -> str:
        return f"{self.relation}/{self.arrow}/{self.step}"


@dataclass(frozen=True)
class ReductionStep:
    removed: tuple[tuple[str, ...], ...]  # labels removed per player
    result: Game
    strict_valid: bool
    degenerate: bool


@dataclass(frozen=True)
class ReductionPath:
    root: Game
    steps: tuple[ReductionStep, ...]

    @property
    def endpoint(self) -> Game:
        return self.steps[-1].result if self.steps else self.root


@dataclass(frozen=True)
class ConfluenceReport:
    normal_forms: tuple[Game, ...]
    classes: tuple[tuple[int, ...], ...]
    explored_states: int
    unique: bool
    counterexample: Optional[tuple[Game, Game]]


class _Search:
    """Memoized exploration of one (root, spec) reduction system."""

    def __init__(self, root: Game, spec: RelationSpec, bound: Optional[int] = None):
        limit = bound if bound is not None else config.max_total_strategies()
        if root.total_strategies > limit:
            raise SizeBoundExceeded(
                f"game has {root.total_strategies} strategies, bound is {limit}"
            )
        self.root = root
        self.spec = spec
        self._games: dict[StateKey, Game] = {}
        self._succ: dict[StateKey, tuple[StateKey, ...]] = {}
        self._reach: dict[StateKey, frozenset[StateKey]] = {}
        self.start: StateKey = tuple(tuple(range(len(s))) for s in root.strategies)

    def game(self, state: StateKey) -> Game:
        g = self._games.get(state)
        if g is None:
            g = self.root if state == self.start else restrict(self.root, state)
            self._games[state] = g
        return g

    # -- per-state dominance data ---------------------------------------

    def _pure_dominators(self, g: Game, rel: Relation, i: int) -> list[frozenset[int]]:
        k = len(g.strategies[i])
        return [
            frozenset(t for t in range(k) if t != s and dominates(g, rel, i, s, t))
            for s in range(k)
        ]

    def _strict_ok(self, g: Game, i: int, s: int, removed: frozenset[int], loose_witness) -> bool:
        """Is s dominated with a dominator/support disjoint from the removed set?"""
        rel = self.spec.relation
        k = len(g.strategies[i])
        survivors = [t for t in range(k) if t not in removed]
        if not survivors:
            return False
        if isinstance(rel, Inherent):
            res = is_inherently_dominated(g, InherentQuery(rel.base, i, s, tuple(survivors)))
            return res.dominated
        if rel.mixed:
            if loose_witness is not None and not (set(loose_witness.dominator.support) & removed):
                return True
            return find_dominator(g, rel, i, s, survivors) is not None
        raise AssertionError("pure relations use dominator masks")

    def _player_choices(self, g: Game, i: int) -> list[frozenset[int]]:
        """Valid removal sets for player i (non-empty), per the spec's arrow
        and step mode; [] when the player cannot lose anything."""
        rel = self.spec.relation
        k = len(g.strategies[i])
        loose_witnesses: dict[int, object] = {}
        if isinstance(rel, Inherent):
            cands = [
                s
                for s in range(k)
                if is_inherently_dominated(g, InherentQuery(rel.base, i, s, None)).dominated
            ]
            masks = None
        elif rel.mixed:
            # dominators may not lean on the dominated strategy itself: any
            # self-weighted dominator shrinks to one without it, and the bare
            # point mass would let reflexive relations remove everything
            cands = []
            for s in range(k):
                allowed = [t for t in range(k) if t != s]
                if not allowed:
                    continue
                w = find_dominator(g, rel, i, s, allowed)
                if w is not None:
                    cands.append(s)
                    loose_witnesses[s] = w
            masks = None
        else:
            masks = self._pure_dominators(g, rel, i)
            cands = [s for s in range(k) if masks[s]]
        if not cands:
            return []

        strict = self.spec.arrow == STRICT
        choices: list[frozenset[int]] = []
        if self.spec.step == SINGLE:
            for s in cands:
                removed = frozenset([s])
                if strict:
                    if masks is not None:
                        ok = bool(masks[s] - removed)
                    else:
                        ok = self._strict_ok(g, i, s, removed, loose_witnesses.get(s))
                else:
                    ok = k > 1  # never empty a player
                if ok:
                    choices.append(removed)
            return choices

        for size in range(1, len(cands) + 1):
            for combo in itertools.combinations(cands, size):
                removed = frozenset(combo)
                if len(removed) == k:
                    continue  # strict: no surviving dominator; loose: degenerate
                if strict:
                    if masks is not None:
                        ok = all(masks[s] - removed for s in removed)
                    else:
                        ok = all(
                            self._strict_ok(g, i, s, removed, loose_witnesses.get(s))
                            for s in removed
                        )
                else:
                    ok = True
                if ok:
                    choices.append(removed)
        return choices

    def successors(self, state: StateKey) -> tuple[StateKey, ...]:
        cached = self._succ.get(state)
        if cached is not None:
            return cached
        g = self.game(state)
        per_player = [self._player_choices(g, i) for i in range(g.n)]
        out: set[StateKey] = set()
        if self.spec.step == SINGLE:
            for i, choices in enumerate(per_player):
                for removed in choices:
                    out.add(self._remove(state, {i: removed}))
        else:
            options = [[None] + choices for choices in per_player]
            for combo in itertools.product(*options):
                if all(c is None for c in combo):
                    continue
                removal = {i: c for i, c in enumerate(combo) if c is not None}
                out.add(self._remove(state, removal))
        result = tuple(sorted(out))
        self._succ[state] = result
        return result

    def _remove(self, state: StateKey, removal: dict[int, frozenset[int]]) -> StateKey:
        new = []
        for i, kept in enumerate(state):
            removed = removal.get(i)
            if removed:
                new.append(tuple(r for local, r in enumerate(kept) if local not in removed))
            else:
                new.append(kept)
        return tuple(new)

    # -- reachability ----------------------------------------------------

    def states(self) -> list[StateKey]:
        """All reachable states in BFS order from the root state."""
        seen = {self.start}
        order = [self.start]
        frontier = [self.start]
        while frontier:
            nxt = []
            for st in frontier:
                for succ in self.successors(st):
                    if succ not in seen:
                        seen.add(succ)
                        order.append(succ)
                        nxt.append(succ)
            frontier = nxt
        return order

    def reach(self, state: StateKey) -> frozenset[StateKey]:
        """Reflexive-transitive successor set of one state."""
        cached = self._reach.get(state)
        if cached is not None:
            return cached
        acc: set[StateKey] = {state}
        for succ in self.successors(state):
            acc |= self.reach(succ)
        result = frozenset(acc)
        self._reach[state] = result
        return result


def successors(game: Game, spec: RelationSpec, bound: Optional[int] = None) -> tuple[Game, ...]:
    """All one-step reducts of the game under the spec, deduplicated and in a
    fixed order."""
    search = _Search(game, spec, bound)
    return tuple(search.game(st) for st in search.successors(search.start))


def normal_forms(
    game: Game,
    spec: RelationSpec,
    up_to_renaming: bool = False,
    bound: Optional[int] = None,
) -> ConfluenceReport:
    """Exhaustively enumerate every reachable normal form.

    ``unique`` means one normal form exactly, or one renaming class when
    ``up_to_renaming`` is set; in the non-unique case the report carries a
    witness pair of one-step reducts that cannot be joined again."""
    search = _Search(game, spec, bound)
    states = search.states()
    nf_states = sorted(st for st in states if not search.successors(st))
    nf_games = tuple(search.game(st) for st in nf_states)
    classes = tuple(tuple(c) for c in partition_by_equivalence(nf_games))
    unique = (len(classes) == 1) if up_to_renaming else (len(nf_games) == 1)
    counterexample = None
    if not unique:
        failure = _weak_confluence_failure(search, up_to_renaming)
        if failure is not None:
            counterexample = (search.game(failure[1]), search.game(failure[2]))
    return ConfluenceReport(nf_games, classes, len(states), unique, counterexample)


def _joinable(search: _Search, b: StateKey, c: StateKey, up_to_renaming: bool) -> bool:
    rb, rc = search.reach(b), search.reach(c)
    if rb & rc:
        return True
    if not up_to_renaming:
        return False
    by_sig: dict = {}
    for st in rb:
        by_sig.setdefault(canonical_signature(search.game(st)), []).append(st)
    for st in rc:
        for cand in by_sig.get(canonical_signature(search.game(st)), ()):
            if equivalent(search.game(cand), search.game(st)) is not None:
                return True
    return False


def _weak_confluence_failure(search: _Search, up_to_renaming: bool):
    for state in search.states():
        succ = search.successors(state)
        for b, c in itertools.combinations(succ, 2):
            if not _joinable(search, b, c, up_to_renaming):
                return (state, b, c)
    return None


def check_weak_confluence(
    game: Game,
    spec: RelationSpec,
    up_to_renaming: bool = False,
    bound: Optional[int] = None,
) -> CheckOutcome:
    """Every pair of one-step reducts of every reachable game must rejoin
    (possibly only up to renaming).  Counterexample: the first unjoinable pair."""
    search = _Search(game, spec, bound)
    failure = _weak_confluence_failure(search, up_to_renaming)
    if failure is None:
        return CheckOutcome(True)
    return CheckOutcome(False, (search.game(failure[1]), search.game(failure[2])))


def check_one_step_closed(game: Game, spec: RelationSpec, bound: Optional[int] = None) -> CheckOutcome:
    """For every reachable a there must be a single target a' (equal to a or
    one step below it) that every one-step reduct of a can also reach within
    one step.  Counterexample: the first a without such a target."""
    search = _Search(game, spec, bound)
    for state in search.states():
        succ = search.successors(state)
        if not succ:
            continue
        found = False
        for target in (state,) + succ:
            if all(
                b == target or target in search.successors(b)
                for b in succ
            ):
                found = True
                break
        if not found:
            return CheckOutcome(False, search.game(state))
    return CheckOutcome(True)


def check_one_at_a_time(
    game: Game,
    relation: Union[Relation, Inherent],
    bound: Optional[int] = None,
) -> bool:
    """Do single-strategy eliminations reach exactly the same games as bulk
    eliminations (transitive closures compared as reachable-state sets)?"""
    bulk = _Search(game, RelationSpec(relation, STRICT, ANY), bound)
    single = _Search(game, RelationSpec(relation, STRICT, SINGLE), bound)
    reach_bulk = set(bulk.states()) - {bulk.start}
    reach_single = set(single.states()) - {single.start}
    return reach_bulk == reach_single


def check_left_commutes(
    game: Game,
    spec1: RelationSpec,
    spec2: RelationSpec,
    bound: Optional[int] = None,
) -> CheckOutcome:
    """Does a spec1 step followed by a spec2 step always reorder into one
    spec2 step then finitely many spec1 steps?  Quantified over every state
    reachable under the union of both specs from the given game."""
    s1 = _Search(game, spec1, bound)
    s2 = _Search(game, spec2, bound)

    seen = {s1.start}
    frontier = [s1.start]
    order = [s1.start]
    while frontier:
        nxt = []
        for st in frontier:
            for succ in s1.successors(st) + s2.successors(st):
                if succ not in seen:
                    seen.add(succ)
                    order.append(succ)
                    nxt.append(succ)
        frontier = nxt

    for a in order:
        for b in s1.successors(a):
            for c in s2.successors(b):
                if not any(c in s1.reach(d) for d in s2.successors(a)):
                    return CheckOutcome(False, (s1.game(a), s1.game(b), s1.game(c)))
    return CheckOutcome(True)


def maximal_reduce(game: Game, relation: Union[Relation, Inherent], bound: Optional[int] = None) -> ReductionPath:
    """Repeatedly delete *everything* dominated (loose flavor: dominators from
    the pre-step sets) until nothing is.

    Each step records whether it was also valid with surviving dominators and
    whether it emptied some player's strategy set; a degenerate result ends
    the path."""
    limit = bound if bound is not None else config.max_total_strategies()
    if game.total_strategies > limit:
        raise SizeBoundExceeded(f"game has {game.total_strategies} strategies, bound is {limit}")
    steps: list[ReductionStep] = []
    current = game
    while True:
        removal: list[frozenset[int]] = []
        witnesses: list[dict[int, object]] = []
        for i in range(current.n):
            k = len(current.strategies[i])
            wmap: dict[int, object] = {}
            if isinstance(relation, Inherent):
                doomed = {
                    s
                    for s in range(k)
                    if is_inherently_dominated(current, InherentQuery(relation.base, i, s, None)).dominated
                }
            elif relation.mixed:
                doomed = set()
                for s in range(k):
                    allowed = [t for t in range(k) if t != s]
                    if not allowed:
                        continue
                    w = find_dominator(current, relation, i, s, allowed)
                    if w is not None:
                        doomed.add(s)
                        wmap[s] = w
            else:
                doomed = {
                    s
                    for s in range(k)
                    if any(t != s and dominates(current, relation, i, s, t) for t in range(k))
                }
            removal.append(frozenset(doomed))
            witnesses.append(wmap)
        if not any(removal):
            break
        strict_valid = True
        degenerate = False
        kept: list[tuple[int, ...]] = []
        for i in range(current.n):
            k = len(current.strategies[i])
            survivors = tuple(s for s in range(k) if s not in removal[i])
            kept.append(survivors)
            if not survivors:
                degenerate = True
        for i in range(current.n):
            if not strict_valid:
                break
            for s in removal[i]:
                if not kept[i]:
                    strict_valid = False
                    break
                if isinstance(relation, Inherent):
                    ok = is_inherently_dominated(
                        current, InherentQuery(relation.base, i, s, kept[i])
                    ).dominated
                elif relation.mixed:
                    w = witnesses[i].get(s)
                    if w is not None and not (set(w.dominator.support) & removal[i]):
                        ok = True
                    else:
                        ok = find_dominator(current, relation, i, s, kept[i]) is not None
                else:
                    ok = any(dominates(current, relation, i, s, t) for t in kept[i])
                if not ok:
                    strict_valid = False
                    break
        removed_labels = tuple(
            tuple(current.strategies[i][s] for s in sorted(removal[i])) for i in range(current.n)
        )
        nxt = restrict(current, kept, allow_degenerate=True)
        steps.append(ReductionStep(removed_labels, nxt, strict_valid, degenerate))
        if degenerate:
            break
        current = nxt
    return ReductionPath(game, tuple(steps))


def single_step_trace(game: Game, spec: RelationSpec, bound: Optional[int] = None) -> ReductionPath:
    """Deterministic single-elimination trace: repeatedly apply the first
    valid single-strategy removal until a normal form is reached."""
    single = RelationSpec(spec.relation, spec.arrow, SINGLE)
    search = _Search(game, single, bound)
    strict_search = (
        search if spec.arrow == STRICT else _Search(game, RelationSpec(spec.relation, STRICT, SINGLE), bound)
    )
    steps: list[ReductionStep] = []
    state = search.start
    while True:
        succ = search.successors(state)
        if not succ:
            break
        nxt = succ[0]
        removed = tuple(
            tuple(search.root.strategies[i][r] for r in sorted(set(state[i]) - set(nxt[i])))
            for i in range(game.n)
        )
        strict_valid = spec.arrow == STRICT or nxt in strict_search.successors(state)
        steps.append(ReductionStep(removed, search.game(nxt), strict_valid, False))
        state = nxt
    return ReductionPath(game, tuple(steps))


@dataclass(frozen=True)
class StructuredReport:
    base_normal_forms: tuple[Game, ...]
    endpoints: tuple[Game, ...]
    all_equivalent: bool
    closed_under_union: bool


def structured_elimination_scenario(
    game: Game,
    base: Relation,
    equiv: Relation,
    bound: Optional[int] = None,
) -> StructuredReport:
    """Enumerate every base-relation normal form, push each one down the
    equivalence-style relation to its own normal form, and report whether all
    endpoints are pairwise renaming-equivalent and closed under the union."""
    from .relations import union

    report = normal_forms(game, RelationSpec(base, STRICT, ANY), bound=bound)
    endpoints = []
    for g in report.normal_forms:
        endpoints.append(single_step_trace(g, RelationSpec(equiv, STRICT, SINGLE), bound).endpoint)
    classes = partition_by_equivalence(endpoints)
    all_equiv = len(classes) <= 1
    combined = RelationSpec(union(base, equiv), STRICT, SINGLE)
    closed = all(not successors(h, combined, bound) for h in endpoints)
    return StructuredReport(report.normal_forms, tuple(endpoints), all_equiv, closed)
