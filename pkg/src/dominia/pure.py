"""Decision procedures for pure-strategy dominance and the structural
conditions (TDI family, IIIA, strict partial order, hereditarity) that the
order-independence results lean on.

Everything here is an exact quantifier evaluation over the finite payoff
table.  The restriction-quantified checks enumerate every non-degenerate
restriction and are bounded by :func:`dominia.config.max_total_strategies`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import config
from .errors import SizeBoundExceeded
from .game import Game, restrict
from .relations import Relation


@dataclass(frozen=True)
class DominanceWitness:
    """One (dominated, dominator) pair for one player, with the member
    relation that justified it."""

    player: int
    dominated: int
    dominator: int
    relation: str


@dataclass(frozen=True)
class CheckOutcome:
    """Result of a property check: ok, or the first counterexample found."""

    ok: bool
    counterexample: object = None

    def __bool__(self) -> bool:
        return self.ok


def _holds(game: Game, tag: str, i: int, dominated: int, dominator: int, columns) -> bool:
    """Does ``dominator`` TAG-dominate ``dominated`` for player i over ``columns``?"""
    all_strict = True
    strict = False
    if tag in ("S", "W", "VW", "NW"):
        for col in columns:
            a = game.payoff(Game.fill(col, i, dominated), i)
            b = game.payoff(Game.fill(col, i, dominator), i)
            if a > b:
                return False
            if a < b:
                strict = True
            else:
                all_strict = False
        if tag == "S":
            return all_strict
        if tag == "VW":
            return True
        if not strict:
            return False
        if tag == "W":
            return True
        return _compatible_over(game, i, dominated, dominator, columns)
    if tag == "PE":
        for col in columns:
            pa = game.payoff_vector(Game.fill(col, i, dominated))
            pb = game.payoff_vector(Game.fill(col, i, dominator))
            if pa != pb:
                return False
        return True
    if tag == "COMPAT":
        return _compatible_over(game, i, dominated, dominator, columns)
    raise ValueError(f"unknown pure tag {tag!r}")


def _compatible_over(game: Game, i: int, s: int, t: int, columns) -> bool:
    for col in columns:
        a = Game.fill(col, i, s)
        b = Game.fill(col, i, t)
        if game.payoff(a, i) == game.payoff(b, i):
            if game.payoff_vector(a) != game.payoff_vector(b):
                return False
    return True


def dominates(game: Game, relation: Relation, player: int, dominated: int, dominator: int) -> bool:
    """Exact evaluation of the quantified payoff conditions; unions hold when
    any member does."""
    game._check_strategy(player, dominated)
    game._check_strategy(player, dominator)
    columns = game.opponent_profiles(player)
    return any(_holds(game, tag, player, dominated, dominator, columns) for tag in relation.tags)


def dominating_tag(game: Game, relation: Relation, player: int, dominated: int, dominator: int) -> Optional[str]:
    """First member tag under which ``dominator`` dominates ``dominated``, or None."""
    columns = game.opponent_profiles(player)
    for tag in relation.tags:
        if _holds(game, tag, player, dominated, dominator, columns):
            return tag
    return None


def compatible(game: Game, player: int, s: int, t: int) -> bool:
    """Whenever s and t tie in player's own payoff at some opponents' profile,
    they tie for every player there."""
    game._check_strategy(player, s)
    game._check_strategy(player, t)
    return _compatible_over(game, player, s, t, game.opponent_profiles(player))


def dominated_set(game: Game, relation: Relation) -> list[list[DominanceWitness]]:
    """Per player, one witness for every strategy dominated by some *distinct*
    strategy; the dominator is the least index that works (deterministic)."""
    out: list[list[DominanceWitness]] = []
    for i in range(game.n):
        columns = game.opponent_profiles(i)
        found: list[DominanceWitness] = []
        for s in range(len(game.strategies[i])):
            for t in range(len(game.strategies[i])):
                if t == s:
                    continue
                tag = next(
                    (tg for tg in relation.tags if _holds(game, tg, i, s, t, columns)),
                    None,
                )
                if tag is not None:
                    found.append(DominanceWitness(i, s, t, tag))
                    break
        out.append(found)
    return out


# -- TDI family ------------------------------------------------------------


def check_tdi(game: Game) -> CheckOutcome:
    """Transference of decisionmaker indifference: a tie in the deciding
    player's payoff transfers to every player's payoff.

    The counterexample is the lexicographically first violating tuple
    (i, j, r_i, t_i, opponents-profile).
    """
    for i in range(game.n):
        columns = game.opponent_profiles(i)
        for j in range(game.n):
            for r in range(len(game.strategies[i])):
                for t in range(len(game.strategies[i])):
                    for col in columns:
                        a = Game.fill(col, i, r)
                        b = Game.fill(col, i, t)
                        if game.payoff(a, i) == game.payoff(b, i) and game.payoff(a, j) != game.payoff(b, j):
                            return CheckOutcome(False, (i, j, r, t, col))
    return CheckOutcome(True)


def _check_bound(game: Game, bound: Optional[int]) -> None:
    limit = bound if bound is not None else config.max_total_strategies()
    if game.total_strategies > limit:
        raise SizeBoundExceeded(
            f"game has {game.total_strategies} strategies, bound is {limit}"
        )


def restrictions(game: Game) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All non-degenerate restrictions as per-player kept index tuples, each
    player's subsets in (size, lex) order.  Includes the full game."""
    per_player = []
    for i in range(game.n):
        k = len(game.strategies[i])
        subsets = [
            combo
            for size in range(1, k + 1)
            for combo in itertools.combinations(range(k), size)
        ]
        per_player.append(subsets)
    return itertools.product(*per_player)


def check_tdi_plus(game: Game, bound: Optional[int] = None) -> CheckOutcome:
    """TDI+ : in every restriction, weak dominance implies compatibility.

    A counterexample is (kept-sets, witness) for the first restriction where
    some weakly dominating pair is incompatible.
    """
    _check_bound(game, bound)
    for kept in restrictions(game):
        sub = restrict(game, kept)
        for i in range(sub.n):
            cols = sub.opponent_profiles(i)
            for r in range(len(sub.strategies[i])):
                for t in range(len(sub.strategies[i])):
                    if r == t:
                        continue
                    if _holds(sub, "W", i, r, t, cols) and not _compatible_over(sub, i, r, t, cols):
                        return CheckOutcome(False, (kept, DominanceWitness(i, r, t, "W")))
    return CheckOutcome(True)


def check_tdi_plus_plus(game: Game, bound: Optional[int] = None) -> CheckOutcome:
    """TDI++ : in every restriction, very weak dominance is weak dominance or
    payoff equivalence."""
    _check_bound(game, bound)
    for kept in restrictions(game):
        sub = restrict(game, kept)
        for i in range(sub.n):
            cols = sub.opponent_profiles(i)
            for r in range(len(sub.strategies[i])):
                for t in range(len(sub.strategies[i])):
                    if r == t:
                        continue
                    if (
                        _holds(sub, "VW", i, r, t, cols)
                        and not _holds(sub, "W", i, r, t, cols)
                        and not _holds(sub, "PE", i, r, t, cols)
                    ):
                        return CheckOutcome(False, (kept, DominanceWitness(i, r, t, "VW")))
    return CheckOutcome(True)


# -- structural properties ---------------------------------------------------


def is_strict_partial_order(game: Game, relation: Relation) -> bool:
    """Irreflexivity and transitivity of the relation's instance on this game."""
    for i in range(game.n):
        k = len(game.strategies[i])
        cols = game.opponent_profiles(i)
        edge = [
            [any(_holds(game, tg, i, s, t, cols) for tg in relation.tags) for t in range(k)]
            for s in range(k)
        ]
        for s in range(k):
            if edge[s][s]:
                return False
        for s in range(k):
            for t in range(k):
                if not edge[s][t]:
                    continue
                for u in range(k):
                    if edge[t][u] and not edge[s][u]:
                        return False
    return True


def is_hereditary(game: Game, relation: Relation, bound: Optional[int] = None) -> CheckOutcome:
    """Does every dominance instance of this game survive into every
    restriction containing both strategies?

    Counterexample: (kept-sets, witness); the pair dominates in the full game
    but not in that restriction.
    """
    _check_bound(game, bound)
    pairs: list[tuple[int, int, int, str]] = []
    for i in range(game.n):
        cols = game.opponent_profiles(i)
        for s in range(len(game.strategies[i])):
            for t in range(len(game.strategies[i])):
                if s == t:
                    continue
                for tag in relation.tags:
                    if _holds(game, tag, i, s, t, cols):
                        pairs.append((i, s, t, tag))
                        break
    for kept in restrictions(game):
        sub = None
        for (i, s, t, tag) in pairs:
            if s not in kept[i] or t not in kept[i]:
                continue
            if sub is None:
                sub = restrict(game, kept)
            ls, lt = kept[i].index(s), kept[i].index(t)
            if not dominates(sub, relation, i, ls, lt):
                return CheckOutcome(False, (kept, DominanceWitness(i, s, t, tag)))
    return CheckOutcome(True)


def check_iiia(game: Game, relation: Relation, bound: Optional[int] = None) -> CheckOutcome:
    """Individual independence of irrelevant alternatives: dominance between
    two surviving strategies is unaffected by dropping the same player's other
    strategies (an iff, checked over every subset containing the pair)."""
    _check_bound(game, bound)
    for i in range(game.n):
        k = len(game.strategies[i])
        full = game.opponent_profiles(i)
        for size in range(1, k + 1):
            for subset in itertools.combinations(range(k), size):
                kept = [tuple(range(len(game.strategies[j]))) for j in range(game.n)]
                kept[i] = subset
                sub = restrict(game, kept)
                cols = sub.opponent_profiles(i)
                for s in subset:
                    for t in subset:
                        before = any(_holds(game, tg, i, s, t, full) for tg in relation.tags)
                        ls, lt = subset.index(s), subset.index(t)
                        after = any(_holds(sub, tg, i, ls, lt, cols) for tg in relation.tags)
                        if before != after:
                            return CheckOutcome(False, (i, subset, DominanceWitness(i, s, t, str(relation))))
    return CheckOutcome(True)
