"""Game equivalence up to per-player strategy renaming, plus the one-shot
purely-reduced and fully-reduced constructions.

Two games are equivalent when, player by player (player identities fixed,
never permuted), the strategies can be renamed bijectively so every payoff of
every player is preserved.  The search backtracks over per-player bijections,
pruned by per-strategy payoff-multiset fingerprints; a found renaming is fully
verified before it is returned, so the fingerprints only ever prune.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .game import Game, restrict
from .mixed import find_dominator
from .pure import _check_bound
from .relations import PEM


@dataclass(frozen=True)
class Renaming:
    """Per-player bijections: maps[i][s] is the image of player i's strategy s."""

    maps: tuple[tuple[int, ...], ...]

    def apply_kept(self, kept):
        return tuple(tuple(sorted(self.maps[i][s] for s in kept_i)) for i, kept_i in enumerate(kept))

    def inverse(self) -> "Renaming":
        out = []
        for m in self.maps:
            inv = [0] * len(m)
            for s, t in enumerate(m):
                inv[t] = s
            out.append(tuple(inv))
        return Renaming(tuple(out))

    def compose(self, then: "Renaming") -> "Renaming":
        """Renaming equal to applying self first, then ``then``."""
        return Renaming(tuple(tuple(then.maps[i][t] for t in m) for i, m in enumerate(self.maps)))


def _fingerprints(game: Game, player: int) -> list[tuple]:
    """Per-strategy invariant: sorted multiset of full payoff vectors across
    the opponents' joint profiles.  Stable under renaming any player."""
    cols = game.opponent_profiles(player)
    out = []
    for s in range(len(game.strategies[player])):
        rows = sorted(game.payoff_vector(Game.fill(col, player, s)) for col in cols)
        out.append(tuple(rows))
    return out


def canonical_signature(game: Game):
    """Hashable pre-filter: equal for equivalent games, possibly equal for
    some non-equivalent ones.  Never used as a decider."""
    return tuple(tuple(sorted(_fingerprints(game, i))) for i in range(game.n))


def _verify_renaming(g1: Game, g2: Game, maps) -> bool:
    for profile in g1.profiles():
        image = tuple(maps[i][profile[i]] for i in range(g1.n))
        if g1.payoff_vector(profile) != g2.payoff_vector(image):
            return False
    return True


def equivalent(g1: Game, g2: Game) -> Optional[Renaming]:
    """A payoff-preserving per-player renaming from g1 onto g2, or None."""
    if g1.n != g2.n or g1.shape != g2.shape:
        return None
    fp1 = [_fingerprints(g1, i) for i in range(g1.n)]
    fp2 = [_fingerprints(g2, i) for i in range(g2.n)]
    candidates: list[list[list[int]]] = []
    for i in range(g1.n):
        per_strategy = []
        for s in range(len(g1.strategies[i])):
            cands = [t for t in range(len(g2.strategies[i])) if fp2[i][t] == fp1[i][s]]
            if not cands:
                return None
            per_strategy.append(cands)
        candidates.append(per_strategy)

    slots = [(i, s) for i in range(g1.n) for s in range(len(g1.strategies[i]))]
    maps = [[-1] * len(g1.strategies[i]) for i in range(g1.n)]
    used = [set() for _ in range(g1.n)]

    def backtrack(pos: int) -> bool:
        if pos == len(slots):
            return _verify_renaming(g1, g2, maps)
        i, s = slots[pos]
        for t in candidates[i][s]:
            if t in used[i]:
                continue
            maps[i][s] = t
            used[i].add(t)
            if backtrack(pos + 1):
                return True
            used[i].remove(t)
        maps[i][s] = -1
        return False

    if backtrack(0):
        return Renaming(tuple(tuple(m) for m in maps))
    return None


def purely_reduce(game: Game) -> Game:
    """One elimination step removing all but one representative of each class
    of mutually payoff-equivalent strategies (least index kept).

    The result has no payoff-equivalent pair left and is reachable from the
    input by a single bulk elimination of payoff-equivalent strategies."""
    kept = []
    for i in range(game.n):
        cols = game.opponent_profiles(i)
        seen: dict[tuple, int] = {}
        reps = []
        for s in range(len(game.strategies[i])):
            row = tuple(game.payoff_vector(Game.fill(col, i, s)) for col in cols)
            if row not in seen:
                seen[row] = s
                reps.append(s)
        kept.append(tuple(reps))
    if all(len(kept[i]) == len(game.strategies[i]) for i in range(game.n)):
        return game
    return restrict(game, kept)


def fully_reduce(game: Game, bound: Optional[int] = None) -> Game:
    """Iterate single-strategy removal of randomized-redundant strategies
    (payoff equivalent, for every player, to a mix of surviving strategies)
    until none remains; the least-index redundant strategy goes first."""
    _check_bound(game, bound)
    current = game
    while True:
        removed = False
        for i in range(current.n):
            k = len(current.strategies[i])
            if k < 2:
                continue
            for s in range(k):
                others = [t for t in range(k) if t != s]
                if find_dominator(current, PEM, i, s, others) is not None:
                    keep = [tuple(range(len(current.strategies[j]))) for j in range(current.n)]
                    keep[i] = tuple(others)
                    current = restrict(current, keep)
                    removed = True
                    break
            if removed:
                break
        if not removed:
            return current


def games_equivalent(g1: Game, g2: Game) -> bool:
    return equivalent(g1, g2) is not None


def partition_by_equivalence(games) -> list[list[int]]:
    """Indices of the input grouped into equivalence classes (signature
    pre-filter first, full check as the decider)."""
    games = list(games)
    classes: list[list[int]] = []
    sigs = [canonical_signature(g) for g in games]
    reps: list[int] = []
    for idx, g in enumerate(games):
        placed = False
        for c, rep in enumerate(reps):
            if sigs[idx] == sigs[rep] and equivalent(g, games[rep]) is not None:
                classes[c].append(idx)
                placed = True
                break
        if not placed:
            classes.append([idx])
            reps.append(idx)
    return classes
