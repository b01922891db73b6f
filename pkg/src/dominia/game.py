"""Immutable finite strategic games with exact rational payoffs.

A game holds per-player strategy labels and a total payoff table mapping each
joint pure-strategy profile to one rational payoff per player.  All payoffs
are `fractions.Fraction`, so every dominance test downstream is an exact
inequality with no tolerance anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateLabel,
    EmptyRestriction,
    EmptyStrategySet,
    IncompatibleParents,
    IndexOutOfRange,
    MissingPayoff,
)

Profile = tuple[int, ...]
PayoffVector = tuple[Fraction, ...]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"payoffs must be exact rationals, got {type(value).__name__}")


class Game:
    """A finite strategic game; immutable after construction.

    ``strategies[i]`` is player i's ordered tuple of labels; labels are unique
    within a player and across players.  ``table[profile]`` is the tuple of
    per-player payoffs at that index profile.  Set ``allow_degenerate`` to
    represent a game in which some player has no strategies left (only the
    loose maximal-elimination path ever produces these).
    """

    __slots__ = ("strategies", "n", "_table", "_degenerate", "_hash")

    def __init__(
        self,
        strategies: Sequence[Sequence[str]],
        table: Mapping[Profile, Sequence],
        allow_degenerate: bool = False,
    ):
        strats = tuple(tuple(s) for s in strategies)
        if not strats:
            raise EmptyStrategySet("a game needs at least one player")
        seen: set[str] = set()
        for i, labels in enumerate(strats):
            if not labels and not allow_degenerate:
                raise EmptyStrategySet(f"player {i} has no strategies")
            for lab in labels:
                if not isinstance(lab, str) or not lab:
                    raise DuplicateLabel(f"strategy labels must be non-empty strings, got {lab!r}")
                if lab in seen:
                    raise DuplicateLabel(f"label {lab!r} is used twice")
                seen.add(lab)
        n = len(strats)
        shape = tuple(len(s) for s in strats)
        fixed: dict[Profile, PayoffVector] = {}
        for profile in itertools.product(*(range(k) for k in shape)):
            try:
                row = table[profile]
            except KeyError:
                labels = tuple(strats[i][profile[i]] for i in range(n))
                raise MissingPayoff(f"no payoff entry for profile {labels}") from None
            vec = tuple(_as_fraction(v) for v in row)
            if len(vec) != n:
                raise MissingPayoff(
                    f"profile {profile} has {len(vec)} payoffs for {n} players"
                )
            fixed[profile] = vec
        object.__setattr__(self, "strategies", strats)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_table", fixed)
        object.__setattr__(self, "_degenerate", any(k == 0 for k in shape))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Game instances are immutable")

    # -- basic queries -------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strategies)

    @property
    def total_strategies(self) -> int:
        return sum(len(s) for s in self.strategies)

    @property
    def degenerate(self) -> bool:
        return self._degenerate

    def profiles(self) -> Iterator[Profile]:
        return itertools.product(*(range(k) for k in self.shape))

    def payoff_vector(self, profile: Profile) -> PayoffVector:
        self._check_profile(profile)
        return self._table[tuple(profile)]

    def payoff(self, profile: Profile, player: int) -> Fraction:
        """Exact payoff of ``player`` at the joint ``profile`` of strategy indices."""
        self._check_player(player)
        return self.payoff_vector(profile)[player]

    def opponent_profiles(self, player: int) -> list[Profile]:
        """All joint choices of the other players, as full profiles with
        player ``player``'s slot set to -1 (fill it with :meth:`fill`)."""
        self._check_player(player)
        ranges = [range(k) for k in self.shape]
        ranges[player] = [-1]  # type: ignore[list-item]
        return list(itertools.product(*ranges))

    @staticmethod
    def fill(column: Profile, player: int, strategy: int) -> Profile:
        return column[:player] + (strategy,) + column[player + 1 :]

    def label_profile(self, profile: Profile) -> tuple[str, ...]:
        return tuple(self.strategies[i][profile[i]] for i in range(self.n))

    def _check_player(self, player: int) -> None:
        if not 0 <= player < self.n:
            raise IndexOutOfRange(f"player {player} out of range for {self.n} players")

    def _check_profile(self, profile: Profile) -> None:
        if len(profile) != self.n:
            raise IndexOutOfRange(f"profile {profile} has wrong arity")
        for i, s in enumerate(profile):
            if not 0 <= s < len(self.strategies[i]):
                raise IndexOutOfRange(f"strategy {s} out of range for player {i}")

    def _check_strategy(self, player: int, strategy: int) -> None:
        self._check_player(player)
        if not 0 <= strategy < len(self.strategies[player]):
            raise IndexOutOfRange(f"strategy {strategy} out of range for player {player}")

    # -- equality ------------------------------------------------------

    def _key(self):
        return (self.strategies, tuple(sorted(self._table.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Game):
            return NotImplemented
        return self.strategies == other.strategies and self._table == other._table

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        dims = "x".join(str(k) for k in self.shape)
        return f"Game({dims}, players={self.n})"


def new_game(labels: Sequence[Sequence[str]], payoffs: Mapping, *, allow_degenerate: bool = False) -> Game:
    """Build a validated game.

    ``payoffs`` maps joint profiles to per-player payoff sequences; profiles
    may be given as label tuples or index tuples.  Payoff entries may be ints,
    Fractions, or rational strings like "-1/2".
    """
    strats = tuple(tuple(s) for s in labels)
    index_of: dict[str, tuple[int, int]] = {}
    for i, labs in enumerate(strats):
        for k, lab in enumerate(labs):
            if lab in index_of:
                raise DuplicateLabel(f"label {lab!r} is used twice")
            index_of[lab] = (i, k)
    table: dict[Profile, Sequence] = {}
    for profile, row in payoffs.items():
        key: Profile
        if profile and all(isinstance(p, str) for p in profile):
            idx = []
            for pos, lab in enumerate(profile):
                if lab not in index_of or index_of[lab][0] != pos:
                    raise MissingPayoff(f"unknown strategy {lab!r} in position {pos}")
                idx.append(index_of[lab][1])
            key = tuple(idx)
        else:
            key = tuple(profile)
        table[key] = row
    return Game(strats, table, allow_degenerate=allow_degenerate)


class Restriction:
    """A view of a parent game keeping a per-player subset of strategies."""

    __slots__ = ("parent", "kept")

    def __init__(self, parent: Game, kept: Sequence[Iterable[int]]):
        if len(kept) != parent.n:
            raise IndexOutOfRange("kept sets must cover every player")
        cleaned = []
        for i, ks in enumerate(kept):
            idx = sorted(set(ks))
            for s in idx:
                parent._check_strategy(i, s)
            cleaned.append(tuple(idx))
        self.parent = parent
        self.kept = tuple(cleaned)

    def to_game(self, allow_degenerate: bool = False) -> Game:
        return restrict(self.parent, self.kept, allow_degenerate=allow_degenerate)


def restrict(game: Game, kept: Sequence[Iterable[int]], *, allow_degenerate: bool = False) -> Game:
    """Materialize the restriction of ``game`` to the kept strategy indices.

    Strategy order is inherited from the parent; payoffs agree with the
    parent's on every kept profile.
    """
    if len(kept) != game.n:
        raise IndexOutOfRange("kept sets must cover every player")
    kept_idx: list[tuple[int, ...]] = []
    for i, ks in enumerate(kept):
        idx = tuple(sorted(set(ks)))
        for s in idx:
            game._check_strategy(i, s)
        if not idx and not allow_degenerate:
            raise EmptyRestriction(f"restriction empties player {i}'s strategy set")
        kept_idx.append(idx)
    labels = tuple(tuple(game.strategies[i][s] for s in kept_idx[i]) for i in range(game.n))
    table: dict[Profile, PayoffVector] = {}
    for local in itertools.product(*(range(len(k)) for k in kept_idx)):
        parent_profile = tuple(kept_idx[i][local[i]] for i in range(game.n))
        table[local] = game.payoff_vector(parent_profile)
    return Game(labels, table, allow_degenerate=allow_degenerate)


def intersect(g1: Game, g2: Game, *, allow_degenerate: bool = False) -> Game:
    """Intersection of two restrictions of a common parent.

    Keeps, per player, the labels present in both games; payoffs must agree on
    every shared profile, otherwise the games cannot come from one parent.
    """
    if g1.n != g2.n:
        raise IncompatibleParents("player counts differ")
    kept_labels: list[tuple[str, ...]] = []
    for i in range(g1.n):
        other = set(g2.strategies[i])
        common = tuple(lab for lab in g1.strategies[i] if lab in other)
        if not common and not allow_degenerate:
            raise EmptyRestriction(f"intersection empties player {i}'s strategy set")
        kept_labels.append(common)
    pos1 = [{lab: k for k, lab in enumerate(g1.strategies[i])} for i in range(g1.n)]
    pos2 = [{lab: k for k, lab in enumerate(g2.strategies[i])} for i in range(g2.n)]
    table: dict[Profile, PayoffVector] = {}
    for local in itertools.product(*(range(len(k)) for k in kept_labels)):
        labs = tuple(kept_labels[i][local[i]] for i in range(g1.n))
        p1 = tuple(pos1[i][labs[i]] for i in range(g1.n))
        p2 = tuple(pos2[i][labs[i]] for i in range(g1.n))
        v1 = g1.payoff_vector(p1)
        if v1 != g2.payoff_vector(p2):
            raise IncompatibleParents(f"payoffs disagree at shared profile {labs}")
        table[local] = v1
    return Game(kept_labels, table, allow_degenerate=allow_degenerate)
