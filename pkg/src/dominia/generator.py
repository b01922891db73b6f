"""Seeded random-game generation with a portable, documented PRNG.

The generator uses SplitMix64 (Steele, Lea & Flood's mixing constants), a
64-bit stateful mixer: state advances by the golden-gamma increment
0x9E3779B97F4A7C15 and each output is the finalized mix of the new state.
The algorithm is fixed here so a (params, seed) pair is a portable,
bit-reproducible claim across platforms and Python versions.

Integer draws use rejection sampling, so there is no modulo bias; the
duplicate-injection coin compares an exact 64-bit dyadic fraction against the
configured rational probability.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams
from .game import Game, new_game

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator; state and outputs are pure functions
    of the seed."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise InvalidParams("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def bernoulli(self, p: Fraction) -> bool:
        # u = k / 2^64 is uniform on [0,1); compare exactly against p
        return Fraction(self.next_u64(), 1 << 64) < p


@dataclass(frozen=True)
class GeneratorParams:
    players: int
    strategies: tuple[int, ...]  # per player
    lo: int
    hi: int
    dup_prob: Fraction
    seed: int

    def __post_init__(self):
        if not 1 <= self.players <= 4:
            raise InvalidParams(f"players must be in [1, 4], got {self.players}")
        if len(self.strategies) != self.players:
            raise InvalidParams("need one strategy count per player")
        for k in self.strategies:
            if not 1 <= k <= 6:
                raise InvalidParams(f"strategies per player must be in [1, 6], got {k}")
        if self.lo > self.hi:
            raise InvalidParams(f"empty payoff range [{self.lo}, {self.hi}]")
        if not 0 <= self.dup_prob <= 1:
            raise InvalidParams(f"dup_prob must be in [0, 1], got {self.dup_prob}")
        if not 0 <= self.seed < (1 << 64):
            raise InvalidParams("seed must be an unsigned 64-bit integer")


def generator_params(players, strategies, lo, hi, dup_prob, seed) -> GeneratorParams:
    if isinstance(strategies, int):
        strategies = (strategies,) * players
    return GeneratorParams(
        int(players), tuple(int(k) for k in strategies), int(lo), int(hi), Fraction(dup_prob), int(seed)
    )


def _labels(params: GeneratorParams) -> list[tuple[str, ...]]:
    # labels are unique across players: a1..aK for player 0, b1.. for player 1, ...
    return [
        tuple(f"{chr(ord('a') + i)}{k + 1}" for k in range(params.strategies[i]))
        for i in range(params.players)
    ]


def random_game(params: GeneratorParams) -> Game:
    """Deterministic for a given (params, seed).

    Payoffs are drawn uniformly from the integer range in lexicographic
    profile order (players innermost); afterwards one duplicate-injection coin
    is flipped, and on success a uniformly chosen strategy's payoffs are
    copied onto another strategy of the same player, planting an exact
    payoff-equivalent pair."""
    rng = SplitMix64(params.seed)
    labels = _labels(params)
    table: dict[tuple[int, ...], list[int]] = {}
    for profile in itertools.product(*(range(k) for k in params.strategies)):
        table[profile] = [rng.int_in(params.lo, params.hi) for _ in range(params.players)]

    if params.dup_prob > 0 and rng.bernoulli(params.dup_prob):
        eligible = [i for i in range(params.players) if params.strategies[i] >= 2]
        if eligible:
            i = eligible[rng.below(len(eligible))]
            k = params.strategies[i]
            src = rng.below(k)
            tgt = rng.below(k - 1)
            if tgt >= src:
                tgt += 1
            for profile in list(table):
                if profile[i] == src:
                    clone = profile[:i] + (tgt,) + profile[i + 1 :]
                    table[clone] = list(table[profile])

    return new_game(labels, table)
