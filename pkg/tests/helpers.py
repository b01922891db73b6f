"""Brute-force re-implementations used as test oracles.

Deliberately written against the raw payoff table, not the library's column
helpers, so they share no code path with what they check.
"""

from fractions import Fraction
import itertools

from dominia import Game


def profiles_fixing(game: Game, player: int, strategy: int):
    ranges = [range(k) for k in game.shape]
    ranges[player] = [strategy]
    return itertools.product(*ranges)


def others(game: Game, player: int):
    ranges = [range(k) for i, k in enumerate(game.shape) if i != player]
    return itertools.product(*ranges)


def with_choice(rest, player, strategy):
    rest = tuple(rest)
    return rest[:player] + (strategy,) + rest[player:]


def naive_weak(game, i, s, t):
    some_strict = False
    for rest in others(game, i):
        a = game.payoff(with_choice(rest, i, s), i)
        b = game.payoff(with_choice(rest, i, t), i)
        if a > b:
            return False
        if a < b:
            some_strict = True
    return some_strict


def naive_strict(game, i, s, t):
    return all(
        game.payoff(with_choice(rest, i, s), i) < game.payoff(with_choice(rest, i, t), i)
        for rest in others(game, i)
    )


def naive_very_weak(game, i, s, t):
    return all(
        game.payoff(with_choice(rest, i, s), i) <= game.payoff(with_choice(rest, i, t), i)
        for rest in others(game, i)
    )


def naive_compatible(game, i, s, t):
    for rest in others(game, i):
        pa = with_choice(rest, i, s)
        pb = with_choice(rest, i, t)
        if game.payoff(pa, i) == game.payoff(pb, i):
            for j in range(game.n):
                if game.payoff(pa, j) != game.payoff(pb, j):
                    return False
    return True


def naive_nice_weak(game, i, s, t):
    return naive_weak(game, i, s, t) and naive_compatible(game, i, s, t)


def naive_payoff_equivalent(game, i, s, t):
    for rest in others(game, i):
        pa = with_choice(rest, i, s)
        pb = with_choice(rest, i, t)
        for j in range(game.n):
            if game.payoff(pa, j) != game.payoff(pb, j):
                return False
    return True


def mix_payoff(game, i, weights, rest, j):
    return sum(
        Fraction(w) * game.payoff(with_choice(rest, i, s), j) for s, w in weights.items()
    )
