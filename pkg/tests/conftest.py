import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dominia import generator_params, random_game


@pytest.fixture(scope="session")
def small_games():
    """A deterministic pool of small games for sampled-property tests."""
    games = []
    for k in range(40):
        players = 2 + (k % 2)
        strategies = tuple(2 + ((k + j) % 3) for j in range(players))
        games.append(
            random_game(generator_params(players, strategies, -3, 3, Fraction(1, 4), 1000 + k))
        )
    return games
