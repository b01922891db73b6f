"""Inherent (unary) dominance: a strategy is inherently dominated when every
non-empty subset of the opponents' joint profiles admits some dominator on
that sub-game (a possibly different dominator per subset).

Subsets range over the *joint* profile set, not over products of per-player
subsets.  Enumeration is exponential and capped; two sound shortcuts keep the
common cases cheap:

* if the base relation already fails on the full profile set, the full set is
  itself a failing subset;
* a strictly dominating strategy (pure or mixed) stays strictly dominating on
  every subset of profiles, which implies the weak/nice-weak/very-weak bases
  there at once.

Both shortcuts are pointwise restriction arguments; neither assumes any
coincidence theorem, so the checks stay honest oracles for those theorems.
For bases whose defining conditions are pointwise (S, VW, PE and their mixed
versions) the full profile set is decisive in both directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from . import config
from .errors import SizeBoundExceeded
from .game import Game
from .mixed import MixedWitness, find_dominator, point_mass
from .pure import _holds
from .relations import SM, Relation

# strict counterpart used by the positive shortcut, and the pure analog used
# for cheap point-mass scans
_STRICT_OF = {"W": "S", "NW": "S", "VW": "S", "WM": "SM", "NWM": "SM", "VWM": "SM"}
_PURE_OF = {"SM": "S", "WM": "W", "VWM": "VW", "NWM": "NW", "PEM": "PE"}
_POINTWISE = {"S", "VW", "PE", "SM", "VWM", "PEM"}


@dataclass(frozen=True)
class InherentQuery:
    base: Relation
    player: int
    strategy: int
    # None: dominators may come from the player's full strategy set (loose
    # flavor); otherwise they must lie in this surviving subset.
    must_survive: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class InherentResult:
    dominated: bool
    failing_subset: Optional[tuple] = None
    witness_table: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.dominated


def _pure_dominator_on(game, tag, i, s, allowed, cols) -> Optional[int]:
    for t in allowed:
        if t != s and _holds(game, tag, i, s, t, cols):
            return t
    return None


def _dominated_given(game, base: Relation, i, s, allowed, cols):
    """A dominator for ``s`` on the sub-game with opponent profiles ``cols``,
    or None.  Pure bases scan; mixed bases scan point masses then solve."""
    if not base.mixed:
        for tag in base.tags:
            t = _pure_dominator_on(game, tag, i, s, allowed, cols)
            if t is not None:
                return t
        return None
    for tag in base.tags:
        pure_tag = _PURE_OF[tag]
        scan = [t for t in allowed if t != s] if tag == "PEM" else allowed
        t = _pure_dominator_on(game, pure_tag, i, s, scan, cols)
        if t is not None:
            return MixedWitness(i, s, point_mass(i, t), tag)
    return find_dominator(game, base, i, s, allowed, columns=cols)


def is_inherently_dominated(
    game: Game,
    query: InherentQuery,
    *,
    want_table: bool = False,
    subset_bound: Optional[int] = None,
) -> InherentResult:
    """Decide inherent dominance; optionally record one dominator per subset.

    The bound caps how many profile subsets are actually enumerated; queries
    resolved by the full-set check or the strict shortcut never hit it.
    ``want_table=True`` disables the positive shortcut so the table is total.
    """
    base = query.base
    i, s = query.player, query.strategy
    game._check_strategy(i, s)
    allowed = (
        tuple(range(len(game.strategies[i])))
        if query.must_survive is None
        else tuple(sorted(set(query.must_survive)))
    )
    cols = game.opponent_profiles(i)
    full = tuple(cols)

    # full profile set is one of the quantified subsets: a cheap complete
    # negative test, and decisive for pointwise bases
    full_witness = _dominated_given(game, base, i, s, allowed, full)
    if full_witness is None:
        return InherentResult(False, failing_subset=full)
    pointwise = all(tag in _POINTWISE for tag in base.tags)
    if pointwise and not want_table:
        return InherentResult(True, witness_table={full: full_witness})

    if not want_table:
        strict_tags = {t for tag in base.tags for t in ([_STRICT_OF.get(tag)] if tag in _STRICT_OF else [tag])}
        strict_tags.discard(None)
        strict_rel_tags = tuple(t for t in ("S", "SM") if t in strict_tags)
        for tag in strict_rel_tags:
            if tag == "S":
                if _pure_dominator_on(game, "S", i, s, allowed, full) is not None:
                    return InherentResult(True, witness_table={full: full_witness})
            elif find_dominator(game, SM, i, s, allowed, columns=full) is not None:
                return InherentResult(True, witness_table={full: full_witness})

    bound = subset_bound if subset_bound is not None else config.INHERENT_SUBSET_BOUND
    table: dict = {}
    checked = 0
    for size in range(1, len(full) + 1):
        for subset in itertools.combinations(full, size):
            checked += 1
            if checked > bound:
                raise SizeBoundExceeded(
                    f"inherent dominance would enumerate more than {bound} profile subsets"
                )
            w = (
                full_witness
                if subset == full
                else _dominated_given(game, base, i, s, allowed, subset)
            )
            if w is None:
                return InherentResult(False, failing_subset=subset)
            if want_table:
                table[subset] = w
    return InherentResult(True, witness_table=table if want_table else {full: full_witness})


def inherent_dominated_set(
    game: Game,
    base: Relation,
    must_survive: Optional[Sequence[Sequence[int]]] = None,
    *,
    subset_bound: Optional[int] = None,
) -> list[list[int]]:
    """Per player, the strategies that are inherently dominated."""
    out: list[list[int]] = []
    for i in range(game.n):
        survive = None if must_survive is None else tuple(must_survive[i])
        found = [
            s
            for s in range(len(game.strategies[i]))
            if is_inherently_dominated(
                game, InherentQuery(base, i, s, survive), subset_bound=subset_bound
            ).dominated
        ]
        out.append(found)
    return out
