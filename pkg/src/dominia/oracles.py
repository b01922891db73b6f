"""Independent decision oracles used to cross-check the LP route.

Nothing here touches the simplex.  Strict mixed dominance is decided through
the exact value of a zero-sum margin game, computed by square-submatrix
(kernel) enumeration with full certificate verification; payoff-equivalence
to a mix is decided by Gaussian elimination over candidate supports.  Both
are complete at the small sizes they are used for, and both only ever return
an answer they have verified directly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional

from .game import Game

ZERO = Fraction(0)
ONE = Fraction(1)


def invert(matrix: list[list[Fraction]]) -> Optional[list[list[Fraction]]]:
    """Exact inverse by Gauss-Jordan, or None when singular."""
    n = len(matrix)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_unique(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[tuple[str, list[Fraction]]]:
    """RREF solve of a (possibly overdetermined) system.

    Returns ("unique", x), ("many", particular-solution), or None when
    inconsistent."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((k for k in range(r, m) if aug[k][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = ONE / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(m):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for k in range(r, m):
        if aug[k][n] != 0:
            return None
    x = [ZERO] * n
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][n]
    return ("unique" if len(pivots) == n else "many", x)


def matrix_value(matrix: list[list[Fraction]]) -> Fraction:
    """Exact value of the zero-sum matrix game (row player maximizes).

    Enumerates square submatrices as candidate kernels; every candidate value
    is certified against the full matrix with exact optimal strategies for
    both players before it is accepted.  The matrix is first shifted to make
    its value nonzero, which forces some certifiable kernel to be nonsingular;
    the shift moves the value by a known constant and nothing else."""
    shift = ONE - min(min(row) for row in matrix)
    if shift > 0:
        return _positive_matrix_value([[v + shift for v in row] for row in matrix]) - shift
    return _positive_matrix_value(matrix)


def _positive_matrix_value(matrix: list[list[Fraction]]) -> Fraction:
    rows, cols = len(matrix), len(matrix[0])
    for size in range(1, min(rows, cols) + 1):
        for rset in itertools.combinations(range(rows), size):
            for cset in itertools.combinations(range(cols), size):
                sub = [[matrix[r][c] for c in cset] for r in rset]
                inv = invert(sub)
                if inv is None:
                    continue
                denom = sum(sum(row) for row in inv)
                if denom == 0:
                    continue
                value = ONE / denom
                x_sub = [value * sum(inv[r][j] for r in range(size)) for j in range(size)]
                y_sub = [value * sum(inv[r][j] for j in range(size)) for r in range(size)]
                if any(v < 0 for v in x_sub) or any(v < 0 for v in y_sub):
                    continue
                x = [ZERO] * rows
                for j, r in enumerate(rset):
                    x[r] = x_sub[j]
                y = [ZERO] * cols
                for j, c in enumerate(cset):
                    y[c] = y_sub[j]
                # certify: x guarantees >= value against every column,
                # y guarantees <= value against every row
                if all(
                    sum(x[r] * matrix[r][c] for r in range(rows)) >= value for c in range(cols)
                ) and all(
                    sum(matrix[r][c] * y[c] for c in range(cols)) <= value for r in range(rows)
                ):
                    return value
    raise ArithmeticError("no kernel certified; matrix game solver is broken")


def sm_dominated_oracle(game: Game, player: int, strategy: int, allowed) -> bool:
    """Strict mixed dominance via the margin game's exact value."""
    allowed = [t for t in sorted(set(allowed))]
    cols = game.opponent_profiles(player)
    margin = [
        [
            game.payoff(Game.fill(col, player, t), player)
            - game.payoff(Game.fill(col, player, strategy), player)
            for col in cols
        ]
        for t in allowed
    ]
    return matrix_value(margin) > 0


def pem_dominated_oracle(game: Game, player: int, strategy: int, allowed) -> bool:
    """Payoff equivalence to a mix over ``allowed`` minus the strategy itself,
    by support enumeration: each candidate support whose equality system has
    a unique solution with strictly positive weights is verified in full.

    Complete because any solvable instance has an extreme-point solution whose
    support carries linearly independent columns, i.e. a unique-solution
    support."""
    allowed = [t for t in sorted(set(allowed)) if t != strategy]
    if not allowed:
        return False
    cols = game.opponent_profiles(player)
    targets = [game.payoff(Game.fill(col, player, strategy), j) for col in cols for j in range(game.n)]
    columns = {
        t: [game.payoff(Game.fill(col, player, t), j) for col in cols for j in range(game.n)]
        for t in allowed
    }
    for size in range(1, len(allowed) + 1):
        for support in itertools.combinations(allowed, size):
            rows = [[columns[t][k] for t in support] for k in range(len(targets))]
            rows.append([ONE] * size)
            rhs = list(targets) + [ONE]
            res = solve_unique(rows, rhs)
            if res is None or res[0] != "unique":
                continue
            w = res[1]
            if any(v <= 0 for v in w):
                continue
            if all(
                sum(w[j] * columns[t][k] for j, t in enumerate(support)) == targets[k]
                for k in range(len(targets))
            ):
                return True
    return False
