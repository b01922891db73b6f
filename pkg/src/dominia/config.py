"""Size-bound configuration for the exhaustive checkers.

Every restriction-quantified or subset-quantified procedure in this package is
exponential by design.  The bounds below keep them at desk scale; the
DOMINIA_MAX_STRATEGIES environment variable overrides the main one.
"""

import os

# Total strategy count allowed for restriction enumeration and bulk-step
# successor enumeration.
DEFAULT_MAX_STRATEGIES = 14

# Cap on the number of opponent-profile subsets an inherent-dominance query
# may enumerate (2**12).
INHERENT_SUBSET_BOUND = 4096

# Cap on the number of candidate equality sets the nice-weak-mixed decision
# may enumerate after pruning forced columns (2**12).
EQUALITY_SET_BOUND = 4096


def max_total_strategies() -> int:
    raw = os.environ.get("DOMINIA_MAX_STRATEGIES")
    if raw is None:
        return DEFAULT_MAX_STRATEGIES
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"DOMINIA_MAX_STRATEGIES must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("DOMINIA_MAX_STRATEGIES must be positive")
    return value
