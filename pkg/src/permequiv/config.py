from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Search bounds shared by the solvers.

    exhaustive_bound: largest p**k scanned point by point.
    auto_exhaustive: ``strategy="auto"`` scans exhaustively up to this many points,
        and backtracks above it.
    max_distinct_values: largest number of distinct entries the backtracking
        variety solver accepts.
    all_perm_bound: largest n for which a constant vector may yield all n! permutations.
    solution_cap: most (X, Y) pairs or verified keys returned.
    bruteforce_bound: largest q**k message scan for minimum distance and non-MDS codes.
    """

    exhaustive_bound: int = 10**7
    auto_exhaustive: int = 20_000
    max_distinct_values: int = 32
    all_perm_bound: int = 7
    solution_cap: int = 64
    bruteforce_bound: int = 10**6


DEFAULT_LIMITS = Limits()
