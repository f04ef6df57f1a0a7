"""Canonical workload queries against the movie review schema.

The texts live in graphforge.bench because the benchmark replays them;
the expected complexity counters stay pinned here, next to the tests
that enforce them.
"""

from graphforge.bench import (  # noqa: F401
    COMPLEX_FILTER,
    GENRE_DEMOGRAPHICS,
    SIMPLE_LOOKUP,
    USER_RATINGS,
    WORKLOAD,
)

# query name -> (S, W, K, D)
EXPECTED_COUNTERS = {
    "SimpleLookup": (3, 1, 0, 0),
    "ComplexFilter": (2, 2, 1, 0),
    "UserRatings": (5, 0, 0, 1),
    "GenreDemographics": (10, 1, 0, 3),
}
