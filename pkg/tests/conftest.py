"""Shared fixtures.

The construction pipeline and the facet oracle are memoized inside the
library, so this helper just names the common pairing; everything heavy is
computed once per pytest process no matter how many tests ask for it.
"""

import pytest

from ncpoly.deformed import projected_cube
from ncpoly.polytope import facets_from_vrep


@pytest.fixture(scope="session")
def constructed():
    def _get(n, d):
        pc = projected_cube(n, d)
        inc = facets_from_vrep(pc.shadow)
        return pc, inc

    return _get
