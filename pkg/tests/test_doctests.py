import doctest

import pytest

import origamis.homology
import origamis.montecarlo
import origamis.orbits
import origamis.origami
import origamis.permutations
import origamis.rationals
import origamis.strata
import origamis.svc


@pytest.mark.parametrize(
    "module",
    [
        origamis.rationals,
        origamis.permutations,
        origamis.origami,
        origamis.strata,
        origamis.orbits,
        origamis.svc,
        origamis.homology,
        origamis.montecarlo,
    ],
    ids=lambda m: m.__name__,
)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
