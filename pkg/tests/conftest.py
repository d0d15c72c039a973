import itertools

import numpy as np
import pytest

from origamis import kernels
from origamis.origami import Origami, make_origami, conjugate
from origamis.permutations import perm_random, perm_to_array


def random_origami(rng, n_max=10, n_min=1):
    """Uniform-ish random connected origami: rejection-sample pairs."""
    n = int(rng.integers(n_min, n_max + 1))
    while True:
        h = perm_random(rng, n)
        v = perm_random(rng, n)
        if kernels.is_transitive(perm_to_array(h), perm_to_array(v)):
            return Origami(h, v)


def exhaustive_canonical(o):
    """Independent canonical-form oracle: smallest BFS relabeling found
    by trying every start square on every conjugate (brute force over
    all of S_n; small n only)."""
    n = o.n_squares
    best = None
    for images in itertools.permutations(range(n)):
        c = conjugate(o, images)
        key = (c.h, c.v)
        if best is None or key < best:
            best = key
    return best


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(20250809))


# spec's worked surfaces, used across test modules
@pytest.fixture
def l_origami():
    return make_origami((1, 0, 2), (2, 1, 0))  # h=(1,2), v=(1,3)


@pytest.fixture
def wollmilchsau():
    from origamis.origami import parse_origami

    return parse_origami("n=8; h=(1,2,3,4)(5,6,7,8); v=(1,5,3,7)(2,8,4,6)")
