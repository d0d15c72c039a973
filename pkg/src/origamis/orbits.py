r"""
Finite SL(2,Z)-orbits of origamis, their cusp decompositions, and
exhaustive enumeration of origamis by square count and stratum.

An orbit is represented by the set of canonical forms reachable from a
starting origami under the two generators T and R (monoid closure
suffices: on a finite orbit both act as permutations).  Cusps are the
T-orbits inside an SL(2,Z)-orbit; their cardinalities are the cusp
widths.

Enumeration scans one horizontal representative per cycle type of S_n
against every vertical permutation, which covers every origami up to
simultaneous relabeling at cost ~ p(n) * n! instead of (n!)^2.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError
from .origami import Origami, canonical_form, stratum_of
from .permutations import perm_to_array

DEFAULT_ORBIT_CAP = 10**6
DEFAULT_ENUMERATION_BUDGET = 10


def _orbit_cap(explicit=None):
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("ORIGAMI_MAX_ORBIT")
    return int(env) if env else DEFAULT_ORBIT_CAP


@dataclass(frozen=True)
class Orbit:
    """An SL(2,Z)-orbit: canonical members, sorted; all share the
    square count and the stratum signature."""

    members: tuple  # of Origami, sorted by (h, v)
    n_squares: int
    signature: object

    @property
    def size(self):
        return len(self.members)

    @property
    def representative(self):
        """The minimal canonical member; stable orbit identifier."""
        return self.members[0]


@dataclass(frozen=True)
class CuspData:
    """Cusp (T-orbit) decomposition of an orbit."""

    widths: tuple  # multiset of positive ints, sorted decreasingly
    representatives: tuple  # minimal member of each cusp, same order


def _key(h, v):
    return bytes(h) + bytes(v)


def _key_of_origami(o):
    return bytes(o.h) + bytes(o.v)


def _origami_from_key(key, n):
    return Origami(tuple(key[:n]), tuple(key[n : 2 * n]))


def _closure(seed_keys, n, cap):
    """BFS closure of canonical-form keys under T and R."""
    seen = set(seed_keys)
    frontier = list(seed_keys)
    while frontier:
        key = frontier.pop()
        h = np.frombuffer(key[:n], dtype=np.uint8).astype(np.int64)
        v = np.frombuffer(key[n:], dtype=np.uint8).astype(np.int64)
        for gen in (0, 1):
            ch, cv = kernels.step_canonical(h, v, gen)
            k2 = ch.astype(np.uint8).tobytes() + cv.astype(np.uint8).tobytes()
            if k2 not in seen:
                if len(seen) >= cap:
                    raise DomainError(
                        f"orbit too large: more than {cap} members "
                        "(raise ORIGAMI_MAX_ORBIT to override)"
                    )
                seen.add(k2)
                frontier.append(k2)
    return seen


def sl2z_orbit(o, max_orbit=None):
    """The SL(2,Z)-orbit of ``o`` as a set of canonical forms.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> sl2z_orbit(make_origami((1, 0, 2), (2, 1, 0))).size   # L-origami
        3
        >>> sl2z_orbit(make_origami((0,), (0,))).size             # unit torus
        1
    """
    cap = _orbit_cap(max_orbit)
    n = o.n_squares
    start = canonical_form(o)
    keys = _closure({_key_of_origami(start)}, n, cap)
    members = tuple(_origami_from_key(k, n) for k in sorted(keys))
    return Orbit(members, n, stratum_of(members[0]))


def cusp_decomposition(orbit):
    """Partition the orbit members into T-orbits (cusps).

    EXAMPLES::

        >>> from .origami import make_origami
        >>> cusp_decomposition(sl2z_orbit(make_origami((1, 0, 2), (2, 1, 0)))).widths
        (2, 1)
    """
    n = orbit.n_squares
    index = {_key_of_origami(m): i for i, m in enumerate(orbit.members)}
    succ = [0] * orbit.size
    for i, m in enumerate(orbit.members):
        ch, cv = kernels.step_canonical(
            perm_to_array(m.h), perm_to_array(m.v), 0
        )
        succ[i] = index[ch.astype(np.uint8).tobytes() + cv.astype(np.uint8).tobytes()]
    seen = [False] * orbit.size
    cusps = []
    for i in range(orbit.size):
        if seen[i]:
            continue
        cycle = [i]
        seen[i] = True
        j = succ[i]
        while j != i:
            seen[j] = True
            cycle.append(j)
            j = succ[j]
        cusps.append((len(cycle), orbit.members[min(cycle)]))
    total = sum(w for w, _ in cusps)
    assert total == orbit.size
    cusps.sort(key=lambda c: (-c[0], c[1].h, c[1].v))
    return CuspData(
        tuple(w for w, _ in cusps), tuple(rep for _, rep in cusps)
    )


def _partitions(n):
    """Partitions of n, each a decreasing tuple."""
    if n == 0:
        yield ()
        return
    def rec(remaining, maximum):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maximum), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def _cycle_type_representative(partition):
    """The permutation with consecutive cycles of the given lengths."""
    images = []
    base = 0
    for length in partition:
        images.extend([base + (i + 1) % length for i in range(length)])
        base += length
    return np.asarray(images, dtype=np.int64)


def enumerate_stratum(
    n, sig=None, budget=DEFAULT_ENUMERATION_BUDGET, max_orbit=None
):
    """All SL(2,Z)-orbits of connected n-square origamis, optionally
    restricted to the stratum with the given Abelian signature.

    Returns a tuple of :class:`Orbit`, sorted by (signature, minimal
    member); deterministic for fixed inputs.

    EXAMPLES::

        >>> from .strata import AbelianSignature
        >>> len(enumerate_stratum(3, AbelianSignature((2,))))
        1
        >>> enumerate_stratum(3, AbelianSignature((2,)))[0].size
        3
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"square count must be positive, got {n}")
    if n > budget:
        raise DomainError(
            f"enumeration budget exceeded: n = {n} > {budget} "
            "(pass a larger budget explicitly)"
        )
    if sig is not None:
        # commutator cycle type: each degree m contributes a cycle m+1
        if sig.marked_points:
            raise DomainError("marked points are not part of enumeration")
        if sum(sig.degrees) > n - 1:
            return ()
        filter_type = np.asarray(
            sorted(m + 1 for m in sig.degrees), dtype=np.int64
        )
        use_filter = True
    else:
        filter_type = np.empty(0, dtype=np.int64)
        use_filter = False

    out = np.empty((math.factorial(n), 2 * n), dtype=np.int8)
    chunks = []
    for partition in _partitions(n):
        rep = _cycle_type_representative(partition)
        rows = kernels.scan_pairs(rep, filter_type, use_filter, out)
        if rows:
            chunks.append(out[:rows].copy())
    if not chunks:
        return ()
    all_rows = np.unique(np.concatenate(chunks), axis=0)

    cap = _orbit_cap(max_orbit)
    keys = {row.tobytes() for row in all_rows}
    orbits = []
    remaining = set(keys)
    for row in all_rows:  # ascending order: orbit reps found minimal-first
        key = row.tobytes()
        if key not in remaining:
            continue
        orbit_keys = _closure({key}, n, cap)
        if not orbit_keys <= keys:
            # T and R preserve square count and stratum, so the scan set
            # must be closed; anything else is a bug
            raise AssertionError("enumeration set not closed under T, R")
        remaining -= orbit_keys
        members = tuple(_origami_from_key(k, n) for k in sorted(orbit_keys))
        orbits.append(Orbit(members, n, stratum_of(members[0])))
    orbits.sort(key=lambda orb: (orb.signature.degrees, orb.members[0].h, orb.members[0].v))
    return tuple(orbits)
