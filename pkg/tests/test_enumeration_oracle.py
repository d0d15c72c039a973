"""Independent counting oracles for the enumeration machinery.

Two classical facts pin down the numbers the enumerator must produce:

- the transitive pairs on n squares correspond to pointed index-n
  subgroups of the free group on two generators, so their count is
  ``N_n * (n-1)!`` where ``N_n`` obeys M. Hall's recursion
  ``N_n = n * n! - sum_{i<n} (n-i)! N_i``;
- origamis (classes up to simultaneous conjugation) are orbits of the
  S_n-action on transitive pairs, counted by Burnside's lemma, where
  the pairs fixed by sigma are the transitive pairs inside its
  centralizer.

Neither computation shares any code with the enumerator.
"""

import itertools
import math
from collections import Counter

from origamis import kernels
from origamis.orbits import enumerate_stratum
from origamis.permutations import perm_to_array


def hall_subgroup_counts(n_max):
    counts = {}
    for n in range(1, n_max + 1):
        total = n * math.factorial(n)
        for i in range(1, n):
            total -= math.factorial(n - i) * counts[i]
        counts[n] = total
    return counts


def transitive_pair_count_brute(n):
    count = 0
    for h in itertools.permutations(range(n)):
        ha = perm_to_array(h)
        for v in itertools.permutations(range(n)):
            if kernels.is_transitive(ha, perm_to_array(v)):
                count += 1
    return count


def burnside_class_count(n):
    """Number of origami classes with n squares via Burnside."""
    total = 0
    for sigma in itertools.permutations(range(n)):
        centralizer = [
            tau
            for tau in itertools.permutations(range(n))
            if all(tau[sigma[x]] == sigma[tau[x]] for x in range(n))
        ]
        fixed = 0
        for h in centralizer:
            ha = perm_to_array(h)
            for v in centralizer:
                if kernels.is_transitive(ha, perm_to_array(v)):
                    fixed += 1
        total += fixed
    assert total % math.factorial(n) == 0
    return total // math.factorial(n)


def test_hall_recursion_against_brute_force():
    counts = hall_subgroup_counts(5)
    assert [counts[i] for i in range(1, 6)] == [1, 3, 13, 71, 461]
    for n in range(1, 6):
        assert transitive_pair_count_brute(n) == counts[n] * math.factorial(n - 1)


def test_enumeration_matches_burnside():
    for n in range(1, 6):
        classes = burnside_class_count(n)
        enumerated = sum(o.size for o in enumerate_stratum(n))
        assert enumerated == classes, (n, enumerated, classes)


def test_enumeration_stratum_partition():
    # the per-stratum class counts must add up to the total, and the
    # degrees must be consistent with the square count
    for n in range(3, 7):
        orbits = enumerate_stratum(n)
        per_sig = Counter()
        for orbit in orbits:
            per_sig[orbit.signature.degrees] += orbit.size
            assert sum(m + 1 for m in orbit.signature.degrees) <= n
        assert sum(per_sig.values()) == sum(o.size for o in orbits)
