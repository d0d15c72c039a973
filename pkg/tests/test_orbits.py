import pytest

from conftest import exhaustive_canonical
from origamis.errors import DomainError
from origamis.origami import (
    apply_generator,
    canonical_form,
    make_origami,
    parse_origami,
    stratum_of,
)
from origamis.orbits import (
    cusp_decomposition,
    enumerate_stratum,
    sl2z_orbit,
)
from origamis.strata import AbelianSignature


def closure_oracle(o, limit=10000):
    """Independent orbit oracle: explicit closure over labeled pairs,
    then counting distinct brute-force canonical classes."""
    seen = {(o.h, o.v)}
    frontier = [o]
    while frontier:
        cur = frontier.pop()
        for gen in ("T", "R"):
            nxt = apply_generator(cur, gen)
            key = (nxt.h, nxt.v)
            if key not in seen:
                assert len(seen) < limit
                seen.add(key)
                frontier.append(nxt)
    return {exhaustive_canonical(make_origami(h, v)) for h, v in seen}


def test_orbit_L(l_origami):
    orbit = sl2z_orbit(l_origami)
    assert orbit.size == 3
    # oracle: labeled closure collapsed by brute-force canonical forms
    assert len(closure_oracle(l_origami)) == 3
    # the three members named by the spec
    expected = {
        canonical_form(l_origami),
        canonical_form(parse_origami("n=3; h=(1,2); v=(1,2,3)")),
        canonical_form(parse_origami("n=3; h=(1,2,3); v=(1,2)")),
    }
    assert set(orbit.members) == expected
    assert orbit.signature.degrees == (2,)


def test_orbit_unit_torus():
    orbit = sl2z_orbit(make_origami((0,), (0,)))
    assert orbit.size == 1


def test_orbit_wollmilchsau(wollmilchsau):
    orbit = sl2z_orbit(wollmilchsau)
    assert orbit.size == 1
    assert orbit.signature.degrees == (1, 1, 1, 1)


def test_orbit_closure_property(rng, l_origami):
    for start in (l_origami, make_origami((1, 2, 3, 0), (2, 1, 0, 3))):
        orbit = sl2z_orbit(start)
        members = set(orbit.members)
        for m in orbit.members:
            for gen in ("T", "R"):
                assert canonical_form(apply_generator(m, gen)) in members
            assert m.n_squares == orbit.n_squares
            assert stratum_of(m) == orbit.signature


def test_orbit_cap():
    with pytest.raises(DomainError, match="orbit too large"):
        sl2z_orbit(make_origami((1, 2, 3, 0), (2, 1, 0, 3)), max_orbit=2)


def test_orbit_cap_env(monkeypatch, l_origami):
    monkeypatch.setenv("ORIGAMI_MAX_ORBIT", "2")
    with pytest.raises(DomainError, match="orbit too large"):
        sl2z_orbit(l_origami)
    monkeypatch.setenv("ORIGAMI_MAX_ORBIT", "10")
    assert sl2z_orbit(l_origami).size == 3


# -- cusps ------------------------------------------------------------------


def test_cusps_L(l_origami):
    cusps = cusp_decomposition(sl2z_orbit(l_origami))
    assert cusps.widths == (2, 1)
    assert len(cusps.representatives) == 2


def test_cusps_torus():
    cusps = cusp_decomposition(sl2z_orbit(make_origami((0,), (0,))))
    assert cusps.widths == (1,)


def test_cusps_wollmilchsau(wollmilchsau):
    cusps = cusp_decomposition(sl2z_orbit(wollmilchsau))
    assert cusps.widths == (1,)


def test_cusp_widths_sum(rng):
    from conftest import random_origami

    for _ in range(10):
        orbit = sl2z_orbit(random_origami(rng, n_max=6))
        cusps = cusp_decomposition(orbit)
        assert sum(cusps.widths) == orbit.size


# -- enumeration -------------------------------------------------------------


def test_enumerate_h2_n3():
    orbits = enumerate_stratum(3, AbelianSignature((2,)))
    assert len(orbits) == 1
    assert orbits[0].size == 3


def test_enumerate_torus_n1():
    orbits = enumerate_stratum(1, AbelianSignature(()))
    assert len(orbits) == 1
    assert orbits[0].size == 1


def test_enumerate_h11_n4_contains_example():
    orbits = enumerate_stratum(4, AbelianSignature((1, 1)))
    assert len(orbits) >= 1
    target = canonical_form(make_origami((1, 2, 3, 0), (2, 1, 0, 3)))
    assert any(target in orbit.members for orbit in orbits)


def test_enumerate_budget():
    with pytest.raises(DomainError, match="budget"):
        enumerate_stratum(11)
    with pytest.raises(DomainError, match="budget"):
        enumerate_stratum(7, budget=6)


def test_enumerate_rejects_marked_points():
    with pytest.raises(DomainError, match="marked points"):
        enumerate_stratum(3, AbelianSignature((0,)))


def test_enumerate_empty_when_stratum_needs_more_squares():
    assert enumerate_stratum(3, AbelianSignature((1, 1))) == ()
    assert enumerate_stratum(4, AbelianSignature((4,))) == ()


def test_enumerate_deterministic():
    a = enumerate_stratum(5)
    b = enumerate_stratum(5)
    assert a == b


def test_enumerate_no_filter_covers_filtered():
    full = enumerate_stratum(4)
    filtered = enumerate_stratum(4, AbelianSignature((1, 1)))
    reps_full = {o.members[0] for o in full if o.signature.degrees == (1, 1)}
    reps_filtered = {o.members[0] for o in filtered}
    assert reps_full == reps_filtered


def test_enumerate_exhaustive_oracle_n3():
    # brute force over all transitive pairs in S_3 x S_3: the canonical
    # classes must match the enumeration exactly
    import itertools

    from origamis import kernels
    from origamis.permutations import perm_to_array

    classes = set()
    for h in itertools.permutations(range(3)):
        for v in itertools.permutations(range(3)):
            if kernels.is_transitive(perm_to_array(h), perm_to_array(v)):
                classes.add(exhaustive_canonical(make_origami(h, v)))
    enumerated = set()
    for orbit in enumerate_stratum(3):
        for m in orbit.members:
            enumerated.add(exhaustive_canonical(m))
    assert classes == enumerated
