import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conley_kit import (
    BettiVector,
    attractor_index,
    builtin,
    from_cw,
    homology,
    hyperbolic_equilibrium_index,
    periodic_orbit_index,
    reduce,
    wedge,
)

betti_vectors = st.dictionaries(st.integers(0, 8), st.integers(0, 4), max_size=5).map(BettiVector)


@pytest.mark.parametrize("n, expected", [(0, {0: 1}), (2, {2: 1}), (4, {4: 1})])
def test_hyperbolic_equilibrium(n, expected):
    assert hyperbolic_equilibrium_index(n) == expected


@pytest.mark.parametrize("n, expected", [(0, {0: 1, 1: 1}), (1, {1: 1, 2: 1}), (2, {2: 1, 3: 1})])
def test_periodic_orbit(n, expected):
    assert periodic_orbit_index(n) == expected


def test_attractor():
    assert attractor_index() == {0: 1}
    assert attractor_index().total_dim == 1
    assert attractor_index() == hyperbolic_equilibrium_index(0)
    assert reduce({0: 2}) == attractor_index()


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        hyperbolic_equilibrium_index(-1)
    with pytest.raises(ValueError):
        periodic_orbit_index(-1)


def test_wedge_of_spheres():
    assert wedge(hyperbolic_equilibrium_index(1), hyperbolic_equilibrium_index(3)) == {1: 1, 3: 1}
    assert wedge(hyperbolic_equilibrium_index(2), hyperbolic_equilibrium_index(2)) == {2: 2}


def test_wedge_matches_cellular_homology():
    for m, n in [(1, 2), (2, 2), (3, 1)]:
        h = homology(from_cw(builtin("wedge_of_spheres", [m, n])))
        assert reduce(h.betti) == wedge(hyperbolic_equilibrium_index(m), hyperbolic_equilibrium_index(n))


def test_zero_entries_are_dropped():
    assert BettiVector({0: 0, 3: 1}) == {3: 1}
    assert len(BettiVector({0: 0})) == 0
    assert BettiVector({2: 1})[5] == 0


def test_json_round_trip():
    b = BettiVector({0: 1, 4: 2})
    assert BettiVector.from_json(b.to_json()) == b
    assert b.to_json() == {"0": 1, "4": 2}


@settings(max_examples=100)
@given(betti_vectors, betti_vectors, betti_vectors)
def test_wedge_laws(a, b, c):
    assert wedge(a, b) == wedge(b, a)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(a, BettiVector()) == a
    assert wedge(a, b).total_dim == a.total_dim + b.total_dim


@pytest.mark.parametrize("n", range(6))
def test_periodic_orbit_has_equilibrium_betti_sum(n):
    assert periodic_orbit_index(n) == wedge(hyperbolic_equilibrium_index(n), hyperbolic_equilibrium_index(n + 1))
