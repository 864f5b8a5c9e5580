import numpy as np
import pytest

from conley_kit import (
    BettiVector,
    ChainComplex,
    CwComplex,
    Gf2Matrix,
    NotAComplex,
    builtin,
    disjoint_union,
    from_cw,
    homology,
    hyperbolic_equilibrium_index,
    reduce,
)
from conley_kit.gf2 import mul

from generators import random_complex
from oracles import brute_kernel_size, brute_rank


def betti_by_enumeration(c: ChainComplex) -> tuple[int, ...]:
    out = []
    for k in range(c.top_degree + 1):
        ker = brute_kernel_size(c.boundary(k).to_array()).bit_length() - 1
        img = brute_rank(c.boundary(k + 1).to_array())
        out.append(ker - img)
    return tuple(out)


def permuted(c: ChainComplex, rng) -> ChainComplex:
    perms = [rng.permutation(d) for d in c.dims]
    bd = {}
    for k, m in c.boundaries.items():
        arr = m.to_array()[np.ix_(perms[k - 1], perms[k])]
        bd[k] = Gf2Matrix.from_array(arr.reshape(m.shape))
    return ChainComplex(c.dims, bd)


class TestFromCw:
    def test_sphere_minimal(self):
        c = from_cw(builtin("sphere_minimal", 2))
        assert c.dims == (1, 0, 1)
        assert all(m.is_zero() for m in c.boundaries.values())

    def test_circle_double_incidence_cancels(self):
        c = from_cw(builtin("circle"))
        assert c.dims == (1, 1)
        assert c.boundary(1).is_zero()

    def test_violation_names_cells(self):
        cw = CwComplex(
            cells=(("v",), ("e",), ("f",)),
            incidence=((1, "e", "v", 1), (2, "f", "e", 1)),
        )
        with pytest.raises(NotAComplex) as info:
            from_cw(cw)
        assert info.value.upper_cell == "f"
        assert info.value.lower_cell == "v"

    def test_unknown_cell_rejected(self):
        with pytest.raises(ValueError, match="'w'"):
            CwComplex(cells=(("v",), ("e",)), incidence=((1, "e", "w", 1),))

    def test_duplicate_cell_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            CwComplex(cells=(("v",), ("v",)))


class TestHomology:
    def test_sphere_structures_agree(self):
        for name, params in (("sphere_minimal", 2), ("sphere_equator", None)):
            h = homology(from_cw(builtin(name, params)))
            assert h.betti.as_tuple(3) == (1, 0, 1)

    def test_circle(self):
        assert homology(from_cw(builtin("circle"))).betti.as_tuple(2) == (1, 1)

    def test_point_and_interval(self):
        assert homology(from_cw(builtin("point"))).betti == {0: 1}
        assert homology(from_cw(builtin("interval"))).betti == {0: 1}

    def test_wedge_of_spheres(self):
        h = homology(from_cw(builtin("wedge_of_spheres", [1, 3])))
        assert reduce(h.betti) == {1: 1, 3: 1}
        h = homology(from_cw(builtin("wedge_of_spheres", [2, 2])))
        assert reduce(h.betti) == {2: 2}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_reduced_sphere_is_equilibrium_index(self, n):
        h = homology(from_cw(builtin("sphere_minimal", n)))
        assert reduce(h.betti) == hyperbolic_equilibrium_index(n)

    def test_representatives_are_cycles_and_project_to_units(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            c = random_complex(rng)
            h = homology(c)
            for k in range(c.top_degree + 1):
                reps = h.reps(k)
                assert mul(c.boundary(k), reps).is_zero()
                for i, z in enumerate(reps.columns()):
                    assert h.project(k, z) == tuple(int(j == i) for j in range(reps.ncols))
                for b in c.boundary(k + 1).columns():
                    assert not any(h.project(k, b))

    def test_project_rejects_non_cycles(self):
        c = from_cw(builtin("interval"))
        h = homology(c)
        with pytest.raises(ValueError):
            h.project(1, [1])


class TestProperties:
    def test_random_complexes_square_to_zero(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            assert random_complex(rng).check() is None

    def test_betti_matches_enumeration(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            c = random_complex(rng, max_dim=4)
            assert homology(c).betti.as_tuple(c.top_degree + 1) == betti_by_enumeration(c)

    def test_euler_characteristic(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            c = random_complex(rng)
            b = homology(c).betti
            assert c.euler_characteristic() == sum((-1) ** k * v for k, v in b.items())

    def test_cell_order_does_not_matter(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            c = random_complex(rng)
            assert homology(permuted(c, rng)).betti == homology(c).betti

    def test_disjoint_union_adds(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            x, y = random_complex(rng), random_complex(rng)
            u = disjoint_union(x, y)
            assert u.check() is None
            assert homology(u).betti == homology(x).betti + homology(y).betti


class TestReduce:
    def test_sphere(self):
        assert reduce(BettiVector({0: 1, 2: 1})) == {2: 1}

    def test_two_points(self):
        assert reduce({0: 2}) == {0: 1}

    def test_empty_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            reduce({1: 1})


def test_unknown_builtin():
    with pytest.raises(ValueError, match="unknown"):
        builtin("torus")


def test_boundary_shape_checked():
    with pytest.raises(ValueError):
        ChainComplex((1, 2), {1: Gf2Matrix.zeros(2, 1)})
