"""Random instances for property tests.  All take a ``numpy.random.Generator``."""

from __future__ import annotations


from conley_kit import (
    BettiVector,
    ChainComplex,
    Gf2Matrix,
    Interval,
    IntervalConstraint,
    MorseComponent,
    MorseDecomposition,
    MorseSet,
    homology,
)
from conley_kit.gf2 import kernel_basis
from conley_kit.zigzag import twist_extension


def random_matrix(rng, nrows: int, ncols: int, density: float = 0.5) -> Gf2Matrix:
    return Gf2Matrix.from_array((rng.random((nrows, ncols)) < density).astype(int).reshape(nrows, ncols))


def random_complex(rng, max_degree: int = 3, max_dim: int = 5) -> ChainComplex:
    """Random complex: each boundary's columns are random cycles of the one below."""
    top = int(rng.integers(0, max_degree + 1))
    dims = [int(rng.integers(1, max_dim + 1))] + [int(rng.integers(0, max_dim + 1)) for _ in range(top)]
    bd = {}
    prev = None
    for k in range(1, len(dims)):
        if prev is None:
            m = random_matrix(rng, dims[0], dims[1])
        else:
            kern = kernel_basis(prev)
            coeffs = random_matrix(rng, kern.ncols, dims[k])
            m = kern @ coeffs
        bd[k] = m
        prev = m
    return ChainComplex(tuple(dims), bd)


def random_twist(rng, a: ChainComplex, c: ChainComplex) -> dict[int, Gf2Matrix]:
    """Uniform random solution of ``d_a t_k + t_{k-1} d_c = 0`` over all degrees."""
    top = max(a.top_degree, c.top_degree)
    slots = []  # (k, row, col) for t_k : c_k -> a_{k-1}
    for k in range(1, top + 1):
        for i in range(a.dim(k - 1)):
            for j in range(c.dim(k)):
                slots.append((k, i, j))
    index = {s: n for n, s in enumerate(slots)}
    equations = []
    for k in range(2, top + 1):
        da, dc = a.boundary(k - 1), c.boundary(k)
        for r in range(a.dim(k - 2)):
            for col in range(c.dim(k)):
                eq = 0
                # (d_a t_k)[r, col] = sum_i da[r, i] t_k[i, col]
                for i in range(a.dim(k - 1)):
                    if da[r, i]:
                        eq ^= 1 << index[(k, i, col)]
                # (t_{k-1} d_c)[r, col] = sum_j t_{k-1}[r, j] dc[j, col]
                for j in range(c.dim(k - 1)):
                    if dc[j, col]:
                        eq ^= 1 << index[(k - 1, r, j)]
                equations.append(eq)
    system = Gf2Matrix(len(equations), len(slots), equations)
    kern = kernel_basis(system)
    coeffs = rng.integers(0, 2, kern.ncols)
    sol = 0
    for bit, col in zip(coeffs, kern.columns()):
        if bit:
            sol ^= col
    twist = {}
    for k in range(1, top + 1):
        rows = [[(sol >> index[(k, i, j)]) & 1 for j in range(c.dim(k))] for i in range(a.dim(k - 1))]
        twist[k] = Gf2Matrix.from_rows(rows, ncols=c.dim(k))
    return twist


def random_twist_ses(rng):
    a = random_complex(rng, max_degree=3, max_dim=4)
    c = random_complex(rng, max_degree=3, max_dim=4)
    twist = random_twist(rng, a, c)
    return twist_extension(a, c, twist), twist


def twist_induced(s, twist, k):
    """Map ``[z] -> [t_k z]`` on homology, computed without any lifting."""
    ha, hc = homology(s.a), homology(s.c)
    t = twist.get(k, Gf2Matrix.zeros(s.a.dim(k - 1), s.c.dim(k)))
    cols = [ha.project_int(k - 1, t.apply(z)) for z in hc.reps(k).columns()]
    return Gf2Matrix.from_columns(cols, ha.betti[k - 1])


def random_decomposition(rng, max_unknowns: int = 12):
    """Small random Morse decomposition with optional symmetry pairs and constraints."""
    from conley_kit import enumerate_variables

    while True:
        n_sets = int(rng.integers(2, 5))
        sets, pairs = [], []
        for si in range(n_sets):
            base = BettiVector({int(k): int(rng.integers(1, 3)) if rng.random() < 0.3 else 1
                                for k in rng.choice(4, size=int(rng.integers(0, 3)), replace=False)})
            comps = [MorseComponent("a", base)]
            if rng.random() < 0.4:
                comps.append(MorseComponent("b", base))
                if rng.random() < 0.7:
                    pairs.append(((f"S{si}", "a"), (f"S{si}", "b")))
            sets.append(MorseSet(f"S{si}", si, comps))
        d = MorseDecomposition(sets, pairs)
        n_unknowns = sum(v.size for v in enumerate_variables(d))
        if 1 <= n_unknowns <= max_unknowns:
            break

    constraints = []
    full = Interval(0, n_sets - 1)
    roll = rng.random()
    if roll < 0.5:
        # homology of a random structurally valid matrix, so at least it is realisable
        target = _random_valid_homology(rng, d)
        constraints.append(IntervalConstraint(full, target))
    elif roll < 0.8:
        constraints.append(IntervalConstraint(full, BettiVector({0: 1})))
    if rng.random() < 0.5:
        lo = int(rng.integers(0, n_sets))
        hi = int(rng.integers(lo, n_sets))
        sub = MorseDecomposition(d.sets[lo:hi + 1])
        constraints.append(IntervalConstraint(Interval(lo, hi), _random_valid_homology(rng, sub)))
    return d, constraints


def _random_valid_homology(rng, d) -> BettiVector:
    from conley_kit import ConnectionMatrix, enumerate_variables
    from conley_kit.solver import interval_homology

    variables = enumerate_variables(d)
    size = sum(v.size for v in variables)
    for _ in range(20):
        delta = ConnectionMatrix.from_bits(d, variables, rng.integers(0, 2, size).tolist())
        if delta.squares_to_zero():
            break
    else:
        delta = ConnectionMatrix.from_bits(d, variables, [0] * size)
    return BettiVector(interval_homology(delta, range(delta.assembled.nrows)))
