"""End-to-end acceptance checks, one per criterion.

Each check prints a single ``criterion N: PASS|FAIL`` line.  Under pytest the
lines are also collected into the terminal summary; running this file directly
(``python tests/test_acceptance.py``) prints them and exits non-zero on failure.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conley_kit import (  # noqa: E402
    BettiVector,
    ChainComplex,
    Gf2Matrix,
    SolverOptions,
    attractor_index,
    builtin,
    chafee_infante,
    check_exactness,
    connecting_homomorphism,
    delay_scenario,
    disjoint_union,
    from_cw,
    homology,
    hyperbolic_equilibrium_index,
    image_basis,
    kernel_basis,
    long_exact_sequence,
    periodic_orbit_index,
    rank,
    reduce,
    solve,
    split_ses,
    twist_extension,
    wedge,
)
from conley_kit.gf2 import mul  # noqa: E402

from generators import (  # noqa: E402
    random_complex,
    random_decomposition,
    random_matrix,
    random_twist_ses,
    twist_induced,
)
from oracles import brute_kernel_size, brute_rank, naive_connection_matrices  # noqa: E402

RESULTS: dict[int, str] = {}


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def check(condition: bool, message: str):
    if not condition:
        raise AssertionError(message)


def criterion_1() -> str:
    def run():
        spheres = [homology(from_cw(builtin(n, p))).betti.as_tuple(3)
                   for n, p in (("sphere_minimal", 2), ("sphere_equator", None))]
        reduced = [reduce(homology(from_cw(builtin("sphere_minimal", n))).betti) for n in range(1, 7)]
        return spheres, reduced

    (spheres, reduced), elapsed = timed(run)
    check(spheres == [(1, 0, 1)] * 2, f"sphere betti {spheres}")
    for n, b in zip(range(1, 7), reduced):
        check(b == hyperbolic_equilibrium_index(n), f"reduced S^{n} gives {dict(b)}")
    check(elapsed < 0.1, f"took {elapsed:.3f}s")
    return f"S^2 betti (1,0,1) for both structures, S^1..S^6 match, {elapsed * 1000:.1f} ms"


def criterion_2() -> str:
    for n in range(6):
        check(periodic_orbit_index(n) == {n: 1, n + 1: 1}, f"periodic orbit index n={n}")
    check(attractor_index() == {0: 1}, "attractor index")
    rng = np.random.default_rng(2024)
    for _ in range(50):
        m, n = (int(x) for x in rng.integers(1, 6, size=2))
        cellular = reduce(homology(from_cw(builtin("wedge_of_spheres", [m, n]))).betti)
        formal = wedge(hyperbolic_equilibrium_index(m), hyperbolic_equilibrium_index(n))
        check(cellular == formal, f"wedge S^{m} v S^{n}")
        a = BettiVector({int(k): int(v) for k, v in zip(rng.integers(0, 6, 3), rng.integers(0, 3, 3))})
        b = BettiVector({int(k): int(v) for k, v in zip(rng.integers(0, 6, 3), rng.integers(0, 3, 3))})
        w = wedge(a, b)
        check(all(w[k] == a[k] + b[k] for k in range(6)), f"wedge of {dict(a)} and {dict(b)}")
    return "orbit and attractor formulas exact, 50 random wedges additive"


def criterion_3() -> str:
    def run():
        rng = np.random.default_rng(3)
        for _ in range(20):
            s = split_ses(random_complex(rng), random_complex(rng))
            for k in range(1, s.top_degree + 1):
                check(connecting_homomorphism(s, k).is_zero(), "split sequence has nonzero connecting map")
        for i in range(4):
            a = ChainComplex(tuple([0] * i + [1]))
            c = ChainComplex(tuple([0] * (i + 1) + [1]))
            s = twist_extension(a, c, {i + 1: Gf2Matrix.identity(1)})
            check(connecting_homomorphism(s, i + 1) == Gf2Matrix.identity(1), f"saddle model i={i}")
        nonzero = 0
        for _ in range(100):
            s, twist = random_twist_ses(rng)
            for k in range(1, s.top_degree + 1):
                delta = connecting_homomorphism(s, k)
                check(delta == twist_induced(s, twist, k), "connecting map differs from twist")
                nonzero += not delta.is_zero()
            check(bool(check_exactness(long_exact_sequence(s))), "long exact sequence not exact")
        return nonzero

    nonzero, elapsed = timed(run)
    check(elapsed < 2.0, f"took {elapsed:.2f}s")
    return f"split zero, saddle identity, 100 twists agree and exact ({nonzero} nonzero maps), {elapsed:.2f} s"


def criterion_4() -> str:
    d, cons = delay_scenario()
    report, elapsed = timed(solve, d, cons)
    check(report.admissible_count == 1, f"{report.admissible_count} admissible")
    values = {v.name: report.admissible[0].is_nonzero(v) for v in report.variables}
    check(values == {"d12": True, "d34": True}, f"entries {values}")
    check(report.guaranteed_edges() == {("M2", "M1"), ("M1", "M0")}, "edge set")
    check(elapsed < 0.1, f"took {elapsed:.3f}s")
    return f"unique matrix, d12=d34=1, edges M2->M1 and M1->M0, {elapsed * 1000:.1f} ms"


def criterion_5() -> str:
    timings = []
    for n in range(5):
        d, cons = chafee_infante(n)
        report, elapsed = timed(solve, d, cons)
        timings.append(elapsed)
        check(report.admissible_count == 1, f"n={n}: {report.admissible_count} admissible")
        m = report.admissible[0]
        for v in report.variables:
            check(all(all(row) for row in m.block(v).to_rows()), f"n={n}: {v.name} not all ones")
        expected = {("MN", f"M{n}.{s}") for s in "+-"}
        expected |= {(f"M{i}.{a}", f"M{i - 1}.{b}") for i in range(1, n + 1) for a in "+-" for b in "+-"}
        check(report.guaranteed_edges() == expected, f"n={n}: edge set")
        check(len(report.heteroclinic_edges) == 4 * n + 2, f"n={n}: extra edges")
        if n == 4:
            check(report.n_free == 9, f"n=4 has {report.n_free} free unknowns")
    check(timings[4] < 10.0, f"n=4 took {timings[4]:.2f}s")
    return f"n=0..4 unique with all-ones blocks and 4n+2 edges, n=4 in {timings[4] * 1000:.0f} ms"


def criterion_6() -> str:
    d, cons = chafee_infante(1, with_symmetry=False)
    report = solve(d, cons)
    exhaustive = naive_connection_matrices(d, cons, use_symmetry=False)
    check(report.admissible_count > 1, "unique without symmetry")
    check(report.admissible_count == len(exhaustive), f"{report.admissible_count} vs {len(exhaustive)}")
    check(len(report.undetermined) > 0, "no undetermined entries")
    return f"{report.admissible_count} admissible (2^6 enumeration agrees), {len(report.undetermined)} undetermined"


def criterion_7() -> str:
    def as_set(report):
        return {tuple(int(x) for x in m.assembled.to_array().ravel()) for m in report.admissible}

    bundled = [(delay_scenario(), True)]
    bundled += [(chafee_infante(n, with_symmetry=s), s) for n in range(4) for s in (True, False)]
    options = {s: SolverOptions(max_admissible=10**6, use_symmetry=s) for s in (True, False)}
    for (d, cons), sym in bundled:
        check(as_set(solve(d, cons, options[sym])) == naive_connection_matrices(d, cons, sym), "bundled mismatch")
    rng = np.random.default_rng(7)
    for _ in range(50):
        d, cons = random_decomposition(rng, max_unknowns=16)
        for sym in (True, False):
            check(as_set(solve(d, cons, options[sym])) == naive_connection_matrices(d, cons, sym),
                  "random decomposition mismatch")
    return f"{len(bundled)} bundled and 50 random decompositions equal naive enumeration"


def criterion_8() -> str:
    rng = np.random.default_rng(8)
    for _ in range(100):
        r, c = (int(x) for x in rng.integers(0, 8, size=2))
        m = random_matrix(rng, r, c, density=float(rng.uniform(0.1, 0.9)))
        k = kernel_basis(m)
        check(rank(m) + k.ncols == c, "rank-nullity")
        check(mul(m, k).is_zero() and rank(k) == k.ncols, "kernel basis")
        check(2 ** k.ncols == brute_kernel_size(m.to_array()), "kernel size")
        img = image_basis(m)
        check(img.ncols == rank(m) == brute_rank(m.to_array()) and rank(img) == img.ncols, "image basis")
        check(rank(Gf2Matrix.from_columns(list(m.columns()) + list(img.columns()), r)) == img.ncols,
              "image spans columns")
    for _ in range(100):
        x = random_complex(rng)
        b = homology(x).betti
        check(x.euler_characteristic() == sum((-1) ** k * v for k, v in b.items()), "Euler characteristic")
        y = random_complex(rng)
        check(homology(disjoint_union(x, y)).betti == b + homology(y).betti, "disjoint union")
    return "rank-nullity, kernel, image, Euler and disjoint-union checks on 100 instances each"


CRITERIA = {
    1: ("sphere homology", criterion_1),
    2: ("index formulas", criterion_2),
    3: ("zig-zag", criterion_3),
    4: ("delay scenario", criterion_4),
    5: ("Chafee-Infante cascade", criterion_5),
    6: ("symmetry necessity", criterion_6),
    7: ("solver oracle", criterion_7),
    8: ("linear algebra", criterion_8),
}


def evaluate(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    try:
        ok, detail = True, fn()
    except AssertionError as exc:
        ok, detail = False, str(exc)
    line = f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[number] = line
    print(line)
    return ok, detail


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = evaluate(number)
    assert ok, detail


if __name__ == "__main__":
    outcomes = [evaluate(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(outcomes) else 1)
