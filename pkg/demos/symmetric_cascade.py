"""
A symmetric pitchfork cascade
=============================

After n pitchfork bifurcations a bistable gradient system has pairs of
equilibria of each Morse index 0..n plus a central equilibrium.  With the
reflection symmetry the connection matrix is unique and every adjacent pair
is connected.  Dropping the symmetry leaves 3^(n+1) candidates.
"""

import time

from conley_kit import SolverOptions, chafee_infante, solve

for n in range(6):
    d, constraints = chafee_infante(n)
    start = time.perf_counter()
    report = solve(d, constraints)
    elapsed = time.perf_counter() - start
    loose = solve(*chafee_infante(n, with_symmetry=False), SolverOptions(max_admissible=0))
    print(
        f"n={n}: {report.n_free:2d} free unknowns, {report.admissible_count} admissible, "
        f"{len(report.guaranteed_edges()):2d} forced edges ({elapsed * 1000:.1f} ms); "
        f"without symmetry {loose.admissible_count} admissible"
    )

# which entries does the symmetry pin down at n = 1?
for sym in (True, False):
    report = solve(*chafee_infante(1), SolverOptions(use_symmetry=sym))
    print("symmetry" if sym else "no symmetry")
    for v in report.variables:
        print(f"  {v.describe():<22} {report.status(v)}")
