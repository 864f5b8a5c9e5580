"""
Cellular homology of spheres
============================

Two CW structures for the 2-sphere give the same Betti numbers, and the
reduced homology of an n-sphere is the index of a hyperbolic equilibrium
with n unstable directions.
"""

from conley_kit import builtin, from_cw, homology, hyperbolic_equilibrium_index, reduce

# one 0-cell and one 2-cell, attached trivially
minimal = from_cw(builtin("sphere_minimal", 2))
print("minimal:", minimal.dims, homology(minimal).betti.as_tuple(3))

# a vertex, an equator loop and two hemispheres
equator = from_cw(builtin("sphere_equator"))
print("equator:", equator.dims, homology(equator).betti.as_tuple(3))

# boundary matrices are GF(2) matrices; for the equator structure both
# hemispheres hit the loop once, so d_2 has a single row of ones
print(equator.boundary(2).to_array())

# cycle representatives come with the homology
h = homology(equator)
print("H_2 generator (sum of hemispheres):", h.reps(2).to_array().ravel())

for n in range(1, 5):
    b = reduce(homology(from_cw(builtin("sphere_minimal", n))).betti)
    print(f"S^{n}: reduced {dict(b)}  equilibrium index {dict(hyperbolic_equilibrium_index(n))}")
