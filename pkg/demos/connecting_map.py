"""
The connecting homomorphism of a short exact sequence
=====================================================

Glue a 2-cell onto a circle through an off-diagonal "twist" block and follow
the zig-zag: the class of the 2-cell in the quotient maps to the class of
the loop it is attached along.
"""

from conley_kit import (
    ChainComplex,
    Gf2Matrix,
    check_exactness,
    connecting_homomorphism,
    long_exact_sequence,
    split_ses,
    twist_extension,
    validate_ses,
)

a = ChainComplex((0, 1))       # one 1-cycle
c = ChainComplex((0, 0, 1))    # one 2-cycle

glued = twist_extension(a, c, {2: Gf2Matrix.identity(1)})
print("valid:", bool(validate_ses(glued)))
print("boundary of the middle complex in degree 2:")
print(glued.b.boundary(2).to_array())

# delta_2 : H_2(c) -> H_1(a)
print("delta_2 =", connecting_homomorphism(glued, 2).to_rows())

# without the twist the sequence splits and the map vanishes
flat = split_ses(a, c)
print("split delta_2 =", connecting_homomorphism(flat, 2).to_rows())

# the long exact sequence, read from the top degree down
les = long_exact_sequence(glued)
for node in les.nodes:
    print(f"  {node.label}_{node.degree}: dim {node.dim}")
print("exact:", bool(check_exactness(les)))
