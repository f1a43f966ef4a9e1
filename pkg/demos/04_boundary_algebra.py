"""
The peripheral boundary and its diamond product
===============================================

The +1 and -1 eigenspaces of a bipartite walk span a small algebra.  The
product of two eigenfunctions is their pointwise product projected back onto
the right eigenspace; on a cycle this is a two-dimensional algebra generated
by the parity character.
"""

from groupwalk import CyclicGroup, diamond, find_anti_character, peripheral_boundary, uniform

z6 = CyclicGroup(6)
mu = uniform(z6, [1, 5])
basis = peripheral_boundary(z6, mu)

print("boundary dimension:", basis.dimension)
print("eigenvalue tags:   ", basis.tags)
for i, fn in enumerate(basis.functions):
    print(f"  f{i} =", [str(v) for v in fn.values])
print()

print("multiplication table (coefficients over the basis):")
for i in range(basis.dimension):
    for j in range(basis.dimension):
        print(f"  f{i} <> f{j} ->", [str(c) for c in basis.table[i][j]])
print()

# The character is its own inverse under the diamond product.
chi = find_anti_character(z6, mu).as_function()
square = diamond(mu, chi, -1, chi, -1)
print("chi <> chi =", [str(v) for v in square.values])
print()

# On Z/2m with nearest-neighbour steps the boundary is always 2-dimensional,
# a finite stand-in for the two-point peripheral boundary of the line.
for m in (2, 3, 4, 5, 6):
    g = CyclicGroup(2 * m)
    dim = peripheral_boundary(g, uniform(g, [1, 2 * m - 1])).dimension
    print(f"Z{2 * m}: boundary dimension {dim}")
