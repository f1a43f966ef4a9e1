"""
Splitting jointly bi-harmonic functions
=======================================

For a symmetric generating measure, any f with mu * f * mu = f splits as a
constant plus a function that both convolution sides negate:

    f = c + t1,   t1 * mu = mu * t1 = -t1.

The split is computed in exact rational arithmetic.
"""

from fractions import Fraction

from groupwalk import (
    CyclicGroup,
    GroupFunction,
    decompose,
    jointly_biharmonic_space,
    uniform,
)

z4 = CyclicGroup(4)
mu = uniform(z4, [1, 3])

print("basis of the jointly bi-harmonic space on Z4, steps {1, 3}:")
for f in jointly_biharmonic_space(z4, mu):
    print(" ", [str(v) for v in f.values])
print()

# Decompose a hand-made bi-harmonic function: 3 + 2 * parity.
f = GroupFunction(z4, [Fraction(5), Fraction(1), Fraction(5), Fraction(1)])
dec = decompose(f, mu)
print("f            =", [str(v) for v in f.values])
print("constant     =", dec.constant)
print("harmonic part =", [str(v) for v in dec.harmonic_part.values])
print("odd part      =", [str(v) for v in dec.anti_part.values])
print()

# The odd part is negated by the walk from either side; one step forward is
# enough to see it.
from groupwalk import apply, left_operator, right_operator

t1 = dec.anti_part
print("t1 * mu =", [str(v) for v in apply(right_operator(z4, mu), t1).values])
print("mu * t1 =", [str(v) for v in apply(left_operator(z4, mu), t1).values])
print()

# Functions that are not harmonic for the squared walk are rejected.
spike = GroupFunction(z4, [Fraction(1), Fraction(0), Fraction(0), Fraction(0)])
try:
    decompose(spike, mu)
except ValueError as exc:
    print("spike rejected:", exc)
