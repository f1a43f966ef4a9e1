"""
Convolution walks on finite groups and their spectra
====================================================

Builds a few groups, puts probability measures on them, and looks at the
eigenvalues of the right convolution operator f -> f * mu.
"""

from fractions import Fraction

from groupwalk import (
    CyclicGroup,
    DihedralGroup,
    QuaternionGroup,
    make_measure,
    right_operator,
    spectrum,
    uniform,
)

# A walk on Z/8 that steps +-1 with equal probability.  The operator is an
# 8x8 symmetric circulant, so every eigenvalue is cos(2 pi k / 8).
z8 = CyclicGroup(8)
steps = uniform(z8, [1, 7])
report = spectrum(right_operator(z8, steps))
print("Z8 nearest-neighbour walk")
for rec in report.eigenvalues:
    print(f"  lambda = {rec.value:.6f}  multiplicity {rec.multiplicity}")
print("  peripheral:", [f"{lam:.3f}" for lam in report.peripheral])
print()

# Both +1 and -1 are peripheral because the support {1, 7} lives in the odd
# coset: the walk alternates between even and odd points forever.

# Adding laziness destroys the bipartite structure and -1 leaves the circle.
lazy = make_measure(z8, [(0, Fraction(1, 2)), (1, Fraction(1, 4)), (7, Fraction(1, 4))])
lazy_report = spectrum(right_operator(z8, lazy))
print("same walk with a 1/2 holding probability")
print("  peripheral:", [f"{lam:.3f}" for lam in lazy_report.peripheral])
print()

# Non-abelian examples behave the same way: the peripheral spectrum of any
# symmetric generating measure sits inside {+1, -1}.
for group, support in ((DihedralGroup(5), [5, 6, 7, 8, 9]), (QuaternionGroup(), [2, 3, 4, 5])):
    mu = uniform(group, support)
    rep = spectrum(right_operator(group, mu))
    print(f"{group.name} with uniform support {support}")
    print("  peripheral:", [f"{lam:.3f}" for lam in rep.peripheral])
