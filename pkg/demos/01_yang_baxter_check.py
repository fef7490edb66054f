"""Checking Yang-Baxter operators in exact arithmetic.

A braiding on a d-dimensional space is an invertible d^2 x d^2 matrix c with

    (c x 1)(1 x c)(c x 1) = (1 x c)(c x 1)(1 x c)

on the triple tensor power.  Everything below is computed over the rationals
or a prime field with zero tolerance.
"""

from braidalg import RATIONALS, ExactMatrix, check_yang_baxter, prime_field
from braidalg.gallery import (
    corrupted_flip,
    flip_braiding,
    scalar_braiding,
    super_braiding,
)

# The plain swap v x w -> w x v is a braiding on any space.
flip = flip_braiding(RATIONALS, 2)
print("flip on a 2-dim space:")
for row in flip.c.to_strings():
    print("  ", row)
print("report:")
print(check_yang_baxter(flip).summary())

# The parity-signed swap: odd past odd picks up a minus sign.
sup = super_braiding(RATIONALS, (0, 1))
print("\nsigned swap, grading (0,1):", check_yang_baxter(sup).passed)

# In dimension 1 every nonzero scalar works, over any field.
print("scalar q=2 over F_5:", check_yang_baxter(scalar_braiding(prime_field(5), 2)).passed)

# A single stray entry breaks the equation, and the report says where.
bad = corrupted_flip(RATIONALS)
report = check_yang_baxter(bad)
print("\ncorrupted flip passes:", report.passed)
for item in report.failures():
    print("  ", item.name, "->", item.detail)

# Not every perturbation fails: rescaling the existing entries of the flip
# gives a "diagonal twist" e_i x e_j -> q_ij e_j x e_i, which is always a
# Yang-Baxter solution and generally not an involution.
from braidalg.gallery import diagonal_twist_braiding

V = diagonal_twist_braiding(RATIONALS, [[7, 2], [3, 1]])
print("diagonal twist passes:", check_yang_baxter(V).passed,
      "  squares to identity:", (V.c * V.c) == ExactMatrix.identity(RATIONALS, 4))
