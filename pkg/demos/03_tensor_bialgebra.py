"""The truncated braided tensor bialgebra.

On the tensor algebra of a braided object, declaring every degree-1 element
x primitive (x -> x o 1 + 1 o x) and extending as an algebra map through the
braided product determines a graded coproduct.  Its blocks are quantum
shuffle coefficients: Gaussian binomials in dimension 1, signed unshuffle
sums for the symmetric braidings.
"""

from braidalg import RATIONALS, build_truncated, check_truncated_axioms, prime_field
from braidalg.gallery import flip_braiding, scalar_braiding, super_braiding

# Dimension 1, braiding multiplication by q: the (k, n-k) coproduct block of
# x^n is the Gaussian binomial [n choose k]_q.
T = build_truncated(scalar_braiding(RATIONALS, 2), 5)
print("Gaussian binomial triangle at q = 2:")
for n in range(6):
    print("  ", [T.coproduct_block(k, n)[0, 0] for k in range(n + 1)])

# Over F_5 the same triangle reduces mod 5; whole rows vanishing in the
# interior is what later creates new primitive elements.
T5 = build_truncated(scalar_braiding(prime_field(5), 2), 4)
print("\nsame triangle mod 5:")
for n in range(5):
    print("  ", [T5.coproduct_block(k, n)[0, 0] for k in range(n + 1)])

# For the flip the coproduct is the classical unshuffle sum: on e1 x e2 the
# (1,1) block returns e1 x e2 + e2 x e1 (all coefficients counts).
Tf = build_truncated(flip_braiding(RATIONALS, 2), 4)
col = 1  # flat index of e1 x e2
block = Tf.coproduct_block(1, 2)
print("\nflip coproduct of e1 x e2, middle block:",
      {i: block[i, col] for i in range(4) if block[i, col] != 0})

# The whole braided-bialgebra axiom suite holds blockwise at the truncation.
rep = check_truncated_axioms(Tf)
print("\nflip, truncation 4: all", len(rep.items), "axiom blocks pass:", rep.passed)

rep = check_truncated_axioms(build_truncated(super_braiding(RATIONALS, (0, 1)), 3))
print("signed swap, truncation 3:", rep.passed)
