"""Unit/counit witnesses for the two free-construction adjunctions.

The free braided algebra on a braided object, and the braided tensor
bialgebra against the primitives functor: their triangle identities and the
coalgebra-map property of the counit extension are all plain matrix
identities here, checked degree by degree.
"""

from braidalg import (
    RATIONALS,
    build_adjunction_witness,
    check_triangles_T_Omega,
    check_triangles_Tbar_P,
    check_zeta_coalgebra,
    iterated_product,
    prime_field,
)
from braidalg.gallery import exterior_line, flip_braiding, group_algebra_z2, scalar_braiding

V = flip_braiding(RATIONALS, 2)
B = exterior_line(RATIONALS)

# The adjunction counit on an algebra acts in degree n as the n-fold
# product.  On the exterior line, degree 2 already hits x*x = 0.
two = iterated_product(B.algebra, 2)
print("exterior line, 2-fold product of x with x:",
      [two[i, 3] for i in range(2)], "(the zero column)")

print("free/forgetful triangles at truncation 4:", check_triangles_T_Omega(V, 4))

# The counit of the tensor-bialgebra/primitives adjunction extends the
# primitive inclusion as an algebra map; it must also be a coalgebra map.
rep = check_zeta_coalgebra(B, 4)
print("counit extension is a coalgebra map (exterior line):", rep.passed)
print("  same for the group algebra, vacuously (no primitives):",
      check_zeta_coalgebra(group_algebra_z2(RATIONALS), 4).passed)

print("tensor/primitives triangles:", check_triangles_Tbar_P(V, B, 4))
print("  over F_5 with q = 2:",
      check_triangles_Tbar_P(scalar_braiding(prime_field(5), 2), exterior_line(prime_field(5)), 4))

# All the witness data in one bundle.
w = build_adjunction_witness(V, B, 3)
print("\nwitness: unit =", w.eta.to_strings(),
      " unit into primitives =", w.eta_bar.to_strings())
print("counit extension blocks, degrees 0..3:",
      {n: m.to_strings() for n, m in sorted(w.zeta_blocks.items())})
