import random

import pytest

from braidalg import (
    RATIONALS,
    BaseBraiding,
    BialgebraData,
    ExactMatrix,
    J_braiding,
    NotInvertible,
    ShapeError,
    basis_change,
    build_truncated,
    check_J_compatibility,
    check_braided_bialgebra,
    check_primfunct_square,
    check_twist_coherence,
    compose_functors,
    direct_power_braiding,
    prime_field,
    scalar_twist,
    tensor_primitive_dims,
    transport_bialgebra,
    transport_braided_object,
)
from braidalg.gallery import (
    all_gradings,
    exterior_line,
    flip_braiding,
    group_algebra_z2,
    scalar_braiding,
    super_braiding,
)
from braidalg.transport import FLIP, SUPER

from oracles import block_transposition

F5 = prime_field(5)


def random_invertible(rng, field, n):
    while True:
        g = ExactMatrix(field, [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)])
        try:
            g.inverse()
            return g
        except NotInvertible:
            continue


class TestBraidedObjectTransport:
    def test_identity_change(self):
        V = super_braiding(RATIONALS, (0, 1))
        F = basis_change(ExactMatrix.identity(RATIONALS, 2))
        assert transport_braided_object(F, V).c == V.c

    def test_scalar_twist_is_central(self):
        V = super_braiding(RATIONALS, (0, 1))
        assert transport_braided_object(scalar_twist(RATIONALS, 7), V).c == V.c

    def test_one_dimensional_conjugation(self):
        V = scalar_braiding(RATIONALS, 5)
        F = basis_change(ExactMatrix(RATIONALS, [[3]]))
        assert transport_braided_object(F, V).c == V.c

    def test_transport_preserves_yang_baxter(self):
        from braidalg import check_yang_baxter

        rng = random.Random(7)
        V = super_braiding(F5, (0, 1))
        for _ in range(5):
            F = basis_change(random_invertible(rng, F5, 2))
            assert check_yang_baxter(transport_braided_object(F, V)).passed

    def test_invalid_functor(self):
        with pytest.raises(NotInvertible):
            basis_change(ExactMatrix(RATIONALS, [[1, 2], [2, 4]]))
        with pytest.raises(NotInvertible):
            scalar_twist(RATIONALS, 0)


class TestBialgebraTransport:
    def test_identity(self):
        B = exterior_line(RATIONALS)
        F = basis_change(ExactMatrix.identity(RATIONALS, 2))
        assert transport_bialgebra(F, B) == B

    def test_unit_mixing_change(self):
        B = exterior_line(RATIONALS)
        F = basis_change(ExactMatrix(RATIONALS, [[1, 0], [1, 1]]))
        out = transport_bialgebra(F, B)
        assert out != B
        assert check_braided_bialgebra(out).passed

    def test_scalar_twist_scales_structure(self):
        B = exterior_line(RATIONALS)
        out = transport_bialgebra(scalar_twist(RATIONALS, 2), B)
        assert out.m == B.m.scale(2)
        assert out.u == B.u.scale("1/2")
        assert out.delta == B.delta.scale("1/2")
        assert out.eps == B.eps.scale(2)
        assert out.c == B.c
        assert check_braided_bialgebra(out).passed

    def test_twist_coherence(self):
        assert check_twist_coherence(scalar_twist(RATIONALS, 5)).passed
        assert check_twist_coherence(scalar_twist(F5, 3)).passed

    def test_axiom_verdict_preserved(self):
        # transporting a non-bialgebra fails the same way the source does
        B = exterior_line(RATIONALS)
        wrong = BialgebraData(B.field, B.dim, B.m, B.u, B.delta, B.eps,
                              flip_braiding(RATIONALS, 2).c)
        F = basis_change(ExactMatrix(RATIONALS, [[1, 1], [0, 1]]))
        moved = transport_bialgebra(F, wrong, check=False)
        src = {i.name for i in check_braided_bialgebra(wrong).failures()}
        dst = {i.name for i in check_braided_bialgebra(moved).failures()}
        assert src == dst == {"coproduct_of_product"}

    def test_functoriality(self):
        B = exterior_line(F5)
        rng = random.Random(3)
        g1, g2 = random_invertible(rng, F5, 2), random_invertible(rng, F5, 2)
        F1, F2 = basis_change(g1), basis_change(g2)
        lhs = transport_bialgebra(F2, transport_bialgebra(F1, B))
        rhs = transport_bialgebra(compose_functors(F2, F1), B)
        assert lhs == rhs
        t1 = scalar_twist(F5, 2)
        t2 = scalar_twist(F5, 3)
        lhs = transport_bialgebra(t2, transport_bialgebra(t1, B))
        rhs = transport_bialgebra(compose_functors(t2, t1), B)
        assert lhs == rhs

    def test_mixed_composition_rejected(self):
        with pytest.raises(ShapeError):
            compose_functors(scalar_twist(RATIONALS, 2),
                             basis_change(ExactMatrix.identity(RATIONALS, 2)))


class TestPrimitiveSquare:
    def test_identity(self):
        B = exterior_line(RATIONALS)
        assert check_primfunct_square(basis_change(ExactMatrix.identity(RATIONALS, 2)), B)

    def test_seeded_random_changes(self):
        rng = random.Random(11)
        B = exterior_line(F5)
        for _ in range(10):
            F = basis_change(random_invertible(rng, F5, 2))
            assert check_primfunct_square(F, B)

    def test_no_primitives_case(self):
        rng = random.Random(5)
        Z = group_algebra_z2(F5)
        for _ in range(3):
            assert check_primfunct_square(basis_change(random_invertible(rng, F5, 2)), Z)

    def test_scalar_twist(self):
        assert check_primfunct_square(scalar_twist(RATIONALS, 3), exterior_line(RATIONALS))

    def test_graded_dims_are_transport_invariant(self):
        rng = random.Random(23)
        V = super_braiding(F5, (0, 1))
        base_dims = tensor_primitive_dims(build_truncated(V, 4))
        for _ in range(3):
            F = basis_change(random_invertible(rng, F5, 2))
            moved = transport_braided_object(F, V)
            assert tensor_primitive_dims(build_truncated(moved, 4)) == base_dims


class TestBaseSymmetries:
    def test_flip_matrix_positions(self):
        V = J_braiding(BaseBraiding(FLIP), 2, RATIONALS)
        ones = {(i, j) for i in range(4) for j in range(4) if V.c[i, j] != 0}
        assert ones == {(0, 0), (2, 1), (1, 2), (3, 3)}
        assert all(V.c[i, j] == 1 for i, j in ones)

    def test_super_line(self):
        V = J_braiding(BaseBraiding(SUPER, (1,)), 1, RATIONALS)
        assert V.c == ExactMatrix(RATIONALS, [[-1]])

    def test_super_d2_sign_pattern(self):
        V = J_braiding(BaseBraiding(SUPER, (0, 1)), 2, RATIONALS)
        flip = J_braiding(BaseBraiding(FLIP), 2, RATIONALS)
        diff = V.c - flip.c
        # only the odd⊗odd entry flips sign: e2⊗e2 at flat position (3,3)
        assert diff == ExactMatrix(RATIONALS, [[0, 0, 0, 0], [0, 0, 0, 0],
                                               [0, 0, 0, 0], [0, 0, 0, -2]])

    def test_grading_length_gate(self):
        with pytest.raises(ShapeError):
            J_braiding(BaseBraiding(SUPER, (0, 1)), 3, RATIONALS)

    def test_direct_power_matches_oracle(self):
        for m in range(3):
            for n in range(3):
                got = direct_power_braiding(BaseBraiding(FLIP), 2, RATIONALS, m, n)
                assert got == ExactMatrix(RATIONALS, block_transposition(2, m, n)) \
                    if m + n else got == ExactMatrix.identity(RATIONALS, 1)
                got = direct_power_braiding(BaseBraiding(SUPER, (0, 1)), 2, RATIONALS, m, n)
                expected = block_transposition(2, m, n, parities=(0, 1))
                assert got == ExactMatrix(RATIONALS, expected) if m + n \
                    else got == ExactMatrix.identity(RATIONALS, 1)


class TestJCompatibility:
    def test_flip_and_super_dims_up_to_two(self):
        for d in (1, 2):
            assert check_J_compatibility(BaseBraiding(FLIP), d, 4, RATIONALS).passed
            for grading in all_gradings(d):
                assert check_J_compatibility(BaseBraiding(SUPER, grading), d, 4, RATIONALS).passed

    def test_dimension_three_full_depth(self):
        assert check_J_compatibility(BaseBraiding(FLIP), 3, 4, RATIONALS).passed
        for grading in all_gradings(3):
            assert check_J_compatibility(BaseBraiding(SUPER, grading), 3, 4, RATIONALS).passed, grading

    def test_over_prime_field(self):
        assert check_J_compatibility(BaseBraiding(SUPER, (0, 1)), 2, 3, F5).passed

    def test_non_symmetric_braiding_rejected_by_gate(self):
        rep = check_J_compatibility(BaseBraiding(FLIP), 1, 3, RATIONALS,
                                    V=scalar_braiding(RATIONALS, 2))
        assert not rep.passed
        assert rep.items[0].name == "symmetry"
        assert len(rep.items) == 1  # nothing else ran
