"""Primitive elements of braided bialgebras.

An element is primitive when its coproduct is ``x⊗1 + 1⊗x``.  The primitive
space is realized as an explicit inclusion matrix (the canonical kernel basis
of ``Δ - (1⊗u) - (u⊗1)``) rather than a quotient, because every downstream
formula composes with the inclusion.  The ambient braiding restricts to a
braiding of the primitive space; the restriction is solved exactly against
the injective matrix ``xi ⊗ xi``, so any residual is an error, never a
tolerance case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import (
    BialgebraData,
    BraidedObject,
    check_braided_bialgebra,
    check_yang_baxter,
)
from .errors import (
    BadDegree,
    InternalInconsistency,
    LinearSolveError,
    NoFactorization,
    NotAMorphism,
    NotClosedUnderBraiding,
    NotInvertible,
    SpecViolation,
)
from .fields import FieldSpec
from .matrix import ExactMatrix, stack_rows
from .tensoralg import TruncatedTensorBialgebra


@dataclass(frozen=True)
class PrimitiveSpace:
    """Primitive subspace with its inclusion and the restricted braiding."""

    field: FieldSpec
    ambient_dim: int
    inclusion: ExactMatrix  # ambient_dim x dim, columns = canonical basis
    braiding: ExactMatrix   # dim^2 x dim^2

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    def braided_object(self) -> BraidedObject:
        return BraidedObject.from_c(self.field, self.dim, self.braiding)


def equalizer_matrix(B: BialgebraData) -> ExactMatrix:
    """``Δ - (x -> x⊗1) - (x -> 1⊗x)`` whose kernel is the primitive space."""
    ident = ExactMatrix.identity(B.field, B.dim)
    return B.delta - ident.kron(B.u) - B.u.kron(ident)


def restrict_braiding(c: ExactMatrix, xi: ExactMatrix) -> ExactMatrix:
    """Solve ``(xi⊗xi) c_P = c (xi⊗xi)`` for the unique ``c_P``.

    ``xi ⊗ xi`` is injective, so the solution is unique when it exists; when
    it does not, the braiding does not preserve the subspace.
    """
    xx = xi.kron(xi)
    try:
        return xx.solve(c * xx)
    except LinearSolveError as exc:
        raise NotClosedUnderBraiding(str(exc)) from exc


def primitives(B: BialgebraData, check: bool = True) -> PrimitiveSpace:
    """Primitive space of a braided bialgebra, with induced braiding.

    The input is verified against the full axiom suite first (set
    ``check=False`` to skip when the caller just did it).
    """
    if check:
        gate = check_braided_bialgebra(B)
        if not gate.passed:
            raise SpecViolation(f"not a braided bialgebra: {gate.failures()[0].name}")
    xi = equalizer_matrix(B).nullspace()
    c_P = restrict_braiding(B.c, xi)
    space = PrimitiveSpace(B.field, B.dim, xi, c_P)
    _validate_restricted_braiding(space)
    return space


def _validate_restricted_braiding(space: PrimitiveSpace) -> None:
    if space.dim == 0:
        return
    try:
        rep = check_yang_baxter(space.braided_object())
    except NotInvertible as exc:
        raise InternalInconsistency(f"restricted braiding is singular: {exc}") from exc
    if not rep.passed:
        raise InternalInconsistency(
            f"restricted braiding fails {rep.failures()[0].name}; "
            "the ambient structure cannot have satisfied its axioms"
        )


def induced_braiding(space: PrimitiveSpace) -> ExactMatrix:
    """The braiding carried by the primitive space (already validated)."""
    return space.braiding


def check_bialgebra_morphism(f: ExactMatrix, B: BialgebraData, B2: BialgebraData) -> None:
    """Raise ``NotAMorphism`` naming the first failed condition."""
    if f.rows != B2.dim or f.cols != B.dim:
        raise NotAMorphism(f"shape {f.rows}x{f.cols}, expected {B2.dim}x{B.dim}")
    ff = f.kron(f)
    if f * B.m != B2.m * ff:
        raise NotAMorphism("not multiplicative")
    if f * B.u != B2.u:
        raise NotAMorphism("not unital")
    if B2.delta * f != ff * B.delta:
        raise NotAMorphism("not comultiplicative")
    if B2.eps * f != B.eps:
        raise NotAMorphism("not counital")
    if B2.c * ff != ff * B.c:
        raise NotAMorphism("not braided")


def induced_map(f: ExactMatrix, B: BialgebraData, B2: BialgebraData,
                source: PrimitiveSpace | None = None,
                target: PrimitiveSpace | None = None) -> ExactMatrix:
    """The restriction of a bialgebra morphism to primitive spaces.

    Solves ``xi' P(f) = f xi``; the solution exists because morphisms send
    primitives to primitives, and is unique because ``xi'`` is injective.
    """
    check_bialgebra_morphism(f, B, B2)
    if source is None:
        source = primitives(B, check=False)
    if target is None:
        target = primitives(B2, check=False)
    try:
        pf = target.inclusion.solve(f * source.inclusion)
    except LinearSolveError as exc:
        raise NoFactorization(str(exc)) from exc
    return pf


# -- graded primitives of the truncated tensor bialgebra ---------------------


def primitives_of_tensor(T: TruncatedTensorBialgebra, n: int) -> ExactMatrix:
    """Canonical basis of the degree-``n`` primitives, as columns in ``V^{⊗n}``.

    The extreme coproduct blocks are identities and cancel against the two
    unit summands, so degree-``n`` primitivity is exactly the vanishing of
    the interior blocks; the kernel of their stack is returned.
    """
    if not (1 <= n <= T.N):
        raise BadDegree(f"degree {n} outside 1..{T.N}")
    interior = [T.coproduct_block(k, n) for k in range(1, n)]
    stacked = stack_rows(interior, T.field, T.component_dim(n))
    return stacked.nullspace()


def tensor_primitive_dims(T: TruncatedTensorBialgebra) -> list[int]:
    """Dimensions of the primitive components in degrees ``1..N``."""
    return [primitives_of_tensor(T, n).cols for n in range(1, T.N + 1)]


def tensor_primitive_braiding(T: TruncatedTensorBialgebra, m: int, n: int) -> ExactMatrix:
    """Restriction of the degree-``(m, n)`` braiding block to primitives."""
    xm = primitives_of_tensor(T, m)
    xn = primitives_of_tensor(T, n)
    lhs = xn.kron(xm)
    rhs = T.braiding_block(m, n) * xm.kron(xn)
    try:
        return lhs.solve(rhs)
    except LinearSolveError as exc:
        raise NotClosedUnderBraiding(str(exc)) from exc
