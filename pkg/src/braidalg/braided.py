"""Braided objects, algebras, coalgebras and bialgebras as structure matrices.

Everything lives in strict finite-dimensional vector spaces with a chosen
basis, so the unit object is the base field itself and all associativity and
unit constraints are identity matrices.  Each axiom becomes a plain matrix
identity and every checker reports, per axiom, either a pass or the first
violating entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import NotInvertible, ShapeError, SpecViolation
from .fields import FieldSpec
from .matrix import ExactMatrix, kron_all


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AxiomReport:
    """Itemized pass/fail list for a family of axiom identities."""

    items: list[CheckItem] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed]

    def add(self, item: CheckItem) -> None:
        self.items.append(item)

    def extend(self, other: "AxiomReport", prefix: str = "") -> None:
        for item in other.items:
            self.items.append(CheckItem(prefix + item.name, item.passed, item.detail))

    def summary(self) -> str:
        lines = []
        for item in self.items:
            status = "pass" if item.passed else "FAIL"
            tail = f"  ({item.detail})" if item.detail and not item.passed else ""
            lines.append(f"{status:4}  {item.name}{tail}")
        return "\n".join(lines)


def compare(name: str, lhs: ExactMatrix, rhs: ExactMatrix) -> CheckItem:
    """Equality check producing, on failure, the first differing entry."""
    if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols):
        return CheckItem(name, False, f"shape {lhs.rows}x{lhs.cols} vs {rhs.rows}x{rhs.cols}")
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs.data[i][j] != rhs.data[i][j]:
                a = lhs.field.format(lhs.data[i][j])
                b = rhs.field.format(rhs.data[i][j])
                return CheckItem(name, False, f"first difference at ({i},{j}): {a} != {b}")
    return CheckItem(name, True)


# -- domain types -----------------------------------------------------------


@dataclass(frozen=True)
class BraidedObject:
    """A space of dimension ``dim`` with an invertible Yang-Baxter operator."""

    field: FieldSpec
    dim: int
    c: ExactMatrix
    c_inv: ExactMatrix

    @classmethod
    def from_c(cls, field: FieldSpec, dim: int, c: ExactMatrix) -> "BraidedObject":
        if c.rows != dim * dim or c.cols != dim * dim:
            raise ShapeError(f"braiding must be {dim * dim}x{dim * dim}, got {c.rows}x{c.cols}")
        return cls(field, dim, c, c.inverse())

    def inverse_object(self) -> "BraidedObject":
        """The same space braided by the inverse operator."""
        return BraidedObject(self.field, self.dim, self.c_inv, self.c)


@dataclass(frozen=True)
class AlgebraData:
    """An associative unital algebra: product ``m: A⊗A -> A`` and unit ``u: k -> A``."""

    field: FieldSpec
    dim: int
    m: ExactMatrix
    u: ExactMatrix


@dataclass(frozen=True)
class BraidedAlgebra:
    algebra: AlgebraData
    c: ExactMatrix


@dataclass(frozen=True)
class BialgebraData:
    """A braided bialgebra: algebra, coalgebra and braiding on one space."""

    field: FieldSpec
    dim: int
    m: ExactMatrix
    u: ExactMatrix
    delta: ExactMatrix
    eps: ExactMatrix
    c: ExactMatrix

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.field, self.dim, self.m, self.u)

    def braided_object(self) -> BraidedObject:
        return BraidedObject.from_c(self.field, self.dim, self.c)


@dataclass(frozen=True)
class ProductAlgebraSpec:
    """Two algebras plus the four exchange operators ``c[i,j]: A_i⊗A_j -> A_j⊗A_i``."""

    a1: AlgebraData
    a2: AlgebraData
    c_matrices: dict[tuple[int, int], ExactMatrix]

    def algebra(self, i: int) -> AlgebraData:
        return self.a1 if i == 1 else self.a2

    def c(self, i: int, j: int) -> ExactMatrix:
        return self.c_matrices[(i, j)]


# -- checkers ---------------------------------------------------------------


def _shape_gate(c: ExactMatrix, dim: int, what: str) -> None:
    if c.rows != dim * dim or c.cols != dim * dim:
        raise ShapeError(f"{what} must be {dim * dim}x{dim * dim}, got {c.rows}x{c.cols}")


def yang_baxter_holds(c: ExactMatrix, dim: int) -> CheckItem:
    ident = ExactMatrix.identity(c.field, dim)
    cV = c.kron(ident)
    Vc = ident.kron(c)
    return compare("yang_baxter", cV * Vc * cV, Vc * cV * Vc)


def check_yang_baxter(V: BraidedObject) -> AxiomReport:
    """Invertibility plus the quantum Yang-Baxter equation for ``V.c``."""
    _shape_gate(V.c, V.dim, "braiding")
    report = AxiomReport()
    ident2 = ExactMatrix.identity(V.field, V.dim * V.dim)
    report.add(compare("invertible_right", V.c * V.c_inv, ident2))
    report.add(compare("invertible_left", V.c_inv * V.c, ident2))
    report.add(yang_baxter_holds(V.c, V.dim))
    return report


def check_braided_morphism(f: ExactMatrix, V: BraidedObject, W: BraidedObject) -> bool:
    """True iff ``c_W (f⊗f) = (f⊗f) c_V``."""
    if f.rows != W.dim or f.cols != V.dim:
        raise ShapeError(f"morphism must be {W.dim}x{V.dim}, got {f.rows}x{f.cols}")
    ff = f.kron(f)
    return W.c * ff == ff * V.c


def check_algebra(A: AlgebraData) -> AxiomReport:
    """Associativity and the two unit laws."""
    report = AxiomReport()
    ident = ExactMatrix.identity(A.field, A.dim)
    report.add(compare("associative", A.m * A.m.kron(ident), A.m * ident.kron(A.m)))
    report.add(compare("unit_left", A.m * A.u.kron(ident), ident))
    report.add(compare("unit_right", A.m * ident.kron(A.u), ident))
    return report


def check_coalgebra(field: FieldSpec, dim: int, delta: ExactMatrix, eps: ExactMatrix) -> AxiomReport:
    report = AxiomReport()
    ident = ExactMatrix.identity(field, dim)
    report.add(compare("coassociative", delta.kron(ident) * delta, ident.kron(delta) * delta))
    report.add(compare("counit_left", eps.kron(ident) * delta, ident))
    report.add(compare("counit_right", ident.kron(eps) * delta, ident))
    return report


def check_braided_algebra(A: AlgebraData, c: ExactMatrix) -> AxiomReport:
    """Compatibility of product and unit with the braiding (with strict
    unit constraints, so the unit laws lose their ``l, r`` factors)."""
    _shape_gate(c, A.dim, "braiding")
    report = AxiomReport()
    ident = ExactMatrix.identity(A.field, A.dim)
    report.add(compare(
        "product_braids_left",  # c(m⊗A) = (A⊗m)(c⊗A)(A⊗c)
        c * A.m.kron(ident),
        ident.kron(A.m) * c.kron(ident) * ident.kron(c),
    ))
    report.add(compare(
        "product_braids_right",  # c(A⊗m) = (m⊗A)(A⊗c)(c⊗A)
        c * ident.kron(A.m),
        A.m.kron(ident) * ident.kron(c) * c.kron(ident),
    ))
    report.add(compare("unit_braids_left", c * A.u.kron(ident), ident.kron(A.u)))
    report.add(compare("unit_braids_right", c * ident.kron(A.u), A.u.kron(ident)))
    return report


def check_braided_coalgebra(field: FieldSpec, dim: int, delta: ExactMatrix,
                            eps: ExactMatrix, c: ExactMatrix) -> AxiomReport:
    """Compatibility of coproduct and counit with the braiding."""
    _shape_gate(c, dim, "braiding")
    report = AxiomReport()
    ident = ExactMatrix.identity(field, dim)
    report.add(compare(
        "coproduct_braids_left",  # (Δ⊗C)c = (C⊗c)(c⊗C)(C⊗Δ)
        delta.kron(ident) * c,
        ident.kron(c) * c.kron(ident) * ident.kron(delta),
    ))
    report.add(compare(
        "coproduct_braids_right",  # (C⊗Δ)c = (c⊗C)(C⊗c)(Δ⊗C)
        ident.kron(delta) * c,
        c.kron(ident) * ident.kron(c) * delta.kron(ident),
    ))
    report.add(compare("counit_braids_left", eps.kron(ident) * c, ident.kron(eps)))
    report.add(compare("counit_braids_right", ident.kron(eps) * c, eps.kron(ident)))
    return report


def check_braided_bialgebra(B: BialgebraData) -> AxiomReport:
    """The full axiom suite: algebra, coalgebra, Yang-Baxter, the four
    compatibility pairs, and the product/coproduct exchange law."""
    report = AxiomReport()
    try:
        V = B.braided_object()
    except NotInvertible:
        report.add(CheckItem("invertible_right", False, "braiding is singular"))
        return report
    report.extend(check_yang_baxter(V))
    report.extend(check_algebra(B.algebra), prefix="algebra.")
    report.extend(check_coalgebra(B.field, B.dim, B.delta, B.eps), prefix="coalgebra.")
    report.extend(check_braided_algebra(B.algebra, B.c))
    report.extend(check_braided_coalgebra(B.field, B.dim, B.delta, B.eps, B.c))
    ident = ExactMatrix.identity(B.field, B.dim)
    one = ExactMatrix.identity(B.field, 1)
    report.add(compare(
        "coproduct_of_product",  # Δm = (m⊗m)(B⊗c⊗B)(Δ⊗Δ)
        B.delta * B.m,
        B.m.kron(B.m) * kron_all(ident, B.c, ident) * B.delta.kron(B.delta),
    ))
    report.add(compare("coproduct_of_unit", B.delta * B.u, B.u.kron(B.u)))
    report.add(compare("counit_of_product", B.eps * B.m, B.eps.kron(B.eps)))
    report.add(compare("counit_of_unit", B.eps * B.u, one))
    return report


# -- product constructions ----------------------------------------------------


def verify_product_spec(spec: ProductAlgebraSpec) -> None:
    """Check the exchange-operator hypotheses; raise ``SpecViolation`` naming
    the first failed equation.  Constructors call this rather than trusting
    the caller, because the conclusions are conditional on it."""
    for (i, j), cij in spec.c_matrices.items():
        di, dj = spec.algebra(i).dim, spec.algebra(j).dim
        if cij.rows != dj * di or cij.cols != di * dj:
            raise ShapeError(f"c[{i},{j}] must be {dj * di}x{di * dj}")
        try:
            cij.inverse()
        except NotInvertible:
            raise SpecViolation(f"c[{i},{j}] is not invertible")
    f = spec.a1.field
    for i in (1, 2):
        for j in (1, 2):
            Ai, Aj = spec.algebra(i), spec.algebra(j)
            Ii = ExactMatrix.identity(f, Ai.dim)
            Ij = ExactMatrix.identity(f, Aj.dim)
            cij = spec.c(i, j)
            lhs = cij * Ai.m.kron(Ij)
            rhs = Ij.kron(Ai.m) * cij.kron(Ii) * Ii.kron(cij)
            if lhs != rhs:
                raise SpecViolation(f"c21 fails for (i,j)=({i},{j})")
            lhs = cij * Ii.kron(Aj.m)
            rhs = Aj.m.kron(Ii) * Ij.kron(cij) * cij.kron(Ij)
            if lhs != rhs:
                raise SpecViolation(f"c22 fails for (i,j)=({i},{j})")
            if cij * Ai.u.kron(Ij) != Ij.kron(Ai.u):
                raise SpecViolation(f"c31 (left unit) fails for (i,j)=({i},{j})")
            if cij * Ii.kron(Aj.u) != Aj.u.kron(Ii):
                raise SpecViolation(f"c31 (right unit) fails for (i,j)=({i},{j})")
            for k in (1, 2):
                Ik = ExactMatrix.identity(f, spec.algebra(k).dim)
                lhs = kron_all(Ik, cij) * spec.c(i, k).kron(Ij) * Ii.kron(spec.c(j, k))
                rhs = spec.c(j, k).kron(Ii) * Ij.kron(spec.c(i, k)) * cij.kron(Ik)
                if lhs != rhs:
                    raise SpecViolation(f"cij fails for (i,j,k)=({i},{j},{k})")


def product_algebra(spec: ProductAlgebraSpec, i: int, j: int) -> BraidedAlgebra:
    """The braided algebra on ``A_i ⊗ A_j`` with the exchange-twisted product
    and the assembled braiding, after verifying the hypotheses."""
    verify_product_spec(spec)
    f = spec.a1.field
    Ai, Aj = spec.algebra(i), spec.algebra(j)
    Ii = ExactMatrix.identity(f, Ai.dim)
    Ij = ExactMatrix.identity(f, Aj.dim)
    m = Ai.m.kron(Aj.m) * kron_all(Ii, spec.c(j, i), Ij)
    u = Ai.u.kron(Aj.u)
    c = (
        kron_all(Ii, spec.c(i, j), Ij)
        * spec.c(i, i).kron(spec.c(j, j))
        * kron_all(Ii, spec.c(j, i), Ij)
    )
    return BraidedAlgebra(AlgebraData(f, Ai.dim * Aj.dim, m, u), c)


@dataclass(frozen=True)
class DoubledAlgebra:
    """``A ⊗ A`` as a braided algebra, with the exchange operators between
    ``A`` and ``A ⊗ A`` that make the pair satisfy the product hypotheses."""

    product: BraidedAlgebra
    c21: ExactMatrix  # (A⊗A)⊗A -> A⊗(A⊗A)
    c12: ExactMatrix  # A⊗(A⊗A) -> (A⊗A)⊗A
    c22: ExactMatrix  # braiding of A⊗A


def double_braiding_operators(c: ExactMatrix, dim: int) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """The exchange operators a braiding induces between a space and its
    square: ``(c21, c12, c22)`` with

    ``c21 = (c⊗1)(1⊗c)``, ``c12 = (1⊗c)(c⊗1)``,
    ``c22 = (1⊗c⊗1)(c⊗c)(1⊗c⊗1)``.
    """
    ident = ExactMatrix.identity(c.field, dim)
    c21 = c.kron(ident) * ident.kron(c)
    c12 = ident.kron(c) * c.kron(ident)
    c22 = kron_all(ident, c, ident) * c.kron(c) * kron_all(ident, c, ident)
    return c21, c12, c22


def double_braiding(A: AlgebraData, c: ExactMatrix) -> DoubledAlgebra:
    """Braided algebra structure on ``A ⊗ A`` induced by a braided algebra
    ``(A, c)``, with the derived exchange operators."""
    gate = check_braided_algebra(A, c)
    if not gate.passed:
        raise SpecViolation(f"input is not a braided algebra: {gate.failures()[0].name}")
    c21, c12, c22 = double_braiding_operators(c, A.dim)
    spec = ProductAlgebraSpec(A, A, {(1, 1): c, (1, 2): c, (2, 1): c, (2, 2): c})
    prod = product_algebra(spec, 1, 2)
    assert prod.c == c22
    return DoubledAlgebra(prod, c21, c12, c22)
