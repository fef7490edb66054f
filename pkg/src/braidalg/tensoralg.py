"""The truncated braided tensor bialgebra on a braided object.

Grading: component ``n`` is ``V^{⊗n}``, kept for all ``n <= N``.  The product
is concatenation (an identity under the row-major Kronecker identification),
the braiding acts blockwise through the exchange operators, and the coproduct
is the unique algebra map into the braided product on ``T ⊗ T`` that sends a
degree-1 element ``v`` to ``v⊗1 + 1⊗v``.

Every structure map here preserves total degree, so truncating at ``N`` is
exact: any axiom restricted to total degree ``<= N`` involves only stored
blocks, and building with ``N`` or ``N+1`` gives identical shared blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import AxiomReport, BraidedObject, compare
from .braidrep import BraidRepCache
from .errors import BadDegree, BadTruncation, TruncationOverflow
from .matrix import ExactMatrix


@dataclass
class TruncatedTensorBialgebra:
    """Graded components ``V^{⊗0..N}`` with all structure blocks."""

    V: BraidedObject
    N: int
    braid: BraidRepCache
    coproduct_blocks: dict[tuple[int, int], ExactMatrix]

    @property
    def field(self):
        return self.V.field

    def component_dim(self, n: int) -> int:
        return self.V.dim ** n

    def _degree_gate(self, n: int) -> None:
        if not (0 <= n <= self.N):
            raise BadDegree(f"degree {n} outside 0..{self.N}")

    def coproduct_block(self, k: int, n: int) -> ExactMatrix:
        """Component ``V^{⊗n} -> V^{⊗k} ⊗ V^{⊗(n-k)}`` of the coproduct."""
        self._degree_gate(n)
        if not (0 <= k <= n):
            raise BadDegree(f"block ({k},{n}) outside 0<=k<=n")
        return self.coproduct_blocks[(k, n)]

    def counit_block(self, n: int) -> ExactMatrix:
        """The counit kills every positive degree and fixes degree 0."""
        self._degree_gate(n)
        if n == 0:
            return ExactMatrix.identity(self.field, 1)
        return ExactMatrix.zeros(self.field, 1, self.component_dim(n))

    def braiding_block(self, m: int, n: int) -> ExactMatrix:
        """The ``(m, n)`` block of the braiding under the grading."""
        self._degree_gate(m)
        self._degree_gate(n)
        return self.braid.block(m, n)

    def multiply(self, w1: ExactMatrix, a: int, w2: ExactMatrix, b: int) -> ExactMatrix:
        """Concatenation product of column vectors in degrees ``a`` and ``b``.

        Partial above the truncation degree; silently truncating to zero
        would break associativity, so overflow raises instead.
        """
        if a < 0 or b < 0:
            raise BadDegree(f"degrees must be non-negative, got ({a},{b})")
        if a + b > self.N:
            raise TruncationOverflow(f"degree {a}+{b} exceeds truncation {self.N}")
        if w1.rows != self.component_dim(a) or w2.rows != self.component_dim(b):
            raise BadDegree("vector length does not match its declared degree")
        return w1.kron(w2)


def build_truncated(V: BraidedObject, N: int) -> TruncatedTensorBialgebra:
    """Construct all coproduct blocks up to total degree ``N``.

    Degree ``n`` is reached by peeling the last tensor factor: with
    ``w ⊗ v`` in ``V^{⊗(n-1)} ⊗ V``, the two coproduct summands of ``v``
    contribute ``Δ_{k,n-1} ⊗ V`` and ``(V^{⊗(k-1)} ⊗ c^{n-k,1})(Δ_{k-1,n-1} ⊗ V)``,
    the exchange operator carrying ``v`` through the right leg.
    """
    if N < 1:
        raise BadTruncation(f"truncation degree must be >= 1, got {N}")
    braid = BraidRepCache(V)
    f, d = V.field, V.dim
    idem = lambda k: ExactMatrix.identity(f, d ** k)
    blocks: dict[tuple[int, int], ExactMatrix] = {(0, 0): ExactMatrix.identity(f, 1)}
    for n in range(1, N + 1):
        for k in range(n + 1):
            total = ExactMatrix.zeros(f, d ** n, d ** n)
            if k <= n - 1:
                total = total + blocks[(k, n - 1)].kron(idem(1))
            if k >= 1:
                mover = idem(k - 1).kron(braid.block(n - k, 1))
                total = total + mover * blocks[(k - 1, n - 1)].kron(idem(1))
            blocks[(k, n)] = total
    return TruncatedTensorBialgebra(V, N, braid, blocks)


def multiply(w1: ExactMatrix, a: int, w2: ExactMatrix, b: int,
             T: TruncatedTensorBialgebra) -> ExactMatrix:
    return T.multiply(w1, a, w2, b)


def global_braiding_block(m: int, n: int, T: TruncatedTensorBialgebra) -> ExactMatrix:
    return T.braiding_block(m, n)


def check_truncated_axioms(T: TruncatedTensorBialgebra, N: int | None = None) -> AxiomReport:
    """Every braided-bialgebra axiom, blockwise, in total degree ``<= N``.

    Identities quantified over the whole tensor algebra are checked only on
    degrees ``<= N``; by gradedness this is complete for those degrees.
    """
    if N is None:
        N = T.N
    if N > T.N:
        raise BadDegree(f"cannot check degree {N} on a truncation at {T.N}")
    f, d = T.field, T.V.dim
    idp = lambda k: ExactMatrix.identity(f, d ** k)
    ct = T.braiding_block
    dl = T.coproduct_block
    eps = T.counit_block
    report = AxiomReport()

    # Yang-Baxter for the graded braiding, blockwise on three factors.
    for l in range(N + 1):
        for m in range(N + 1 - l):
            for n in range(N + 1 - l - m):
                lhs = idp(n).kron(ct(l, m)) * ct(l, n).kron(idp(m)) * idp(l).kron(ct(m, n))
                rhs = ct(m, n).kron(idp(l)) * idp(m).kron(ct(l, n)) * ct(l, m).kron(idp(n))
                report.add(compare(f"yang_baxter[{l},{m},{n}]", lhs, rhs))

    # Product/braiding compatibility: stacking strands on the left...
    for a in range(N + 1):
        for b in range(N + 1 - a):
            for n in range(N + 1 - a - b):
                lhs = ct(a + b, n)
                rhs = ct(a, n).kron(idp(b)) * idp(a).kron(ct(b, n))
                report.add(compare(f"product_braids_left[{a},{b};{n}]", lhs, rhs))
    # ...and on the right.
    for m in range(N + 1):
        for a in range(N + 1 - m):
            for b in range(N + 1 - m - a):
                lhs = ct(m, a + b)
                rhs = idp(a).kron(ct(m, b)) * ct(m, a).kron(idp(b))
                report.add(compare(f"product_braids_right[{m};{a},{b}]", lhs, rhs))

    # Unit/braiding compatibility: degree-0 blocks are identities.
    for n in range(N + 1):
        report.add(compare(f"unit_braids_left[{n}]", ct(0, n), idp(n)))
        report.add(compare(f"unit_braids_right[{n}]", ct(n, 0), idp(n)))

    # Coassociativity blockwise.
    for n in range(N + 1):
        for i in range(n + 1):
            for j in range(n + 1 - i):
                lhs = dl(i, i + j).kron(idp(n - i - j)) * dl(i + j, n)
                rhs = idp(i).kron(dl(j, n - i)) * dl(i, n)
                report.add(compare(f"coassociative[{n};{i},{j}]", lhs, rhs))

    # Counit laws: the extreme blocks are identities, so only the k=0 and
    # k=n summands of (ε⊗1)Δ and (1⊗ε)Δ survive and give the identity.
    for n in range(N + 1):
        report.add(compare(f"counit_left[{n}]", dl(0, n), idp(n)))
        report.add(compare(f"counit_right[{n}]", dl(n, n), idp(n)))

    # Coproduct of a product: Δ∘m = (m⊗m)(1⊗c⊗1)(Δ⊗Δ), blockwise over
    # input degrees (a, b) and output split k.
    for a in range(N + 1):
        for b in range(N + 1 - a):
            n = a + b
            for k in range(n + 1):
                rhs = ExactMatrix.zeros(f, d ** n, d ** n)
                for i in range(min(a, k) + 1):
                    j = k - i
                    if j < 0 or j > b:
                        continue
                    term = idp(i).kron(ct(a - i, j)).kron(idp(b - j)) * dl(i, a).kron(dl(j, b))
                    rhs = rhs + term
                report.add(compare(f"coproduct_of_product[{a},{b};{k}]", dl(k, n), rhs))

    # Coproduct/braiding compatibility, blockwise.
    for m in range(N + 1):
        for n in range(N + 1 - m):
            for k in range(n + 1):
                lhs = dl(k, n).kron(idp(m)) * ct(m, n)
                rhs = idp(k).kron(ct(m, n - k)) * ct(m, k).kron(idp(n - k)) * idp(m).kron(dl(k, n))
                report.add(compare(f"coproduct_braids_left[{m},{n};{k}]", lhs, rhs))
            for k in range(m + 1):
                lhs = idp(n).kron(dl(k, m)) * ct(m, n)
                rhs = ct(k, n).kron(idp(m - k)) * idp(k).kron(ct(m - k, n)) * dl(k, m).kron(idp(n))
                report.add(compare(f"coproduct_braids_right[{m},{n};{k}]", lhs, rhs))

    # Counit/braiding compatibility, blockwise.
    for m in range(N + 1):
        for n in range(N + 1 - m):
            lhs = eps(n).kron(idp(m)) * ct(m, n)
            report.add(compare(f"counit_braids_left[{m},{n}]", lhs, idp(m).kron(eps(n))))
            lhs = idp(n).kron(eps(m)) * ct(m, n)
            report.add(compare(f"counit_braids_right[{m},{n}]", lhs, eps(m).kron(idp(n))))

    # Coproduct of the unit, counit of products, counit of the unit.
    report.add(compare("coproduct_of_unit", dl(0, 0), ExactMatrix.identity(f, 1)))
    for a in range(N + 1):
        for b in range(N + 1 - a):
            report.add(compare(f"counit_of_product[{a},{b}]", eps(a + b), eps(a).kron(eps(b))))
    report.add(compare("counit_of_unit", eps(0), ExactMatrix.identity(f, 1)))

    return report
