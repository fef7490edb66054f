"""Exchange operators between tensor powers, built from a single braiding.

For a braided object ``(V, c)`` there is a unique family
``c^{m,n}: V^m ⊗ V^n -> V^n ⊗ V^m`` compatible with stacking strands on
either side.  Two independent recursion schedules are provided:

* the production schedule peels one strand off the left block;
* the oracle schedule peels one strand off the right block.

Their agreement on every input is the uniqueness of the family made
executable, and it is asserted wholesale in the test suite.
"""

from __future__ import annotations

from .braided import BraidedObject
from .errors import BadDegree
from .matrix import ExactMatrix


class BraidRepCache:
    """Memoized table of the block exchange operators of one braided object.

    Recomputation across degrees would be quadratic in calls, so every
    constructed matrix is kept; inserts are idempotent (equal values), making
    concurrent reuse after a single-writer build benign.
    """

    def __init__(self, source: BraidedObject):
        self.source = source
        self.table: dict[tuple[int, int], ExactMatrix] = {}

    def _ident(self, power: int) -> ExactMatrix:
        return ExactMatrix.identity(self.source.field, self.source.dim ** power)

    def block(self, m: int, n: int) -> ExactMatrix:
        """Left-peeling schedule: reduce the first index to 1, then walk the
        second index up one strand at a time."""
        if m < 0 or n < 0:
            raise BadDegree(f"block indices must be non-negative, got ({m},{n})")
        key = (m, n)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        if m == 0 or n == 0:
            out = self._ident(m + n)
        elif m == 1 and n == 1:
            out = self.source.c
        elif m == 1:
            out = self._ident(n - 1).kron(self.source.c) * self.block(1, n - 1).kron(self._ident(1))
        else:
            out = self.block(1, n).kron(self._ident(m - 1)) * self._ident(1).kron(self.block(m - 1, n))
        self.table[key] = out
        return out


class OracleBraidRepCache:
    """Right-peeling schedule; intentionally a separate recursion and cache."""

    def __init__(self, source: BraidedObject):
        self.source = source
        self.table: dict[tuple[int, int], ExactMatrix] = {}

    def _ident(self, power: int) -> ExactMatrix:
        return ExactMatrix.identity(self.source.field, self.source.dim ** power)

    def block(self, m: int, n: int) -> ExactMatrix:
        if m < 0 or n < 0:
            raise BadDegree(f"block indices must be non-negative, got ({m},{n})")
        key = (m, n)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        if m == 0 or n == 0:
            out = self._ident(m + n)
        elif m == 1 and n == 1:
            out = self.source.c
        elif n == 1:
            out = self.block(m - 1, 1).kron(self._ident(1)) * self._ident(m - 1).kron(self.source.c)
        else:
            out = self._ident(n - 1).kron(self.block(m, 1)) * self.block(m, n - 1).kron(self._ident(1))
        self.table[key] = out
        return out


def braiding_block(m: int, n: int, V: BraidedObject, cache: BraidRepCache | None = None) -> ExactMatrix:
    """The exchange operator ``V^m ⊗ V^n -> V^n ⊗ V^m``."""
    if cache is None:
        cache = BraidRepCache(V)
    return cache.block(m, n)


def braiding_block_oracle(m: int, n: int, V: BraidedObject,
                          cache: OracleBraidRepCache | None = None) -> ExactMatrix:
    """Same operator by the other schedule; must agree with ``braiding_block``."""
    if cache is None:
        cache = OracleBraidRepCache(V)
    return cache.block(m, n)


def check_hexagon(l: int, m: int, n: int, V: BraidedObject,
                  cache: BraidRepCache | None = None) -> bool:
    """The two ways of exchanging three stacked blocks agree:

    ``(1_n ⊗ c^{l,m})(c^{l,n} ⊗ 1_m)(1_l ⊗ c^{m,n})
      = (c^{m,n} ⊗ 1_l)(1_m ⊗ c^{l,n})(c^{l,m} ⊗ 1_n)``.
    """
    if cache is None:
        cache = BraidRepCache(V)
    d = V.dim
    idp = lambda k: ExactMatrix.identity(V.field, d ** k)
    lhs = idp(n).kron(cache.block(l, m)) * cache.block(l, n).kron(idp(m)) * idp(l).kron(cache.block(m, n))
    rhs = cache.block(m, n).kron(idp(l)) * idp(m).kron(cache.block(l, n)) * cache.block(l, m).kron(idp(n))
    return lhs == rhs
