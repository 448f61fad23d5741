"""Endomorphism-algebra analysis: multiplication tables, trace-form
Gram matrices, discriminants and semisimplicity tests at specific
parameter values.
"""

from functools import lru_cache

from .coeff import DeltaPoly, rational_roots
from .compose import compose
from .diagrams import enumerate_diagrams
from .errors import DimensionBudgetExceeded, UnsupportedVariant

DEFAULT_BASIS_BUDGET = 250

_ALGEBRA_VARIANTS = ("brauer", "partition", "temperley_lieb", "signed")


class AlgebraTable:
    """Structure constants of the diagram algebra on the object [n].

    Products of basis diagrams are single terms: table[i][j] holds
    (delta power, sign, basis index) for basis[i] after basis[j].
    """

    __slots__ = ("variant", "n", "basis", "index", "table")

    def __init__(self, variant, n, max_basis=DEFAULT_BASIS_BUDGET):
        if variant not in _ALGEBRA_VARIANTS:
            raise UnsupportedVariant(variant)
        basis = tuple(enumerate_diagrams(variant, n, n))
        if len(basis) > max_basis:
            raise DimensionBudgetExceeded(
                f"{len(basis)} basis diagrams exceed the budget {max_basis}"
            )
        self.variant = variant
        self.n = n
        self.basis = basis
        self.index = {d: i for i, d in enumerate(basis)}
        table = []
        for di in basis:
            row = []
            for dj in basis:
                res = compose(di, dj)
                row.append((res.closed_count, res.sign, self.index[res.result]))
            table.append(tuple(row))
        self.table = tuple(table)

    @property
    def dimension(self):
        return len(self.basis)

    def product(self, i, j):
        return self.table[i][j]

    def left_multiplication_trace(self, k):
        """Trace of y -> basis[k] o y in the regular representation."""
        acc = DeltaPoly.zero()
        for l in range(self.dimension):
            c, s, out = self.table[k][l]
            if out == l:
                acc = acc + DeltaPoly.delta_power(c, s)
        return acc

    def check_associativity(self):
        """Exhaustive structure-constant associativity check."""
        dim = self.dimension
        for i in range(dim):
            for j in range(dim):
                cij, sij, kij = self.table[i][j]
                for k in range(dim):
                    cjk, sjk, kjk = self.table[j][k]
                    c1, s1, k1 = self.table[kij][k]
                    c2, s2, k2 = self.table[i][kjk]
                    if (cij + c1, sij * s1, k1) != (cjk + c2, sjk * s2, k2):
                        return False
        return True

    def gram_matrix(self):
        """G[i][j] = trace of left multiplication by basis[i] o basis[j]."""
        traces = [self.left_multiplication_trace(k) for k in range(self.dimension)]
        G = []
        for i in range(self.dimension):
            row = []
            for j in range(self.dimension):
                c, s, k = self.table[i][j]
                row.append(traces[k] * DeltaPoly.delta_power(c, s))
            G.append(row)
        return G


@lru_cache(maxsize=None)
def build_algebra(variant, n, max_basis=DEFAULT_BASIS_BUDGET):
    return AlgebraTable(variant, n, max_basis=max_basis)


def poly_det(matrix):
    """Determinant over the polynomial ring by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return DeltaPoly.one()
    M = [list(row) for row in matrix]
    sign = 1
    prev = DeltaPoly.one()
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next(
                (i for i in range(k + 1, n) if not M[i][k].is_zero()), None
            )
            if swap is None:
                return DeltaPoly.zero()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev)
            M[i][k] = DeltaPoly.zero()
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det * sign if sign < 0 else det


@lru_cache(maxsize=None)
def discriminant(variant, n):
    """Determinant of the trace form of the regular representation."""
    return poly_det(build_algebra(variant, n).gram_matrix())


def is_semisimple_at(variant, n, delta):
    """Nonvanishing of the discriminant at an exact rational point."""
    return discriminant(variant, n).evaluate(delta) != 0


def discriminant_rational_roots(variant, n):
    return rational_roots(discriminant(variant, n))
