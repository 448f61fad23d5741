"""Independent brute-force oracles used only by the test suite."""

from fractions import Fraction
from itertools import permutations

from diagcat.chars import (
    check_partition,
    class_size,
    partitions_of,
    standard_tableaux,
    sym_character,
)


def specht_character_oracle(lam, mu):
    """Trace of a permutation of the given cycle type on an explicitly
    constructed Specht module (polytabloids inside the tabloid space).

    Completely independent of the Murnaghan-Nakayama recursion; only
    usable at small sizes.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    n = sum(lam)
    assert sum(mu) == n

    def tabloid(tab):
        return tuple(frozenset(row) for row in tab)

    tabloid_index = {}

    def tabloid_id(tab):
        key = tabloid(tab)
        if key not in tabloid_index:
            tabloid_index[key] = len(tabloid_index)
        return tabloid_index[key]

    def columns(tab):
        cols = []
        for j in range(lam[0]):
            col = [row[j] for row in tab if j < len(row)]
            cols.append(col)
        return cols

    def polytabloid(tab):
        vec = {}
        cols = columns(tab)
        choices = [list(permutations(range(len(c)))) for c in cols]

        def rec(ci, perm_so_far, sign):
            if ci == len(cols):
                moved = [
                    tuple(perm_so_far.get(v, v) for v in row) for row in tab
                ]
                tid = tabloid_id(moved)
                vec[tid] = vec.get(tid, 0) + sign
                return
            col = cols[ci]
            for p in choices[ci]:
                s = _perm_parity(p)
                mapping = dict(perm_so_far)
                for a, b in zip(col, (col[i] for i in p)):
                    mapping[a] = b
                rec(ci + 1, mapping, sign * s)

        rec(0, {}, 1)
        return vec

    basis_tabs = standard_tableaux(lam)
    vecs = [polytabloid(tab) for tab in basis_tabs]
    dim_t = len(tabloid_index)
    f = len(vecs)
    A = [[Fraction(vec.get(r, 0)) for vec in vecs] for r in range(dim_t)]

    sigma = _permutation_of_type_1based(mu, n)
    trace = Fraction(0)
    for i, tab in enumerate(basis_tabs):
        moved = [tuple(sigma[v - 1] for v in row) for row in tab]
        target_vec = polytabloid(moved)
        rhs = [Fraction(target_vec.get(r, 0)) for r in range(dim_t)]
        sol = _solve_exact(A, rhs, f)
        trace += sol[i]
    assert trace.denominator == 1
    return int(trace)


def _perm_parity(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def _permutation_of_type_1based(rho, n):
    img = []
    start = 1
    for ln in rho:
        block = list(range(start, start + ln))
        img.extend(block[1:] + block[:1])
        start += ln
    img.extend(range(start, n + 1))
    return tuple(img)


def _solve_exact(A, rhs, ncols):
    """Solve A x = rhs for the unique x (A has full column rank)."""
    rows = len(A)
    M = [list(A[r]) + [rhs[r]] for r in range(rows)]
    piv_rows = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        pivot = M[r][c]
        M[r] = [v / pivot for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                factor = M[i][c]
                M[i] = [a - factor * b for a, b in zip(M[i], M[r])]
        piv_rows.append((r, c))
        r += 1
    x = [Fraction(0)] * ncols
    for rr, cc in piv_rows:
        x[cc] = M[rr][ncols]
    return x


def lr_by_characters(lam, mu, target):
    """LR coefficient via the Frobenius inner product of characters."""
    from math import factorial

    a, b = sum(lam), sum(mu)
    if a + b != sum(target):
        return 0
    total = Fraction(0)
    for rho in partitions_of(a):
        ca = sym_character(lam, rho)
        if ca == 0:
            continue
        for pi in partitions_of(b):
            cb = sym_character(mu, pi)
            if cb == 0:
                continue
            combined = tuple(sorted(rho + pi, reverse=True))
            total += Fraction(
                class_size(rho) * class_size(pi) * ca * cb
                * sym_character(target, combined)
            )
    value = total / (factorial(a) * factorial(b))
    assert value.denominator == 1
    return int(value)
