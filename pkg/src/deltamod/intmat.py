"""Exact integer matrix routines for presenting quotient groups.

Everything here works on plain Python ints (lists of lists), so there is
no overflow to worry about; the matrices involved are tiny (a handful of
coordinates plus one column per relation).
"""

from .errors import InternalInconsistency


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def diagonalize(mat: list[list[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Bring ``mat`` to diagonal form by unimodular row and column operations.

    Returns ``(diag, U, Uinv)`` where ``U @ mat @ V`` is diagonal for some
    unimodular ``V`` that is not tracked (column operations do not change
    the column span, which is all the callers care about) and
    ``U @ Uinv == I``.  ``diag`` has ``min(rows, cols)`` entries, zeros
    included, not necessarily in divisibility order.
    """
    a = [row[:] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m)
    uinv = identity(m)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in range(m):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def add_row(src, dst, c):
        # row_dst += c * row_src; inverse is a column operation on uinv
        for k in range(n):
            a[dst][k] += c * a[src][k]
        for k in range(m):
            u[dst][k] += c * u[src][k]
        for r in range(m):
            uinv[r][src] -= c * uinv[r][dst]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in range(m):
            uinv[r][i] = -uinv[r][i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        # find a pivot in the lower-right submatrix
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        # clear row t and column t by Euclidean reduction
        while True:
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    add_row(t, i, -(a[i][t] // a[t][t]))
            nz = [i for i in range(t + 1, m) if a[i][t] != 0]
            if nz:
                swap_rows(t, nz[0])
                continue
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    add_col(t, j, -(a[t][j] // a[t][t]))
            nz = [j for j in range(t + 1, n) if a[t][j] != 0]
            if nz:
                swap_cols(t, nz[0])
                continue
            break
        if a[t][t] < 0:
            negate_row(t)

    diag = [a[t][t] for t in range(min(m, n))]
    return diag, u, uinv


def column_basis(cols: list[list[int]], dim: int) -> list[list[int]]:
    """Lower-triangular basis (as a dim x dim matrix) of the full-rank
    lattice spanned by ``cols`` in Z^dim, via Euclidean column reduction."""
    basis: list[list[int]] = []
    pivot_cols = [list(c) for c in cols]
    for r in range(dim):
        # reduce entries in row r across remaining columns to one pivot
        cand = [c for c in pivot_cols if c[r] != 0]
        while len(cand) > 1:
            cand.sort(key=lambda c: abs(c[r]))
            small = cand[0]
            for c in cand[1:]:
                q = c[r] // small[r]
                for k in range(dim):
                    c[k] -= q * small[k]
            cand = [c for c in pivot_cols if c[r] != 0]
        if not cand:
            raise InternalInconsistency(f"lattice not full rank at row {r}")
        pivot = cand[0]
        if pivot[r] < 0:
            for k in range(dim):
                pivot[k] = -pivot[k]
        basis.append(pivot[:])
        # zero out row r of the pivot so it is not reused
        pivot_cols = [c for c in pivot_cols if c is not pivot]
        for c in pivot_cols:
            if c[r] != 0:
                q = c[r] // pivot[r]
                for k in range(dim):
                    c[k] -= q * pivot[k]
    # basis[j] is the j-th basis column; entries above the pivot row are zero
    w = [[basis[j][i] for j in range(dim)] for i in range(dim)]
    return w


def solve_lower_triangular(w: list[list[int]], x: list[int]) -> list[int]:
    """Solve ``w @ y = x`` exactly for lower-triangular integer ``w``."""
    dim = len(x)
    y = [0] * dim
    for i in range(dim):
        acc = x[i] - sum(w[i][j] * y[j] for j in range(i))
        if w[i][i] == 0 or acc % w[i][i] != 0:
            raise InternalInconsistency("vector is not in the lattice span")
        y[i] = acc // w[i][i]
    return y
