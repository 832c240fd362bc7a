"""Exact linear algebra helpers on plain Python lists.

Matrices are lists of row lists with int (arbitrary precision) or Fraction
entries.  Everything is fraction-free or exact-rational; no floats anywhere.
"""

from fractions import Fraction
from math import gcd


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    n = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(n)]
            for row in a]


def _normalize_row(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def pivoted_elimination(rows, ncols):
    """Integer Gaussian elimination with a fixed left-to-right column order.

    Scans columns in the given order; for each column with a nonzero entry in
    some unused row, that column becomes a pivot and the entry is eliminated
    from every other row by cross-multiplication (rows are renormalized by
    their gcd to control growth).  Returns the list of pivot column indices;
    `rows` is modified in place.

    The column scan order is semantic for callers that read the pivot set
    (basis selection), so no column pivoting is ever performed.
    """
    pivot_cols = []
    used = [False] * len(rows)
    for c in range(ncols):
        # smallest nonzero entry in an unused row makes a stable cheap pivot
        best = None
        for i, row in enumerate(rows):
            if not used[i] and row[c] != 0:
                if best is None or abs(row[c]) < abs(rows[best][c]):
                    best = i
        if best is None:
            continue
        used[best] = True
        pivot_cols.append(c)
        prow = rows[best]
        pval = prow[c]
        for i, row in enumerate(rows):
            if i == best or row[c] == 0:
                continue
            rval = row[c]
            g = gcd(pval, rval)
            alpha, beta = pval // g, rval // g
            rows[i] = _normalize_row([alpha * x - beta * p
                                      for x, p in zip(row, prow)])
    return pivot_cols


def rank_int(rows, ncols=None):
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    work = [list(r) for r in rows]
    return len(pivoted_elimination(work, ncols))


def bareiss_det(rows):
    """Exact determinant of a square integer matrix (fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def fraction_solve(a_rows, rhs):
    """Solve A x = rhs exactly over the rationals.

    A must be square and invertible; returns a list of Fractions.
    Raises ValueError on a singular matrix.
    """
    n = len(a_rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)]
         for row, b in zip(a_rows, rhs)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def int_inverse(rows):
    """Inverse of a unimodular integer matrix, returned with int entries."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = m[i][n + j]
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(v))
        out.append(row)
    return out
