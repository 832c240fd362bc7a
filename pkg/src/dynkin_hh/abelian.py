"""Finitely generated abelian groups presented by integer relation matrices.

A group is ``Z^g`` modulo the row span of a relation matrix.  Smith normal
form gives canonical representatives, exact solutions of proportionality
equations ``rho = c * chi``, and the full character table of a finite
quotient, all with arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ._linalg import bareiss_det, identity_rows, int_inverse, mat_mul


class FiniteOrderError(ValueError):
    """Raised when an element required to have infinite order does not."""


class InfiniteQuotientError(ValueError):
    """Raised when a quotient required to be finite is infinite."""


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        ncols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        return cls(len(entries), ncols, entries)

    @classmethod
    def identity(cls, n):
        return cls.from_rows(identity_rows(n))

    @classmethod
    def zero(cls, rows, cols):
        return cls.from_rows([[0] * cols for _ in range(rows)])

    def row_lists(self):
        return [list(row) for row in self.entries]

    def transpose(self):
        return IntegerMatrix.from_rows(
            [[self.entries[i][j] for i in range(self.rows)]
             for j in range(self.cols)])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return IntegerMatrix.from_rows(mat_mul(self.row_lists(),
                                               other.row_lists()))

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.row_lists())

    def is_unimodular(self):
        return self.rows == self.cols and abs(self.det()) == 1

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]


def transpose(m: IntegerMatrix) -> IntegerMatrix:
    """Matrix transpose (the exponent-matrix flip pairing dual polynomials)."""
    if m.rows != m.cols:
        raise ValueError("transpose is defined here for square matrices only")
    return m.transpose()


def smith_normal_form(m: IntegerMatrix):
    """Smith normal form with transforms: U * M * V = D.

    U and V are unimodular, D is diagonal with d_1 | d_2 | ... and all
    d_i >= 0 (zeros at the end of the chain).  Pivots are chosen with
    minimal absolute value to control coefficient growth.

    >>> u, d, v = smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
    >>> d.diagonal()
    [1, 6]
    """
    a = m.row_lists()
    nrows, ncols = m.rows, m.cols
    u = identity_rows(nrows)
    v = identity_rows(ncols)

    def row_add(i, j, k):          # row_i += k * row_j
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def col_add(i, j, k):          # col_i += k * col_j
        for r in a:
            r[i] += k * r[j]
        for r in v:
            r[i] += k * r[j]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def find_pivot(t):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(best[2])):
                    best = (i, j, x)
        return best

    t = 0
    while t < min(nrows, ncols):
        piv = find_pivot(t)
        if piv is None:
            break
        i, j, _ = piv
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        while True:
            # clear column t, restarting whenever a remainder steals the pivot
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                row_add(i, t, -q)
                if a[i][t] != 0:
                    row_swap(t, i)
                    dirty = True
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                col_add(j, t, -q)
                if a[t][j] != 0:
                    col_swap(t, j)
                    dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, nrows)):
                break
        t += 1

    rank = sum(1 for i in range(min(nrows, ncols)) if a[i][i] != 0)
    for i in range(rank):
        if a[i][i] < 0:
            row_negate(i)

    # enforce the divisibility chain d_i | d_j (i < j) with 2x2 fixes
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if dj % di == 0:
                continue
            changed = True
            # push d_j into column i, then re-clear the 2x2 block
            col_add(i, i + 1, 1)
            row_add(i + 1, i, -(a[i + 1][i] // a[i][i]))
            while a[i + 1][i] != 0:
                row_swap(i, i + 1)
                row_add(i + 1, i, -(a[i + 1][i] // a[i][i]))
            q = a[i][i + 1] // a[i][i]
            col_add(i + 1, i, -q)
            if a[i][i + 1] != 0:
                col_swap(i, i + 1)
                col_add(i + 1, i, -(a[i][i + 1] // a[i][i]))
            if a[i][i] < 0:
                row_negate(i)
            if a[i + 1][i + 1] < 0:
                row_negate(i + 1)

    d = [[a[i][j] if i == j else 0 for j in range(ncols)] for i in range(nrows)]
    return (IntegerMatrix.from_rows(u), IntegerMatrix.from_rows(d),
            IntegerMatrix.from_rows(v))


@dataclass(frozen=True)
class GroupElement:
    """An element of Z^g, interpreted modulo the relations of its group."""

    coords: tuple

    @classmethod
    def of(cls, coords):
        return cls(tuple(int(x) for x in coords))

    @classmethod
    def zero(cls, g):
        return cls((0,) * g)

    @classmethod
    def unit(cls, g, j):
        return cls(tuple(1 if i == j else 0 for i in range(g)))

    def __add__(self, other):
        return GroupElement(tuple(x + y for x, y in zip(self.coords,
                                                        other.coords)))

    def __sub__(self, other):
        return GroupElement(tuple(x - y for x, y in zip(self.coords,
                                                        other.coords)))

    def __neg__(self):
        return GroupElement(tuple(-x for x in self.coords))

    def __rmul__(self, k):
        return GroupElement(tuple(k * x for x in self.coords))

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class DualCharacter:
    """A homomorphism from a finite quotient to Q/Z.

    ``values[k]`` is the image of the k-th ambient generator, a Fraction
    in [0, 1) stored in lowest terms.
    """

    values: tuple

    def __call__(self, x: GroupElement) -> Fraction:
        total = sum((c * v for c, v in zip(x.coords, self.values)),
                    Fraction(0))
        return total - (total // 1)

    def sort_key(self):
        return tuple((v.numerator, v.denominator) for v in self.values)


class FgAbelianGroup:
    """Z^generator_count modulo the row span of the relation matrix."""

    def __init__(self, generator_count, relation_rows):
        self.generator_count = generator_count
        rows = [list(map(int, r)) for r in relation_rows]
        for r in rows:
            if len(r) != generator_count:
                raise ValueError("length mismatch in relation row")
        self.relation_matrix = (IntegerMatrix.from_rows(rows) if rows
                                else IntegerMatrix.zero(0, generator_count))
        if rows:
            u, d, v = smith_normal_form(self.relation_matrix)
        else:
            u = IntegerMatrix.identity(0)
            d = IntegerMatrix.zero(0, generator_count)
            v = IntegerMatrix.identity(generator_count)
        self.snf_u, self.snf_d, self.snf_v = u, d, v
        diag = d.diagonal()
        self._dvec = [diag[j] if j < len(diag) else 0
                      for j in range(generator_count)]
        self._v_rows = v.row_lists()
        self._v_inv = int_inverse(self._v_rows) if generator_count else []

    def zero(self):
        return GroupElement.zero(self.generator_count)

    def generator(self, j):
        return GroupElement.unit(self.generator_count, j)

    def _to_diag(self, x: GroupElement):
        if len(x) != self.generator_count:
            raise ValueError("length mismatch")
        v = self._v_rows
        g = self.generator_count
        return [sum(x.coords[k] * v[k][j] for k in range(g)) for j in range(g)]

    def element_normal_form(self, x: GroupElement) -> GroupElement:
        y = self._to_diag(x)
        for j, d in enumerate(self._dvec):
            if d > 0:
                y[j] %= d
        vinv = self._v_inv
        g = self.generator_count
        coords = [sum(y[k] * vinv[k][j] for k in range(g)) for j in range(g)]
        return GroupElement.of(coords)

    def is_zero(self, x: GroupElement) -> bool:
        y = self._to_diag(x)
        return all((d > 0 and yj % d == 0) or (d == 0 and yj == 0)
                   for yj, d in zip(y, self._dvec))

    def elements_equal(self, x, y):
        return self.is_zero(x - y)

    def has_infinite_order(self, x: GroupElement) -> bool:
        y = self._to_diag(x)
        return any(d == 0 and yj != 0 for yj, d in zip(y, self._dvec))

    def invariant_factors(self):
        """Nontrivial invariant factors (0 = free summand), chain order."""
        return [d for d in self._dvec if d != 1]

    def solve_multiple(self, rho: GroupElement, chi: GroupElement):
        """The unique integer c with rho = c * chi, or None.

        chi must have infinite order, which pins c on a free coordinate;
        the candidate is then verified against every torsion congruence.
        """
        yr = self._to_diag(rho)
        yc = self._to_diag(chi)
        c = None
        for j, d in enumerate(self._dvec):
            if d == 0 and yc[j] != 0:
                if yr[j] % yc[j] != 0:
                    return None
                cand = yr[j] // yc[j]
                if c is None:
                    c = cand
                elif c != cand:
                    return None
        if c is None:
            raise FiniteOrderError("chi has finite order")
        for j, d in enumerate(self._dvec):
            if d == 0:
                if yr[j] != c * yc[j]:
                    return None
            else:
                if (yr[j] - c * yc[j]) % d != 0:
                    return None
        return c

    def quotient_data(self, chi: GroupElement):
        """SNF data of the quotient by the cyclic subgroup generated by chi."""
        rows = self.relation_matrix.row_lists() + [list(chi.coords)]
        aug = IntegerMatrix.from_rows(rows)
        u, d, v = smith_normal_form(aug)
        diag = d.diagonal()
        dvec = [diag[j] if j < len(diag) else 0
                for j in range(self.generator_count)]
        return dvec, v.row_lists()

    def quotient_order(self, chi: GroupElement):
        dvec, _ = self.quotient_data(chi)
        order = 1
        for d in dvec:
            if d == 0:
                raise InfiniteQuotientError("quotient is infinite")
            order *= d
        return order

    def enumerate_dual_of_quotient(self, chi: GroupElement):
        """All characters of G/<chi> as maps on the ambient generators.

        Returns the complete duplicate-free list, sorted lexicographically
        on the value vectors; its length is the order of the quotient.
        """
        dvec, v_rows = self.quotient_data(chi)
        if any(d == 0 for d in dvec):
            raise InfiniteQuotientError("quotient is infinite")
        g = self.generator_count
        chars = []
        for combo in product(*[range(d) for d in dvec]):
            values = []
            for k in range(g):
                val = sum(Fraction(combo[j], dvec[j]) * v_rows[k][j]
                          for j in range(g))
                values.append(val - (val // 1))
            chars.append(DualCharacter(tuple(values)))
        chars.sort(key=DualCharacter.sort_key)
        return chars
