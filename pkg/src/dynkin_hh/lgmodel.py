"""Orbifold Landau-Ginzburg data for simple singularities.

A model bundles an invertible polynomial ``w`` in variables ``x_1..x_{n+1}``,
an auxiliary variable ``x_0``, the character lattice of the diagonal symmetry
group acting on all ``n+2`` coordinates, and the rational weights ``q_i``.
Variables are indexed ``0..n+1`` with index 0 reserved for ``x_0``; exponent
vectors always have length ``n+2``.

The character lattice is presented on generators ``chi_1, ..., chi_{n+1},
chi`` (in that order) with one relation per defining monomial of the group,
and ``chi_0 = chi - (chi_1 + ... + chi_{n+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import fraction_solve
from .abelian import (DualCharacter, FgAbelianGroup, GroupElement,
                      IntegerMatrix, transpose)

__all__ = ["MonomialPolynomial", "LGModel", "Sector", "preset",
           "from_exponent_matrix", "transpose", "LogCalabiYauError"]

FAMILIES = ("A", "D", "E6", "E7", "E8")


class LogCalabiYauError(ValueError):
    """q_0 = 0: graded pieces of the cohomology are infinite-dimensional."""


@dataclass(frozen=True)
class MonomialPolynomial:
    """A polynomial stored as (coefficient, exponent vector) terms."""

    variable_count: int
    terms: tuple

    @classmethod
    def make(cls, variable_count, terms):
        acc = {}
        for coeff, exps in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != variable_count:
                raise ValueError("exponent vector length mismatch")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            acc[exps] = acc.get(exps, Fraction(0)) + Fraction(coeff)
        kept = tuple(sorted((exps, c) for exps, c in acc.items() if c != 0))
        return cls(variable_count, tuple((c, exps) for exps, c in kept))

    @classmethod
    def zero(cls, variable_count):
        return cls.make(variable_count, [])

    def is_zero(self):
        return not self.terms

    def variables_used(self):
        used = set()
        for _, exps in self.terms:
            used.update(i for i, e in enumerate(exps) if e > 0)
        return sorted(used)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for coeff, exps in self.terms:
            factors = [f"x{i}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(exps) if e > 0]
            body = "*".join(factors) if factors else "1"
            parts.append(body if coeff == 1 else f"{coeff}*{body}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Sector:
    """One summand of the orbifold decomposition.

    ``phi`` is a character of the quotient lattice; ``fixed`` is the set of
    variable indices it fixes, ``codim`` the dimension of the moving part,
    and ``nu`` the total lattice degree of the moving coordinates.
    """

    index: int
    phi: DualCharacter
    fixed: tuple
    codim: int
    nu: GroupElement
    tvals: tuple

    @property
    def fully_twisted(self):
        return not self.fixed

    def fixes_x0(self):
        return 0 in self.fixed


class LGModel:
    def __init__(self, polynomial, n, relation_matrix, family=None, rank=None,
                 validated=False):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.polynomial = polynomial
        self.n = n
        self.relation_matrix = relation_matrix
        self.family = family
        self.rank = rank
        self.validated = validated

        nvars = n + 2
        if polynomial.variable_count != nvars:
            raise ValueError("polynomial has the wrong number of variables")
        if any(exps[0] != 0 for _, exps in polynomial.terms):
            raise ValueError("the potential must not involve x_0")

        gens = nvars                      # chi_1..chi_{n+1}, chi
        rel_rows = [list(row) + [-1] for row in relation_matrix.entries]
        self.lattice = FgAbelianGroup(gens, rel_rows)
        self.chi = self.lattice.generator(gens - 1)
        chis = [None] * nvars
        for i in range(1, nvars):
            chis[i] = self.lattice.generator(i - 1)
        chis[0] = self.chi - sum(chis[1:], self.lattice.zero())
        self.chis = tuple(chis)

        qs = fraction_solve(relation_matrix.row_lists(), [1] * (n + 1))
        q0 = 1 - sum(qs)
        self.q = (q0,) + tuple(qs)
        for i in range(1, nvars):
            if not (0 < self.q[i] <= Fraction(1, 2)):
                raise ValueError(f"q_{i} = {self.q[i]} not in (0, 1/2]")

        for _, exps in polynomial.terms:
            if not self.lattice.is_zero(self.degree_of(exps) - self.chi):
                raise ValueError("potential term is not of degree chi")

        self._sectors = None
        self._x0_period = None

    # -- degrees ----------------------------------------------------------

    def degree_of(self, exps) -> GroupElement:
        deg = self.lattice.zero()
        for i, e in enumerate(exps):
            if e:
                deg = deg + e * self.chis[i]
        return deg

    def q_of_exps(self, exps) -> Fraction:
        return sum((e * self.q[i] for i, e in enumerate(exps)), Fraction(0))

    def q_of_element(self, x: GroupElement) -> Fraction:
        # on generators: q(chi_j) = q_j, q(chi) = 1
        total = sum((c * self.q[j + 1] for j, c in enumerate(x.coords[:-1])),
                    Fraction(0))
        return total + x.coords[-1]

    def solve_multiple(self, rho: GroupElement):
        return self.lattice.solve_multiple(rho, self.chi)

    # -- sectors ----------------------------------------------------------

    def sectors(self):
        """All group elements of the finite quotient, as Sector records.

        Deterministic order: lexicographic on the character value vectors.
        """
        if self._sectors is None:
            duals = self.lattice.enumerate_dual_of_quotient(self.chi)
            nvars = self.n + 2
            out = []
            for idx, phi in enumerate(duals):
                tvals = tuple(phi(self.chis[i]) for i in range(nvars))
                fixed = tuple(i for i in range(nvars) if tvals[i] == 0)
                moving = [i for i in range(nvars) if tvals[i] != 0]
                nu = sum((self.chis[j] for j in moving), self.lattice.zero())
                out.append(Sector(index=idx, phi=phi, fixed=fixed,
                                  codim=len(moving), nu=nu, tvals=tvals))
            self._sectors = out
        return self._sectors

    def restrict(self, sector: Sector) -> MonomialPolynomial:
        """The potential with every non-fixed variable set to zero."""
        fixed = set(sector.fixed)
        kept = [(c, exps) for c, exps in self.polynomial.terms
                if all(e == 0 or i in fixed for i, e in enumerate(exps))]
        return MonomialPolynomial.make(self.polynomial.variable_count, kept)

    def x0_period(self):
        """Smallest P > 0 with P*chi_0 proportional to chi, and that multiple.

        The second component is P*q_0 as an integer; it vanishes exactly in
        the log Calabi-Yau case q_0 = 0.
        """
        if self._x0_period is None:
            bound = self.lattice.quotient_order(self.chi)
            chi0 = self.chis[0]
            for j in range(1, bound + 1):
                c = self.solve_multiple(j * chi0)
                if c is not None:
                    self._x0_period = (j, c)
                    break
            else:
                raise RuntimeError("x_0 period not found below quotient order")
        return self._x0_period

    def describe(self):
        if self.family is not None:
            return f"{self.family}{self.rank}, n={self.n}"
        return f"custom model, n={self.n}"


def _fermat_tail(nvars, start):
    """Quadratic terms x_i^2 for i = start..n+1 as term tuples."""
    terms = []
    for i in range(start, nvars):
        exps = [0] * nvars
        exps[i] = 2
        terms.append((1, tuple(exps)))
    return terms


def preset(family, rank, n) -> LGModel:
    """Models for the simple singularities with their symmetry groups.

    A uses x_1^{l+1} + sum x_i^2 with the maximal group; D uses the Fermat
    form x_1^{2l-2} + sum x_i^2 with the non-maximal group whose relations
    are (l-1)*chi_1 + chi_2 = 2*chi_2 = ... = chi; E6/E7/E8 use their
    defining polynomials with maximal groups.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    nvars = n + 2

    def unit_row(i, value):
        row = [0] * (n + 1)
        row[i] = value
        return row

    quad_rows = [unit_row(i, 2) for i in range(1, n + 1)]

    if family == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        exps = [0] * nvars
        exps[1] = rank + 1
        terms = [(1, tuple(exps))] + _fermat_tail(nvars, 2)
        rows = [unit_row(0, rank + 1)] + quad_rows
    elif family == "D":
        if rank < 4:
            raise ValueError("type D needs rank >= 4")
        exps = [0] * nvars
        exps[1] = 2 * rank - 2
        terms = [(1, tuple(exps))] + _fermat_tail(nvars, 2)
        first = [0] * (n + 1)
        first[0], first[1] = rank - 1, 1
        rows = [first] + quad_rows
    else:
        expected = int(family[1])
        if rank != expected:
            raise ValueError(f"type {family} has rank {expected}")
        if n < 1:
            raise ValueError("n must be at least 1")
        if family == "E6":
            head_exp, head_rows = [(1, 4)], [unit_row(0, 4), unit_row(1, 3)]
        elif family == "E7":
            head_exp = [(1, 3), (2, 1)]
            first = [0] * (n + 1)
            first[0], first[1] = 3, 1
            head_rows = [first, unit_row(1, 3)]
        else:
            head_exp, head_rows = [(1, 5)], [unit_row(0, 5), unit_row(1, 3)]
        e1 = [0] * nvars
        for i, e in head_exp:
            e1[i] = e
        e2 = [0] * nvars
        e2[2] = 3
        terms = [(1, tuple(e1)), (1, tuple(e2))] + _fermat_tail(nvars, 3)
        rows = head_rows + [unit_row(i, 2) for i in range(2, n + 1)]

    matrix = IntegerMatrix.from_rows(rows)
    poly = MonomialPolynomial.make(nvars, terms)
    return LGModel(poly, n, matrix, family=family, rank=rank, validated=True)


def from_exponent_matrix(a: IntegerMatrix, n: int) -> LGModel:
    """Model of ``w = sum_i prod_j x_j^{a_ij}`` with its maximal group.

    The matrix must be square of size n+1 with nonzero determinant and a
    weight solution q in (0, 1/2]^{n+1}.  The result is flagged unvalidated:
    downstream isolatedness checks still apply.
    """
    if a.rows != a.cols or a.rows != n + 1:
        raise ValueError("exponent matrix must be square of size n+1")
    if a.det() == 0:
        raise ValueError("singular exponent matrix")
    qs = fraction_solve(a.row_lists(), [1] * (n + 1))
    for i, qi in enumerate(qs, start=1):
        if qi <= 0:
            raise ValueError(f"non-positive weight q_{i} = {qi}")
        if qi > Fraction(1, 2):
            raise ValueError(f"weight q_{i} = {qi} exceeds 1/2")
    nvars = n + 2
    terms = []
    for row in a.entries:
        exps = [0] + list(row)
        terms.append((1, tuple(exps)))
    poly = MonomialPolynomial.make(nvars, terms)
    return LGModel(poly, n, a, validated=False)
