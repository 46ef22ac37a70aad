# This file is part of ts_fundalc.
#
# Developed for the Vera Rubin Observatory Telescope and Site Systems.
# This product includes software developed by the LSST Project
# (https://www.lsst.org).
# See the COPYRIGHT file at the top-level directory of this distribution
# for details of code ownership.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Exact rational linear algebra and finitely generated abelian quotients.

Vectors are tuples of `int` or `fractions.Fraction`; matrices are tuples of
rows. sympy does the elimination and the Smith normal form over ``ZZ``.
"""

__all__ = [
    "to_fraction",
    "fraction_vector",
    "mat_vec",
    "mat_mul",
    "dot",
    "nullspace",
    "solve_affine",
    "integral_multiple",
    "generic_point",
    "LatticeQuotient",
    "QuotientClass",
]

import dataclasses
import functools
import math
from fractions import Fraction

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp


def to_fraction(value):
    """Convert an `int`, `str`, `Fraction` or sympy rational to `Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def fraction_vector(values):
    return tuple(to_fraction(v) for v in values)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), 0)


def mat_vec(matrix, vector):
    """Multiply a matrix by a column vector exactly.

    Parameters
    ----------
    matrix : `tuple` [`tuple` [`int`]]
        Rows of the matrix.
    vector : `tuple`
        Entries may be `int` or `Fraction`.

    Returns
    -------
    product : `tuple`
        The product, with the entry types numpy's object arithmetic yields.
    """
    if len(matrix) == 0:
        return ()
    product = np.array(matrix, dtype=object).dot(np.array(vector, dtype=object))
    return tuple(product.tolist())


def mat_mul(left, right):
    product = np.array(left, dtype=object).dot(np.array(right, dtype=object))
    return tuple(tuple(row) for row in product.tolist())


def _sympy_matrix(rows, ncols):
    if len(rows) == 0:
        return sympy.zeros(0, ncols)
    return sympy.Matrix(
        [[sympy.Rational(to_fraction(c).numerator, to_fraction(c).denominator) for c in row] for row in rows]
    )


def nullspace(rows, ncols):
    """Return a basis of ``{v : rows @ v = 0}`` as `Fraction` vectors."""
    matrix = _sympy_matrix(rows, ncols)
    if matrix.rows == 0:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    return [fraction_vector(vec) for vec in matrix.nullspace()]


def solve_affine(rows, rhs, ncols):
    """Solve ``rows @ v = rhs`` exactly.

    Returns
    -------
    solution : `tuple` or `None`
        ``(base_point, direction_basis)`` describing the solution set, or
        `None` if the system is inconsistent. Free parameters are set to 0
        in the base point.
    """
    if len(rows) == 0:
        return tuple(Fraction(0) for _ in range(ncols)), nullspace(rows, ncols)
    matrix = _sympy_matrix(rows, ncols)
    target = _sympy_matrix([[c] for c in rhs], 1)
    try:
        solution, params = matrix.gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.rows > 0:
        solution = solution.subs({p: 0 for p in params})
    return fraction_vector(solution), nullspace(rows, ncols)


def integral_multiple(vector):
    """Scale a rational vector by the least positive integer making it
    integral."""
    denominator = functools.reduce(math.lcm, (to_fraction(c).denominator for c in vector), 1)
    return tuple(int(to_fraction(c) * denominator) for c in vector)


def generic_point(basis, avoid):
    """Find a point of span(basis) on which no functional in ``avoid``
    vanishes.

    The candidates ``sum(k**i * basis[i])`` for k = 1, 2, ... are tried in
    turn; each functional vanishes for finitely many k only, so the loop
    ends whenever every functional is nonzero on the span.

    Parameters
    ----------
    basis : `list` [`tuple`]
        Spanning vectors.
    avoid : `list` [`tuple`]
        Linear functionals (as coefficient rows).

    Returns
    -------
    point : `tuple` [`Fraction`] or `None`
        `None` when some functional vanishes on the whole span.
    """
    dim = len(basis[0]) if basis else 0
    values = [[dot(functional, b) for b in basis] for functional in avoid]
    if any(all(v == 0 for v in row) for row in values):
        return None
    k = 1
    while True:
        coefficients = [Fraction(k) ** i for i in range(len(basis))]
        if all(dot(row, coefficients) != 0 for row in values):
            return tuple(
                sum((c * b[j] for c, b in zip(coefficients, basis)), Fraction(0)) for j in range(dim)
            )
        k += 1


@dataclasses.dataclass(frozen=True)
class QuotientClass:
    """An element of a finitely generated abelian group ``Z^f + Z/d``.

    Attributes
    ----------
    values : `tuple` [`int`]
        Coordinates; torsion coordinates are reduced modulo their modulus.
    moduli : `tuple` [`int`]
        Modulus of each coordinate, 0 for a free coordinate.
    """

    values: tuple
    moduli: tuple

    def __add__(self, other):
        if self.moduli != other.moduli:
            raise ValueError("Classes belong to different groups.")
        return QuotientClass(
            tuple((a + b) % m if m else a + b for a, b, m in zip(self.values, other.values, self.moduli)),
            self.moduli,
        )

    def __neg__(self):
        return QuotientClass(tuple((-a) % m if m else -a for a, m in zip(self.values, self.moduli)), self.moduli)

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def __str__(self):
        if not self.values:
            return "0"
        parts = [str(v) if m == 0 else f"{v} mod {m}" for v, m in zip(self.values, self.moduli)]
        return parts[0] if len(parts) == 1 else "(" + ", ".join(parts) + ")"


class LatticeQuotient:
    """The quotient ``Z^rank / R`` for a relation lattice ``R``.

    The presentation comes from the Smith normal form ``D = S A T`` of the
    matrix ``A`` whose columns are the relations: the coordinates of
    ``lam`` are the entries of ``S lam``, reduced modulo the invariant
    factors. Unit factors are dropped and the rows of ``S`` belonging to
    free coordinates are sign-normalized so that the result depends only on
    the relations.

    Parameters
    ----------
    rank : `int`
        Rank of the ambient lattice.
    relations : `list` [`tuple` [`int`]]
        Generators of the relation lattice.
    """

    def __init__(self, rank, relations):
        self.rank = rank
        columns = [tuple(int(c) for c in rel) for rel in relations] or [tuple(0 for _ in range(rank))]
        rows = [[columns[j][i] for j in range(len(columns))] for i in range(rank)]
        if rank == 0:
            self.rows = ()
            self.moduli = ()
            self.generators = ()
            return
        smf, left, _ = smith_normal_decomp(DM(rows, ZZ))
        diagonal = smf.to_Matrix()
        left_rows = [[int(c) for c in left.to_Matrix().row(i)] for i in range(rank)]
        factors = [abs(int(diagonal[i, i])) if i < diagonal.cols else 0 for i in range(rank)]

        kept_rows = []
        moduli = []
        for row, factor in zip(left_rows, factors):
            if factor == 0:
                leading = next((c for c in row if c != 0), 1)
                if leading < 0:
                    row = [-c for c in row]
            kept_rows.append(row)
            moduli.append(factor)

        self._left = tuple(tuple(row) for row in kept_rows)
        keep = [i for i, m in enumerate(moduli) if m != 1]
        self.rows = tuple(self._left[i] for i in keep)
        self.moduli = tuple(moduli[i] for i in keep)
        inverse = sympy.Matrix(kept_rows).inv()
        self.generators = tuple(tuple(int(inverse[r, i]) for r in range(rank)) for i in keep)

    @property
    def is_finite(self):
        return all(m != 0 for m in self.moduli)

    @property
    def order(self):
        """Order of the group, or 0 when it is infinite."""
        return math.prod(self.moduli) if self.is_finite else 0

    def project(self, vector):
        """Return the class of an integral vector.

        Parameters
        ----------
        vector : `tuple` [`int`]
            A lattice vector.

        Returns
        -------
        cls : `QuotientClass`
            Its class in the quotient.
        """
        values = []
        for row, modulus in zip(self.rows, self.moduli):
            value = sum(int(a) * int(b) for a, b in zip(row, vector))
            values.append(value % modulus if modulus else value)
        return QuotientClass(tuple(values), self.moduli)

    def zero(self):
        return QuotientClass(tuple(0 for _ in self.moduli), self.moduli)
