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

__all__ = [
    "BasedRootDatum",
    "DiagramAutomorphism",
    "FiniteWeylElement",
    "build_root_datum",
    "catalogue_keys",
    "product_datum",
    "dominant_representative",
    "apply_sigma",
    "weyl_group_order",
    "datum_to_dict",
    "datum_from_dict",
    "load_datum",
]

import collections
import dataclasses
import functools
import json
import logging
import math
import pathlib
import re
from fractions import Fraction

import numpy as np
import sympy

from .errors import CatalogueError, DatumMismatchError
from .lattice import dot, fraction_vector, mat_mul, mat_vec, to_fraction

CATALOGUE_KEYS = (
    "GL2",
    "GL3",
    "GL4",
    "SL2",
    "SL3",
    "SL4",
    "PGL2",
    "PGL3",
    "Sp4-sc",
    "Sp4-ad",
    "SO5-sc",
    "SO5-ad",
    "SO7-sc",
    "SO8-sc",
    "SO8-ad",
    "G2-sc",
    "GL3@2",
    "SL3@2",
    "SL4@2",
    "PGL3@2",
    "SO8-sc@2",
    "SO8-sc@3",
)
"""Catalogue keys listed by ``fundalc types list`` (`tuple` [`str`]).

Any other key following the same patterns, or a generic Cartan key such as
``"F4-sc"`` or ``"E6-ad@2"``, is accepted as well.
"""

MAX_SIGMA_ORDER = 12


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _cartan_pairing(letter, n):
    """Return ``P[i][j] = <alpha_i, alpha_j^vee>`` in Bourbaki numbering."""
    valid = {"A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 3, "E": 6 <= n <= 8, "F": n == 4, "G": n == 2}
    if not valid.get(letter, False):
        raise CatalogueError(f"There is no root system of type {letter}{n}.")
    pairing = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j):
        pairing[i][j] = pairing[j][i] = -1

    if letter == "E":
        for i, j in [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, n - 1)]:
            link(i, j)
    elif letter == "D":
        for k in range(n - 2):
            link(k, k + 1)
        link(n - 3, n - 1)
    else:
        for k in range(n - 1):
            link(k, k + 1)
    if letter == "B":
        pairing[n - 2][n - 1] = -2
    elif letter == "C":
        pairing[n - 1][n - 2] = -2
    elif letter == "F":
        pairing[1][2] = -2
    elif letter == "G":
        pairing[1][0] = -3
    return pairing


def _diagram_permutation(letter, n, order):
    """Return the simple-node permutation of a Dynkin diagram automorphism
    of the given order."""
    if order == 1:
        return tuple(range(n))
    if order == 2 and letter == "A" and n >= 2:
        return tuple(n - 1 - i for i in range(n))
    if order == 2 and letter == "D" and n >= 4:
        return tuple(range(n - 2)) + (n - 1, n - 2)
    if order == 3 and letter == "D" and n == 4:
        return (2, 1, 3, 0)
    if order == 2 and letter == "E" and n == 6:
        return (5, 1, 4, 3, 2, 0)
    raise CatalogueError(f"Type {letter}{n} has no diagram automorphism of order {order}.")


def _symmetrizer(pairing):
    """Return c with ``c_i P[i][j] = c_j P[j][i]``, normalized to minimum 1
    on every connected component."""
    n = len(pairing)
    scale = [None] * n
    for start in range(n):
        if scale[start] is not None:
            continue
        scale[start] = Fraction(1)
        component = [start]
        queue = collections.deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and pairing[i][j] != 0 and scale[j] is None:
                    scale[j] = scale[i] * pairing[i][j] / pairing[j][i]
                    component.append(j)
                    queue.append(j)
        smallest = min(scale[i] for i in component)
        for i in component:
            scale[i] /= smallest
    return scale


def _cartan_datum(letter, n, lattice, order, label):
    pairing = _cartan_pairing(letter, n)
    scale = _symmetrizer(pairing)
    gram = [[scale[i] * pairing[i][j] for j in range(n)] for i in range(n)]
    if lattice == "sc":
        simple_roots = [tuple(row) for row in pairing]
        simple_coroots = list(_identity(n))
        inner = gram
    else:
        simple_roots = list(_identity(n))
        simple_coroots = [tuple(pairing[k][j] for k in range(n)) for j in range(n)]
        # Gram matrix in the fundamental coweight basis: P^-T G P^-1.
        inverse = np.array(_rational_inverse(pairing), dtype=object)
        inner = inverse.T.dot(np.array(gram, dtype=object)).dot(inverse).tolist()
    permutation = _diagram_permutation(letter, n, order)
    sigma = tuple(tuple(int(permutation[j] == i) for j in range(n)) for i in range(n))
    return BasedRootDatum(label, simple_roots, simple_coroots, inner, sigma, ((letter, n),))


def _gl_datum(n, order, label):
    if n < 2:
        raise CatalogueError("GL_n needs n >= 2.")
    simple = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
    if order == 1:
        sigma = _identity(n)
    elif order == 2:
        sigma = tuple(tuple(-int(i + j == n - 1) for j in range(n)) for i in range(n))
    else:
        raise CatalogueError(f"GL{n} has no diagram automorphism of order {order}.")
    return BasedRootDatum(label, simple, simple, _identity(n), sigma, (("A", n - 1),))


def _rational_inverse(matrix):
    inverse = sympy.Matrix(matrix).inv()
    return [[to_fraction(inverse[i, j]) for j in range(inverse.cols)] for i in range(inverse.rows)]


_KEY_PATTERNS = (
    (re.compile(r"^(GL|SL|PGL)(\d+)$"), "linear"),
    (re.compile(r"^(Sp|SO)(\d+)-(sc|ad)$"), "classical"),
    (re.compile(r"^([A-G])(\d+)-(sc|ad)$"), "cartan"),
)


@functools.lru_cache(maxsize=None)
def build_root_datum(type_spec):
    """Build a catalogue root datum.

    Parameters
    ----------
    type_spec : `str`
        Catalogue key such as ``"GL3"``, ``"Sp4-sc"``, ``"SO8-ad@3"``,
        ``"E6-sc"``, or the path of a JSON file written by `datum_to_dict`.

    Returns
    -------
    datum : `BasedRootDatum`
        The datum; the same key always returns the same object.

    Raises
    ------
    CatalogueError
        If the key is unknown, or the lattice or twist does not fit the
        type.
    """
    if type_spec.endswith(".json"):
        return load_datum(type_spec)
    base, _, twist = type_spec.partition("@")
    if twist and not twist.isdigit():
        raise CatalogueError(f"Bad twist suffix in {type_spec!r}.")
    order = int(twist) if twist else 1
    for pattern, kind in _KEY_PATTERNS:
        match = pattern.match(base)
        if match is None:
            continue
        if kind == "linear":
            family, n = match.group(1), int(match.group(2))
            if family == "GL":
                return _gl_datum(n, order, type_spec)
            if n < 2:
                raise CatalogueError(f"{family}{n} is not a semisimple group.")
            lattice = "sc" if family == "SL" else "ad"
            return _cartan_datum("A", n - 1, lattice, order, type_spec)
        if kind == "classical":
            family, m, lattice = match.group(1), int(match.group(2)), match.group(3)
            if family == "Sp":
                if m % 2 or m < 4:
                    raise CatalogueError(f"Sp{m} needs an even size of at least 4.")
                return _cartan_datum("C", m // 2, lattice, order, type_spec)
            if m % 2:
                if m < 5:
                    raise CatalogueError(f"SO{m} needs size at least 5.")
                return _cartan_datum("B", (m - 1) // 2, lattice, order, type_spec)
            if m < 6:
                raise CatalogueError(f"SO{m} needs size at least 6.")
            return _cartan_datum("D", m // 2, lattice, order, type_spec)
        letter, n, lattice = match.group(1), int(match.group(2)), match.group(3)
        return _cartan_datum(letter, n, lattice, order, type_spec)
    if re.match(r"^(GL|SL|PGL)\d+-(sc|ad)", base):
        raise CatalogueError(f"{type_spec!r}: GL/SL/PGL keys fix the lattice and take no -sc/-ad suffix.")
    if re.match(r"^(Sp|SO|[A-G])\d+$", base):
        raise CatalogueError(f"{type_spec!r}: a lattice choice -sc or -ad is required.")
    raise CatalogueError(f"Unknown catalogue key {type_spec!r}.")


def catalogue_keys():
    return CATALOGUE_KEYS


def weyl_group_order(cartan_type):
    """Order of the Weyl group from the classical product formulas.

    Parameters
    ----------
    cartan_type : `tuple` [`tuple` [`str`, `int`]]
        Irreducible components as ``(letter, rank)`` pairs.

    Returns
    -------
    order : `int`
    """
    exceptional = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}
    order = 1
    for letter, n in cartan_type:
        if letter == "A":
            order *= math.factorial(n + 1)
        elif letter in "BC":
            order *= 2**n * math.factorial(n)
        elif letter == "D":
            order *= 2 ** (n - 1) * math.factorial(n)
        else:
            order *= exceptional[(letter, n)]
    return order


@dataclasses.dataclass(frozen=True, eq=False)
class FiniteWeylElement:
    """Element of the finite Weyl group W, as an integer matrix acting on
    the cocharacter lattice.

    Parameters
    ----------
    datum : `BasedRootDatum`
        The root datum the element belongs to.
    matrix : `tuple` [`tuple` [`int`]]
        Matrix of the action on cocharacters (columns are images of the
        basis vectors).
    """

    datum: "BasedRootDatum"
    matrix: tuple

    def __eq__(self, other):
        if not isinstance(other, FiniteWeylElement):
            return NotImplemented
        return self.matrix == other.matrix and self.datum == other.datum

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"FiniteWeylElement({self.datum.label}, word={self.word})"

    @functools.cached_property
    def array(self):
        return np.array(self.matrix, dtype=np.int64).reshape(self.datum.rank, self.datum.rank)

    @functools.cached_property
    def inverse_root_permutation(self):
        """Root indices of ``w^-1(alpha)``: characters transform as the row
        vector ``alpha @ M``."""
        images = self.datum.roots_array.dot(self.array)
        index = self.datum.root_index
        return tuple(index[tuple(int(c) for c in row)] for row in images)

    @functools.cached_property
    def root_permutation(self):
        """Root indices of ``w(alpha)``."""
        permutation = [0] * len(self.inverse_root_permutation)
        for i, j in enumerate(self.inverse_root_permutation):
            permutation[j] = i
        return tuple(permutation)

    @functools.cached_property
    def length(self):
        npos = self.datum.n_positive
        return sum(1 for j in self.root_permutation[:npos] if j >= npos)

    @functools.cached_property
    def word(self):
        """Reduced word as a tuple of simple-reflection positions (0-based),
        ``w = s[word[0]] s[word[1]] ...``."""
        letters = []
        current = self
        npos = self.datum.n_positive
        while not current.is_identity():
            inverse = current.inverse_root_permutation
            position = next(p for p in range(self.datum.n_simple) if inverse[p] >= npos)
            letters.append(position)
            current = self.datum.simple_reflections[position] * current
        return tuple(letters)

    def is_identity(self):
        return self.matrix == self.datum.identity_weyl.matrix

    def __mul__(self, other):
        if not isinstance(other, FiniteWeylElement):
            return NotImplemented
        if other.datum != self.datum:
            raise DatumMismatchError(f"Cannot multiply elements of {self.datum.label} and {other.datum.label}.")
        product = self.array.dot(other.array)
        return FiniteWeylElement(self.datum, tuple(tuple(int(c) for c in row) for row in product))

    @functools.cached_property
    def _inverse(self):
        # w preserves the inner product B, so w^-1 = B^-1 w^T B.
        product = self.datum.gram_inverse.dot(self.array.T.astype(object)).dot(self.datum.gram)
        return FiniteWeylElement(self.datum, tuple(tuple(int(c) for c in row) for row in product.tolist()))

    def inverse(self):
        return self._inverse

    def act(self, vector):
        """Apply to a cocharacter vector (integral or rational)."""
        return mat_vec(self.matrix, vector)

    def act_on_root(self, root):
        """Return the index of ``w(alpha)`` for a root index."""
        return self.root_permutation[root]


@dataclasses.dataclass(frozen=True, eq=False)
class DiagramAutomorphism:
    """Linear automorphism of the cocharacter lattice permuting the simple
    roots; plays the role of the Frobenius.

    Parameters
    ----------
    datum : `BasedRootDatum`
        The datum it acts on.
    matrix : `tuple` [`tuple` [`int`]]
        Action on cocharacters.
    """

    datum: "BasedRootDatum"
    matrix: tuple

    def __eq__(self, other):
        if not isinstance(other, DiagramAutomorphism):
            return NotImplemented
        return self.matrix == other.matrix and self.datum == other.datum

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"DiagramAutomorphism({self.datum.label}, matrix={self.matrix})"

    @functools.cached_property
    def array(self):
        return np.array(self.matrix, dtype=np.int64).reshape(self.datum.rank, self.datum.rank)

    @functools.cached_property
    def order(self):
        identity = _identity(self.datum.rank)
        power = self.matrix
        for k in range(1, MAX_SIGMA_ORDER + 1):
            if power == identity:
                return k
            power = mat_mul(power, self.matrix)
        raise CatalogueError(
            f"Diagram automorphism {self.matrix} of {self.datum.label} does not have finite order."
        )

    @functools.cached_property
    def inverse_matrix(self):
        power = _identity(self.datum.rank)
        for _ in range(self.order - 1):
            power = mat_mul(power, self.matrix)
        return power

    @functools.cached_property
    def root_permutation(self):
        """Root indices of ``sigma(alpha)``; characters transform by the
        contragredient ``alpha @ Sigma^-1``."""
        images = self.datum.roots_array.dot(np.array(self.inverse_matrix, dtype=np.int64))
        index = self.datum.root_index
        try:
            return tuple(index[tuple(int(c) for c in row)] for row in images)
        except KeyError:
            raise CatalogueError(f"sigma does not permute the roots of {self.datum.label}.")

    @property
    def simple_permutation(self):
        return self.root_permutation[: self.datum.n_simple]

    def is_identity(self):
        return self.matrix == _identity(self.datum.rank)

    def power(self, k):
        """Return sigma^k (k may be negative)."""
        k %= self.order
        matrix = _identity(self.datum.rank)
        for _ in range(k):
            matrix = mat_mul(matrix, self.matrix)
        return DiagramAutomorphism(self.datum, matrix)

    def validate(self):
        """Check the automorphism axioms against the datum.

        Raises
        ------
        CatalogueError
            If an axiom fails.
        """
        datum = self.datum
        permutation = self.root_permutation
        for i, j in enumerate(permutation):
            image = mat_vec(self.matrix, datum.coroots[i])
            if tuple(image) != datum.coroots[j]:
                raise CatalogueError("sigma does not match roots and coroots.")
        if any(j >= datum.n_simple for j in self.simple_permutation):
            raise CatalogueError("sigma does not preserve the simple roots.")
        gram = np.array(datum.inner_product, dtype=object)
        sigma = np.array(self.matrix, dtype=object)
        if sigma.T.dot(gram).dot(sigma).tolist() != gram.tolist():
            raise CatalogueError("sigma does not preserve the inner product.")


class BasedRootDatum:
    """Based root datum on a cocharacter lattice ``Z^rank`` with a diagram
    automorphism.

    Characters pair with cocharacters by the dot product in the fixed basis.
    Roots are ordered with the positive roots first, by height and then by
    simple-root coefficients, followed by their negatives in the same order;
    the first ``n_simple`` roots are the simple roots.

    Parameters
    ----------
    label : `str`
        Type tag, for example ``"GL3"`` or ``"Sp4-sc"``.
    simple_roots : `list` [`tuple` [`int`]]
        Simple roots as character vectors.
    simple_coroots : `list` [`tuple` [`int`]]
        Matching simple coroots as cocharacter vectors.
    inner_product : `list` [`list`]
        Rational Gram matrix of the W-invariant form on cocharacters.
    sigma_matrix : `tuple` [`tuple` [`int`]], optional
        Diagram automorphism; identity when omitted.
    cartan_type : `tuple` [`tuple` [`str`, `int`]], optional
        Cartan type of the irreducible components, when known.

    Raises
    ------
    CatalogueError
        If the data violate a root datum axiom.
    """

    def __init__(self, label, simple_roots, simple_coroots, inner_product, sigma_matrix=None, cartan_type=()):
        self.log = logging.getLogger(type(self).__name__)
        self.label = label
        self.rank = len(inner_product)
        self.cartan_type = tuple(tuple(t) for t in cartan_type)
        self.inner_product = tuple(fraction_vector(row) for row in inner_product)
        simple_roots = [tuple(int(c) for c in a) for a in simple_roots]
        simple_coroots = [tuple(int(c) for c in a) for a in simple_coroots]
        if len(simple_roots) != len(simple_coroots):
            raise CatalogueError("Simple roots and coroots do not match up.")
        if any(len(v) != self.rank for v in simple_roots + simple_coroots):
            raise CatalogueError("Root vectors do not match the lattice rank.")
        self.n_simple = len(simple_roots)
        self._generate_roots(simple_roots, simple_coroots)

        self.roots_array = np.array(self.roots, dtype=np.int64).reshape(len(self.roots), self.rank)
        self.coroots_array = np.array(self.coroots, dtype=np.int64).reshape(len(self.roots), self.rank)
        self.root_index = {root: i for i, root in enumerate(self.roots)}
        self.coroot_index = {coroot: i for i, coroot in enumerate(self.coroots)}
        # Sum of the positive roots, so that <2rho, v> = dot(rho2, v).
        self.rho2 = tuple(int(c) for c in self.roots_array[: self.n_positive].sum(axis=0, dtype=np.int64))
        self.gram = np.array(self.inner_product, dtype=object)
        self.gram_inverse = np.array(_rational_inverse(self.inner_product), dtype=object)

        self.identity_weyl = FiniteWeylElement(self, _identity(self.rank))
        self.simple_reflections = tuple(self.reflection(i) for i in range(self.n_simple))
        if sigma_matrix is None:
            sigma_matrix = _identity(self.rank)
        self.sigma = DiagramAutomorphism(self, tuple(tuple(int(c) for c in row) for row in sigma_matrix))
        self._key = (self.label, self.rank, self.roots, self.coroots, self.sigma.matrix)
        self._hash = hash(self._key)
        self.validate()

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BasedRootDatum):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BasedRootDatum({self.label!r})"

    def _generate_roots(self, simple_roots, simple_coroots):
        n = self.n_simple
        found = {}
        queue = collections.deque()
        for i in range(n):
            coefficients = tuple(int(j == i) for j in range(n))
            found[simple_roots[i]] = (simple_coroots[i], coefficients)
            queue.append((simple_roots[i], simple_coroots[i], coefficients))
        while queue:
            root, coroot, coefficients = queue.popleft()
            for i in range(n):
                p = dot(root, simple_coroots[i])
                q = dot(simple_roots[i], coroot)
                new_root = tuple(a - p * b for a, b in zip(root, simple_roots[i]))
                if new_root in found:
                    continue
                new_coroot = tuple(a - q * b for a, b in zip(coroot, simple_coroots[i]))
                new_coefficients = tuple(c - p * int(j == i) for j, c in enumerate(coefficients))
                found[new_root] = (new_coroot, new_coefficients)
                queue.append((new_root, new_coroot, new_coefficients))
                if len(found) > 1000:
                    raise CatalogueError(f"{self.label}: the root system is not finite.")

        positive = []
        for root, (coroot, coefficients) in found.items():
            if all(c >= 0 for c in coefficients):
                positive.append((sum(coefficients), tuple(-c for c in coefficients), root, coroot, coefficients))
            elif not all(c <= 0 for c in coefficients):
                raise CatalogueError(f"{self.label}: root {root} is neither positive nor negative.")
        positive.sort()
        self.n_positive = len(positive)
        if 2 * self.n_positive != len(found):
            raise CatalogueError(f"{self.label}: the root system is not symmetric.")
        self.roots = tuple(p[2] for p in positive) + tuple(tuple(-c for c in p[2]) for p in positive)
        self.coroots = tuple(p[3] for p in positive) + tuple(tuple(-c for c in p[3]) for p in positive)
        self.coefficients = tuple(p[4] for p in positive) + tuple(tuple(-c for c in p[4]) for p in positive)
        self.heights = tuple(sum(c) for c in self.coefficients)
        for root, coroot in zip(self.roots, self.coroots):
            if found.get(root, (None,))[0] != coroot:
                raise CatalogueError(f"{self.label}: coroot of {root} is inconsistent.")

    def validate(self):
        """Check the root datum and automorphism invariants.

        Raises
        ------
        CatalogueError
            If any invariant fails.
        """
        if self.roots:
            pairings = self.roots_array.dot(self.coroots_array.T)
            if any(pairings[i, i] != 2 for i in range(len(self.roots))):
                raise CatalogueError(f"{self.label}: <alpha, alpha^vee> != 2.")
            coroots = self.coroots_array.astype(object)
            coroot_gram = coroots.dot(self.gram).dot(coroots.T)
            for i in range(len(self.roots)):
                for j in range(len(self.roots)):
                    if pairings[i, j] * coroot_gram[i, i] != 2 * coroot_gram[i, j]:
                        raise CatalogueError(f"{self.label}: inner product is not compatible with the pairing.")
            # Closure under reflections: s_alpha(beta) = beta - <beta, alpha^vee> alpha.
            for i, root in enumerate(self.roots_array):
                reflected = self.roots_array - np.outer(pairings[:, i], root)
                if any(tuple(int(c) for c in row) not in self.root_index for row in reflected):
                    raise CatalogueError(f"{self.label}: roots are not closed under reflections.")
        self.sigma.validate()

    @property
    def positive_roots(self):
        return range(self.n_positive)

    @property
    def simple_roots(self):
        return range(self.n_simple)

    def negative(self, root):
        """Index of ``-alpha``."""
        return root + self.n_positive if root < self.n_positive else root - self.n_positive

    def is_positive(self, root):
        return root < self.n_positive

    def pairing(self, character, cocharacter):
        return dot(character, cocharacter)

    def inner(self, u, v):
        return dot(u, self.gram.dot(np.array(v, dtype=object)).tolist()) if self.rank else 0

    def reflection(self, root):
        """Return the reflection ``s_alpha`` as a `FiniteWeylElement`."""
        alpha = self.roots[root]
        coroot = self.coroots[root]
        matrix = tuple(
            tuple(int(i == j) - coroot[i] * alpha[j] for j in range(self.rank)) for i in range(self.rank)
        )
        return FiniteWeylElement(self, matrix)

    @functools.cached_property
    def weyl_group(self):
        """All elements of W, by breadth-first search over simple
        reflections, ordered by length then discovery."""
        seen = {self.identity_weyl}
        order = [self.identity_weyl]
        frontier = [self.identity_weyl]
        while frontier:
            next_frontier = []
            for w in frontier:
                for s in self.simple_reflections:
                    u = s * w
                    if u not in seen:
                        seen.add(u)
                        order.append(u)
                        next_frontier.append(u)
            frontier = next_frontier
        return tuple(order)

    def weyl_element(self, word):
        """Product of simple reflections given by 0-based positions."""
        element = self.identity_weyl
        for position in word:
            element = element * self.simple_reflections[position]
        return element

    def root_pairings(self, vector):
        """``<alpha, v>`` for every root, as a tuple."""
        return tuple(dot(root, vector) for root in self.roots)


def dominant_representative(datum, vector):
    """Return the dominant point of the W-orbit of ``vector``.

    Parameters
    ----------
    datum : `BasedRootDatum`
        The root datum.
    vector : `tuple`
        Rational cocharacter vector.

    Returns
    -------
    v_dom : `tuple` [`Fraction`]
        The dominant representative.
    w : `FiniteWeylElement`
        An element with ``w(vector) == v_dom``.
    """
    current = tuple(to_fraction(c) for c in vector)
    w = datum.identity_weyl
    while True:
        for position in datum.simple_roots:
            value = dot(datum.roots[position], current)
            if value < 0:
                coroot = datum.coroots[position]
                current = tuple(c - value * a for c, a in zip(current, coroot))
                w = datum.simple_reflections[position] * w
                break
        else:
            return current, w


def apply_sigma(sigma, x):
    """Apply the diagram automorphism to a cocharacter vector, a root index,
    a `FiniteWeylElement` or an ``ExtAffWeylElement``.

    Raises
    ------
    DatumMismatchError
        If ``x`` belongs to another datum.
    """
    return _sigma_image(x, sigma)


@functools.singledispatch
def _sigma_image(x, sigma):
    apply = getattr(x, "apply_sigma", None)
    if apply is None:
        raise TypeError(f"Cannot apply sigma to {type(x).__name__}.")
    _check_datum(sigma, x)
    return apply(sigma)


@_sigma_image.register(bool)
def _(x, sigma):
    raise TypeError("Cannot apply sigma to a boolean.")


@_sigma_image.register(int)
def _(x, sigma):
    if not 0 <= x < len(sigma.datum.roots):
        raise DatumMismatchError(f"Root index {x} out of range for {sigma.datum.label}.")
    return sigma.root_permutation[x]


@_sigma_image.register(tuple)
def _(x, sigma):
    if len(x) != sigma.datum.rank:
        raise DatumMismatchError(f"Vector {x} does not have rank {sigma.datum.rank}.")
    return mat_vec(sigma.matrix, x)


@_sigma_image.register(FiniteWeylElement)
def _(x, sigma):
    _check_datum(sigma, x)
    if sigma.is_identity():
        return x
    product = mat_mul(mat_mul(sigma.matrix, x.matrix), sigma.inverse_matrix)
    return FiniteWeylElement(x.datum, tuple(tuple(int(c) for c in row) for row in product))


def _check_datum(sigma, x):
    if x.datum != sigma.datum:
        raise DatumMismatchError(f"sigma of {sigma.datum.label} applied to an element of {x.datum.label}.")


def product_datum(first, second):
    """Componentwise product of two root data.

    Parameters
    ----------
    first, second : `BasedRootDatum`
        The factors.

    Returns
    -------
    datum : `BasedRootDatum`
        Lattice ``X_1 + X_2``; sigma acts componentwise.
    """
    r1, r2 = first.rank, second.rank

    def pad(vector, before, after):
        return (0,) * before + tuple(vector) + (0,) * after

    simple_roots = [pad(first.roots[i], 0, r2) for i in first.simple_roots]
    simple_roots += [pad(second.roots[i], r1, 0) for i in second.simple_roots]
    simple_coroots = [pad(first.coroots[i], 0, r2) for i in first.simple_roots]
    simple_coroots += [pad(second.coroots[i], r1, 0) for i in second.simple_roots]
    inner = [pad(row, 0, r2) for row in first.inner_product] + [pad(row, r1, 0) for row in second.inner_product]
    sigma = [pad(row, 0, r2) for row in first.sigma.matrix] + [pad(row, r1, 0) for row in second.sigma.matrix]
    return BasedRootDatum(
        f"{first.label}x{second.label}",
        simple_roots,
        simple_coroots,
        inner,
        sigma,
        first.cartan_type + second.cartan_type,
    )


def datum_to_dict(datum):
    """Serialize a datum to a JSON-compatible dictionary."""
    return {
        "label": datum.label,
        "basis": [[int(i == j) for j in range(datum.rank)] for i in range(datum.rank)],
        "simple_roots": [list(datum.roots[i]) for i in datum.simple_roots],
        "simple_coroots": [list(datum.coroots[i]) for i in datum.simple_roots],
        "roots": [list(r) for r in datum.roots],
        "coroots": [list(c) for c in datum.coroots],
        "pairing": [[int(c) for c in row] for row in datum.roots_array.dot(datum.coroots_array.T)]
        if datum.roots
        else [],
        "inner_product": [[str(c) for c in row] for row in datum.inner_product],
        "sigma": [list(row) for row in datum.sigma.matrix],
        "cartan_type": [list(t) for t in datum.cartan_type],
    }


def datum_from_dict(data):
    """Build a datum from `datum_to_dict` output (or a hand-written file).

    Only ``label``, ``simple_roots``, ``simple_coroots`` and
    ``inner_product`` are required; the full root list, when present, must
    agree with the closure of the simple roots.

    Raises
    ------
    CatalogueError
        If the description is incomplete or violates an invariant.
    """
    try:
        datum = BasedRootDatum(
            data["label"],
            data["simple_roots"],
            data["simple_coroots"],
            [[to_fraction(c) for c in row] for row in data["inner_product"]],
            data.get("sigma"),
            data.get("cartan_type", ()),
        )
    except KeyError as e:
        raise CatalogueError(f"Root datum description lacks {e}.")
    except (TypeError, ValueError) as e:
        raise CatalogueError(f"Malformed root datum description: {e}")
    if "roots" in data and sorted(tuple(r) for r in data["roots"]) != sorted(datum.roots):
        raise CatalogueError(f"{datum.label}: listed roots differ from the reflection closure.")
    return datum


def load_datum(path):
    path = pathlib.Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise CatalogueError(f"Cannot read root datum file {path}: {e}")
    return datum_from_dict(data)
