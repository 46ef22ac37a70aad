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

"""The extended affine Weyl group ``X_* x| W`` and its alcove combinatorics.

The base alcove is the anti-dominant one, ``-1 < <alpha, v> < 0`` for every
positive root ``alpha``. Lengths, descents and the Bruhat order are all
computed from the integer vector ``m_alpha(x Delta)`` locating the alcove
``x Delta`` between consecutive hyperplanes of each root.
"""

__all__ = [
    "ExtAffWeylElement",
    "AffineRoot",
    "ReducedWord",
    "RootSubsystem",
    "root_subsystem",
    "multiply",
    "invert",
    "m_vector",
    "length",
    "simple_affine_reflections",
    "affine_reflection",
    "reduced_word",
    "omega_part",
    "omega_generators",
    "omega_elements",
    "fundamental_group",
    "bruhat_leq",
    "bruhat_lower_interval",
    "kottwitz_point",
    "kottwitz_group",
    "twisted_power",
]

import dataclasses
import functools
import itertools
import logging

import numpy as np

from .errors import DatumMismatchError, PreconditionError
from .lattice import LatticeQuotient, dot
from .root_datum import BasedRootDatum, FiniteWeylElement, apply_sigma

log = logging.getLogger(__name__)

DESCENT_POLICIES = ("first", "last")
"""Tie-break policies among descents: smallest or largest index of
``S^a`` (`tuple` [`str`])."""


@dataclasses.dataclass(frozen=True, eq=False)
class ExtAffWeylElement:
    """The element ``t^lambda w`` acting on V by ``v -> w(v) + lambda``.

    Parameters
    ----------
    datum : `BasedRootDatum`
        Root datum of the group.
    translation : `tuple` [`int`]
        The cocharacter ``lambda``.
    finite : `FiniteWeylElement`
        The finite part ``w``.
    """

    datum: BasedRootDatum
    translation: tuple
    finite: FiniteWeylElement

    def __post_init__(self):
        translation = tuple(int(c) for c in self.translation)
        if len(translation) != self.datum.rank:
            raise DatumMismatchError(
                f"Translation {translation} does not have rank {self.datum.rank} of {self.datum.label}."
            )
        object.__setattr__(self, "translation", translation)
        object.__setattr__(self, "_hash", hash((translation, self.finite.matrix)))

    @classmethod
    def identity(cls, datum):
        return cls(datum, (0,) * datum.rank, datum.identity_weyl)

    @classmethod
    def from_translation(cls, datum, translation):
        return cls(datum, translation, datum.identity_weyl)

    @classmethod
    def from_finite(cls, finite):
        return cls(finite.datum, (0,) * finite.datum.rank, finite)

    def __eq__(self, other):
        if not isinstance(other, ExtAffWeylElement):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.translation == other.translation
            and self.finite.matrix == other.finite.matrix
            and self.datum == other.datum
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ExtAffWeylElement(t={list(self.translation)}, w_word={list(self.finite.word)})"

    def __mul__(self, other):
        if not isinstance(other, ExtAffWeylElement):
            return NotImplemented
        if other.datum != self.datum:
            raise DatumMismatchError(f"Cannot multiply elements of {self.datum.label} and {other.datum.label}.")
        shifted = self.finite.array.dot(np.array(other.translation, dtype=np.int64))
        translation = tuple(int(a + b) for a, b in zip(self.translation, shifted))
        return ExtAffWeylElement(self.datum, translation, self.finite * other.finite)

    def __pow__(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        result = ExtAffWeylElement.identity(self.datum)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    @functools.cached_property
    def _inverse(self):
        finite_inverse = self.finite.inverse()
        translation = tuple(-int(c) for c in finite_inverse.array.dot(np.array(self.translation, dtype=np.int64)))
        return ExtAffWeylElement(self.datum, translation, finite_inverse)

    def inverse(self):
        return self._inverse

    def act(self, vector):
        """Apply to a rational point of V."""
        return tuple(a + b for a, b in zip(self.finite.act(vector), self.translation))

    def is_identity(self):
        return not any(self.translation) and self.finite.is_identity()

    def sort_key(self):
        """Deterministic order: by length, translation, then finite word."""
        return self.length, self.translation, self.finite.word

    @functools.cached_property
    def m_all(self):
        """``m_alpha(x Delta)`` for every root (negative roots included):
        ``m_alpha < <alpha, v> < m_alpha + 1`` on the open alcove."""
        datum = self.datum
        if not datum.roots:
            return ()
        pairings = datum.roots_array.dot(np.array(self.translation, dtype=np.int64))
        inverse = self.finite.inverse_root_permutation
        npos = datum.n_positive
        return tuple(int(p) - (1 if inverse[i] < npos else 0) for i, p in enumerate(pairings))

    @property
    def m_vector(self):
        return self.m_all[: self.datum.n_positive]

    @functools.cached_property
    def length(self):
        return sum(abs(m + 1) for m in self.m_vector)

    def apply_sigma(self, sigma):
        if sigma.is_identity():
            return self
        return ExtAffWeylElement(self.datum, apply_sigma(sigma, self.translation), apply_sigma(sigma, self.finite))


def multiply(x, y):
    return x * y


def invert(x):
    return x.inverse()


def m_vector(x):
    """Return ``m_alpha(x Delta)`` for the positive roots.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        The element.

    Returns
    -------
    m : `tuple` [`int`]
        Indexed like the positive roots of ``x.datum``.
    """
    return x.m_vector


def length(x):
    """Number of affine root hyperplanes separating the base alcove from
    ``x Delta``."""
    return x.length


@dataclasses.dataclass(frozen=True)
class AffineRoot:
    """The affine function ``v -> <alpha, v> + level``.

    Attributes
    ----------
    datum : `BasedRootDatum`
        The root datum.
    root : `int`
        Index of the gradient ``alpha``.
    level : `int`
        The constant ``k``.
    """

    datum: BasedRootDatum
    root: int
    level: int

    def is_positive(self):
        """Positive means positive on ``-Delta``."""
        if self.datum.is_positive(self.root):
            return self.level >= 0
        return self.level >= 1

    def __neg__(self):
        return AffineRoot(self.datum, self.datum.negative(self.root), -self.level)

    def value(self, vector):
        return dot(self.datum.roots[self.root], vector) + self.level

    def transform(self, x):
        """Return ``x(a) = a o x^-1``: gradient ``w alpha`` and level
        ``k - <w alpha, lambda>``."""
        image = x.finite.root_permutation[self.root]
        return AffineRoot(self.datum, image, self.level - dot(self.datum.roots[image], x.translation))

    def apply_sigma(self, sigma):
        return AffineRoot(self.datum, sigma.root_permutation[self.root], self.level)


def affine_reflection(datum, root, level=0):
    """Return ``s_{alpha,k} = t^{-k alpha^vee} s_alpha``, the reflection in
    the zero set of ``alpha + k``."""
    coroot = datum.coroots[root]
    return ExtAffWeylElement(datum, tuple(-level * c for c in coroot), datum.reflection(root))


@dataclasses.dataclass(frozen=True)
class ReducedWord:
    """``x = s[letters[0]] ... s[letters[-1]] * omega``.

    Attributes
    ----------
    omega : `ExtAffWeylElement`
        The length-zero part.
    letters : `tuple` [`int`]
        Indices into ``S^a`` of the full root system.
    """

    omega: ExtAffWeylElement
    letters: tuple

    def product(self):
        reflections = simple_affine_reflections(self.omega.datum)
        element = ExtAffWeylElement.identity(self.omega.datum)
        for letter in self.letters:
            element = element * reflections[letter]
        return element * self.omega


class RootSubsystem:
    """A symmetric subset of the roots closed enough to be a root system
    itself, with positive system induced from the ambient one.

    The full root system and every Levi subsystem ``Phi_v`` are instances.
    Simple roots are the indecomposable positive roots; each irreducible
    component contributes the affine simple reflection through its
    highest root. The affine simple reflections are ordered as the affine
    reflection of the first component, then the finite simple reflections,
    then the affine reflections of the remaining components.

    Parameters
    ----------
    datum : `BasedRootDatum`
        Ambient root datum.
    roots : `frozenset` [`int`]
        Indices of the subsystem's roots.

    Raises
    ------
    PreconditionError
        If ``roots`` is not symmetric.
    """

    def __init__(self, datum, roots):
        self.datum = datum
        self.roots = frozenset(roots)
        if any(datum.negative(r) not in self.roots for r in self.roots):
            raise PreconditionError(f"Root subset of {datum.label} is not symmetric.")
        self.positive = tuple(sorted(r for r in self.roots if datum.is_positive(r)))
        vectors = datum.roots
        sums = {tuple(a + b for a, b in zip(vectors[i], vectors[j])) for i in self.positive for j in self.positive}
        self.simple = tuple(r for r in self.positive if vectors[r] not in sums)
        self.components = self._find_components()
        self.component_of = {}
        for root in self.positive:
            for c, component in enumerate(self.components):
                if any(dot(vectors[root], datum.coroots[b]) != 0 for b in component):
                    self.component_of[root] = c
                    break
        self.highest_roots = tuple(
            max((r for r in self.positive if self.component_of[r] == c), key=lambda r: datum.heights[r])
            for c in range(len(self.components))
        )

        finite = tuple(ExtAffWeylElement.from_finite(datum.reflection(b)) for b in self.simple)
        affine = tuple(affine_reflection(datum, theta, 1) for theta in self.highest_roots)
        finite_walls = tuple(AffineRoot(datum, b, 0) for b in self.simple)
        affine_walls = tuple(AffineRoot(datum, theta, 1) for theta in self.highest_roots)
        finite_components = tuple(self.component_of[b] for b in self.simple)
        if affine:
            self.affine_simple = affine[:1] + finite + affine[1:]
            self.walls = affine_walls[:1] + finite_walls + affine_walls[1:]
            self.letter_components = (0,) + finite_components + tuple(range(1, len(affine)))
            self.finite_letters = tuple(range(1, 1 + len(finite)))
        else:
            self.affine_simple = ()
            self.walls = ()
            self.letter_components = ()
            self.finite_letters = ()
        self.finite_simple = finite

    def __repr__(self):
        return f"RootSubsystem({self.datum.label}, rank={len(self.simple)})"

    def _find_components(self):
        parent = {b: b for b in self.simple}

        def find(b):
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            return b

        for a, b in itertools.combinations(self.simple, 2):
            if dot(self.datum.roots[a], self.datum.coroots[b]) != 0:
                parent[find(a)] = find(b)
        groups = {}
        for b in self.simple:
            groups.setdefault(find(b), []).append(b)
        return tuple(sorted((tuple(group) for group in groups.values()), key=lambda group: group[0]))

    def length(self, x):
        """Relative length: hyperplanes of this subsystem separating the
        base alcove from ``x Delta``."""
        m = x.m_all
        return sum(abs(m[r] + 1) for r in self.positive)

    def is_finite_subset(self, letters):
        """Whether the parabolic subgroup ``W_J`` of the given affine simple
        reflections is finite: J must omit a letter of every component."""
        chosen = set(letters)
        for c in range(len(self.components)):
            members = {i for i, comp in enumerate(self.letter_components) if comp == c}
            if members <= chosen:
                return False
        return True

    def letter_of(self, element):
        """Index in ``affine_simple`` of a simple affine reflection."""
        try:
            return self.affine_simple.index(element)
        except ValueError:
            raise PreconditionError(f"{element!r} is not a simple affine reflection of {self!r}.")

    def sigma_letters(self, sigma):
        """Permutation of ``affine_simple`` induced by sigma, or `None` if
        sigma does not preserve this subsystem's walls."""
        permutation = []
        for wall in self.walls:
            image = wall.apply_sigma(sigma)
            if image not in self.walls:
                return None
            permutation.append(self.walls.index(image))
        return tuple(permutation)


@functools.lru_cache(maxsize=None)
def root_subsystem(datum, roots=None):
    """Return the (cached) `RootSubsystem` on ``roots``; the full root system
    when ``roots`` is `None`."""
    if roots is None:
        roots = frozenset(range(len(datum.roots)))
    return RootSubsystem(datum, frozenset(roots))


def simple_affine_reflections(datum):
    """The simple affine reflections ``S^a`` of the full root system, each of
    length 1."""
    return root_subsystem(datum).affine_simple


def _left_descents(x, policy="first", system=None):
    system = system or root_subsystem(x.datum)
    reflections = system.affine_simple
    order = range(len(reflections)) if policy == "first" else reversed(range(len(reflections)))
    current = system.length(x)
    for i in order:
        candidate = reflections[i] * x
        if system.length(candidate) < current:
            yield i, candidate


def reduced_word(x, policy="first"):
    """Greedy reduced word by left descents.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        The element.
    policy : `str`, optional
        ``"first"`` takes the smallest descent index, ``"last"`` the
        largest.

    Returns
    -------
    word : `ReducedWord`
        ``x = s[i1] ... s[ik] omega`` with ``k = length(x)``.
    """
    if policy not in DESCENT_POLICIES:
        raise PreconditionError(f"Unknown descent policy {policy!r}.")
    letters = []
    current = x
    while current.length > 0:
        try:
            letter, current = next(_left_descents(current, policy))
        except StopIteration:
            raise PreconditionError(f"{current!r} has positive length and no descent.")
        letters.append(letter)
    return ReducedWord(current, tuple(letters))


def omega_part(x):
    """The length-zero element ``omega`` with ``x in W^a omega``."""
    return reduced_word(x).omega


@functools.lru_cache(maxsize=None)
def fundamental_group(datum):
    """``X_* / Q^vee``, the group of connected components, isomorphic to
    Omega."""
    return LatticeQuotient(datum.rank, [datum.coroots[i] for i in datum.simple_roots])


@functools.lru_cache(maxsize=None)
def omega_generators(datum):
    """Length-zero elements generating Omega, one per invariant factor of
    ``X_* / Q^vee``."""
    quotient = fundamental_group(datum)
    return tuple(omega_part(ExtAffWeylElement.from_translation(datum, g)) for g in quotient.generators)


@functools.lru_cache(maxsize=None)
def omega_elements(datum, bound=2):
    """Elements of Omega.

    Parameters
    ----------
    datum : `BasedRootDatum`
        Root datum.
    bound : `int`, optional
        For infinite Omega, the largest absolute exponent of each free
        generator; torsion generators always run over their full order.

    Returns
    -------
    elements : `tuple` [`ExtAffWeylElement`]
        The whole group when it is finite, otherwise the window.
    """
    quotient = fundamental_group(datum)
    generators = omega_generators(datum)
    ranges = [range(m) if m else range(-bound, bound + 1) for m in quotient.moduli]
    elements = []
    for exponents in itertools.product(*ranges):
        element = ExtAffWeylElement.identity(datum)
        for generator, exponent in zip(generators, exponents):
            element = element * generator**exponent
        elements.append(element)
    return tuple(dict.fromkeys(elements))


@functools.lru_cache(maxsize=None)
def kottwitz_group(datum, sigma):
    """``Omega_<sigma>`` presented as ``X_* / (Q^vee + (1 - sigma) X_*)``."""
    rank = datum.rank
    relations = [datum.coroots[i] for i in datum.simple_roots]
    relations += [tuple(int(i == j) - sigma.matrix[i][j] for i in range(rank)) for j in range(rank)]
    return LatticeQuotient(rank, relations)


def kottwitz_point(x, sigma=None):
    """Image of ``x`` in the sigma-coinvariants of Omega.

    Returns
    -------
    kappa : `QuotientClass`
        Class of the translation part modulo ``Q^vee + (1 - sigma) X_*``.
    """
    sigma = sigma or x.datum.sigma
    return kottwitz_group(x.datum, sigma).project(x.translation)


def _first_descent(y, policy):
    return next(_left_descents(y, policy))[0]


def bruhat_leq(x, y, policy="first"):
    """Bruhat order ``x <= y``.

    Elements with different Omega-parts are incomparable. The decision uses
    the lifting property: for a left descent ``s`` of ``y``,
    ``x <= y`` iff ``min(x, sx) <= sy``.

    Raises
    ------
    DatumMismatchError
        If the elements belong to different data.
    """
    if x.datum != y.datum:
        raise DatumMismatchError(f"Cannot compare elements of {x.datum.label} and {y.datum.label}.")
    return _bruhat_leq(x, y, policy)


@functools.lru_cache(maxsize=1 << 18)
def _bruhat_leq(x, y, policy):
    if x.length > y.length:
        return False
    if y.length == 0:
        return x == y
    s = simple_affine_reflections(y.datum)[_first_descent(y, policy)]
    sx = s * x
    return _bruhat_leq(sx if sx.length < x.length else x, s * y, policy)


@functools.lru_cache(maxsize=4096)
def bruhat_lower_interval(y, policy="first"):
    """All ``x <= y``, as a `frozenset`."""
    if y.length == 0:
        return frozenset((y,))
    s = simple_affine_reflections(y.datum)[_first_descent(y, policy)]
    lower = bruhat_lower_interval(s * y, policy)
    return lower | frozenset(s * z for z in lower)


def twisted_power(x, sigma, n):
    """``(x sigma)^n sigma^-n = x sigma(x) ... sigma^{n-1}(x)``."""
    result = ExtAffWeylElement.identity(x.datum)
    term = x
    for _ in range(n):
        result = result * term
        term = apply_sigma(sigma, term)
    return result
