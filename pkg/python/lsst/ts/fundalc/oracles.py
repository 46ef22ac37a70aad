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

"""Brute-force baselines.

None of these functions call the primary length, Bruhat order, root
subsystem or reduction code: lengths are counted from an explicit interior
point of the base alcove, the simple affine reflections come from highest
roots found by height, and words and closures are built on top of both.
"""

__all__ = [
    "alcove_interior_point",
    "oracle_affine_reflections",
    "length_oracle",
    "oracle_word",
    "bruhat_oracle",
    "class_bfs_oracle",
    "newton_limit_oracle",
]

import collections
import functools
import math
from fractions import Fraction

from .affine_weyl import ExtAffWeylElement, omega_generators
from .errors import CostGuardError, PreconditionError
from .lattice import dot, solve_affine
from .root_datum import apply_sigma

DEFAULT_COST_GUARD = 14


@functools.lru_cache(maxsize=None)
def alcove_interior_point(datum):
    """``-rho^vee / H`` with ``<alpha_i, rho^vee> = 1`` on simple roots and
    ``H`` one more than the largest root height, so that every positive
    root takes the value ``-height / H`` in ``(-1, 0)``."""
    simple = [datum.roots[i] for i in datum.simple_roots]
    if not simple:
        return (Fraction(0),) * datum.rank
    rho_check, _ = solve_affine(simple, [1] * len(simple), datum.rank)
    scale = Fraction(1, 1 + max(datum.heights))
    return tuple(-c * scale for c in rho_check)


@functools.lru_cache(maxsize=None)
def oracle_affine_reflections(datum):
    """``S^a`` rebuilt from the root list alone.

    Simple roots share a component when some positive root involves both;
    each component contributes ``t^{-theta^vee} s_theta`` for its root
    ``theta`` of greatest height. Ordered as the first component's affine
    reflection, the finite simple reflections, then the remaining affine
    reflections.
    """
    supports = [frozenset(i for i, c in enumerate(datum.coefficients[a]) if c) for a in datum.positive_roots]
    components = []
    for i in datum.simple_roots:
        if any(i in component for component in components):
            continue
        component = {i}
        grown = True
        while grown:
            grown = False
            for support in supports:
                if support & component and not support <= component:
                    component |= support
                    grown = True
        components.append(component)
    affine = []
    for component in components:
        inside = [a for a in datum.positive_roots if supports[a] <= component]
        theta = max(inside, key=lambda a: datum.heights[a])
        coroot = datum.coroots[theta]
        affine.append(ExtAffWeylElement(datum, tuple(-c for c in coroot), datum.reflection(theta)))
    finite = [ExtAffWeylElement.from_finite(datum.reflection(i)) for i in datum.simple_roots]
    return tuple(affine[:1] + finite + affine[1:])


def length_oracle(x):
    """Count the integers strictly between ``<alpha, p>`` and
    ``<alpha, x p>`` over the positive roots, for the interior point
    ``p`` of the base alcove."""
    datum = x.datum
    point = alcove_interior_point(datum)
    image = x.act(point)
    total = 0
    for a in datum.positive_roots:
        root = datum.roots[a]
        total += abs(math.floor(dot(root, image)) - math.floor(dot(root, point)))
    return total


def oracle_word(y):
    """A reduced word of ``y`` from left descents measured by
    `length_oracle`.

    Returns
    -------
    letters : `list` [`int`]
        Indices in ``S^a`` with ``y = s[letters[0]] ... omega``.
    omega : `ExtAffWeylElement`
        The length-zero remainder.
    """
    reflections = oracle_affine_reflections(y.datum)
    letters = []
    current = y
    current_length = length_oracle(current)
    while current_length > 0:
        for i, s in enumerate(reflections):
            candidate = s * current
            candidate_length = length_oracle(candidate)
            if candidate_length < current_length:
                letters.append(i)
                current, current_length = candidate, candidate_length
                break
        else:
            raise PreconditionError(f"No descent found for {current!r}.")
    return letters, current


def bruhat_oracle(x, y, guard=DEFAULT_COST_GUARD):
    """Subword test: is ``x`` a subword product of a reduced word of ``y``?

    Raises
    ------
    CostGuardError
        If ``y`` is longer than ``guard``.
    """
    if length_oracle(y) > guard:
        raise CostGuardError(f"Bruhat oracle refuses words longer than {guard}.")
    if length_oracle(x) > length_oracle(y):
        return False
    letters, omega = oracle_word(y)
    reflections = oracle_affine_reflections(y.datum)
    products = {ExtAffWeylElement.identity(y.datum)}
    for letter in letters:
        products |= {p * reflections[letter] for p in products}
    return any(p * omega == x for p in products)


def class_bfs_oracle(x, sigma=None, length_cap=0):
    """Closure of ``{x}`` under ``g -> h g sigma(h)^-1`` for ``h`` in ``S^a``
    and the Omega generators and their inverses, kept within
    ``length_cap``."""
    datum = x.datum
    sigma = sigma or datum.sigma
    conjugators = list(oracle_affine_reflections(datum))
    for omega in omega_generators(datum):
        conjugators += [omega, omega.inverse()]
    pairs = [(h, apply_sigma(sigma, h.inverse())) for h in conjugators]
    found = {x} if length_oracle(x) <= length_cap else set()
    queue = collections.deque(found)
    while queue:
        current = queue.popleft()
        for h, twisted_inverse in pairs:
            target = h * current * twisted_inverse
            if target not in found and length_oracle(target) <= length_cap:
                found.add(target)
                queue.append(target)
    return found


def newton_limit_oracle(x, sigma=None, n=1):
    """``length(x sigma(x) ... sigma^{n-1}(x)) / n`` as a `Fraction`.

    Callers pass multiples of the period of the Newton point of ``x``,
    the powers along which the limit is read off.

    Raises
    ------
    PreconditionError
        If ``n`` is less than 1.
    """
    if n < 1:
        raise PreconditionError(f"The power n must be at least 1, not {n}.")
    sigma = sigma or x.datum.sigma
    power = ExtAffWeylElement.identity(x.datum)
    term = x
    for _ in range(n):
        power = power * term
        term = apply_sigma(sigma, term)
    return Fraction(length_oracle(power), n)
