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

"""Deligne-Lusztig reduction of sigma-conjugacy classes.

A reduction step replaces ``x`` by ``s x sigma(s)`` for a simple
reflection ``s`` whenever the length does not increase. Breadth-first
search over such steps reaches the elements of minimal length, and those
decompose as a straight element times an element of a finite parabolic
subgroup.
"""

__all__ = [
    "LENGTH_PRESERVING",
    "LENGTH_DROPPING",
    "ReductionStep",
    "ReductionResult",
    "ReductionCertificate",
    "StraightClass",
    "sigma_conjugate_simple",
    "reduce_to_minimal",
    "length_preserving_class",
    "approx_equiv",
    "min_coset_representative",
    "in_parabolic",
    "normalizes",
    "sigma_letter_permutation",
    "straight_decomposition",
    "parabolic_decomposition",
    "has_regular_point",
    "certificate_violations",
    "conjugation_closure",
    "straight_class_reps",
]

import collections
import dataclasses
import itertools
import logging

import sympy
from sympy.solvers.simplex import InfeasibleLPError, lpmax

from .affine_weyl import ExtAffWeylElement, bruhat_leq, omega_generators, root_subsystem
from .enumeration import enumerate_elements
from .errors import CertificateError, PreconditionError
from .lattice import dot, to_fraction
from .newton import is_straight, newton_point
from .root_datum import apply_sigma

log = logging.getLogger(__name__)

LENGTH_PRESERVING = "length-preserving"
LENGTH_DROPPING = "length-dropping"

AFFINE_GENERATORS = "affine"
"""Reduce with all of ``S^a`` (`str`)."""
FINITE_GENERATORS = "finite"
"""Reduce with the finite simple reflections ``S`` only (`str`)."""


@dataclasses.dataclass(frozen=True)
class ReductionStep:
    """One step ``target = s source sigma(s)``.

    Attributes
    ----------
    letter : `int`
        Index of ``s`` in ``S^a``.
    source : `ExtAffWeylElement`
    target : `ExtAffWeylElement`
    kind : `str`
        `LENGTH_PRESERVING` or `LENGTH_DROPPING`.
    """

    letter: int
    source: ExtAffWeylElement
    target: ExtAffWeylElement
    kind: str


@dataclasses.dataclass(frozen=True)
class ReductionResult:
    """Outcome of `reduce_to_minimal`.

    Attributes
    ----------
    minimal : `tuple` [`ExtAffWeylElement`]
        Reached elements of minimal length, sorted.
    paths : `dict`
        Maps every reached element to the steps leading to it.
    """

    minimal: tuple
    paths: dict

    @property
    def reached(self):
        return tuple(sorted(self.paths, key=lambda x: x.sort_key()))


@dataclasses.dataclass(frozen=True)
class ReductionCertificate:
    """A reduction ``source ->_sigma minimal = x u``.

    Attributes
    ----------
    source : `ExtAffWeylElement`
        The reduced element.
    path : `tuple` [`ReductionStep`]
        Steps from ``source`` to ``minimal``.
    minimal : `ExtAffWeylElement`
        The element ``w'`` reached.
    x : `ExtAffWeylElement`
        Minimal in ``W_J x`` and in ``x W_sigma(J)``, with
        ``x sigma(J) x^-1 = J``; straight for `straight_decomposition`.
    J : `tuple` [`int`]
        Indices in ``S^a``.
    u : `ExtAffWeylElement`
        ``x^-1 w'``, an element of ``W_sigma(J)``.
    has_regular_point : `bool` or `None`
        Whether ``V_w'`` meets the closed base alcove in a regular point;
        `None` when not computed.
    """

    source: ExtAffWeylElement
    path: tuple
    minimal: ExtAffWeylElement
    x: ExtAffWeylElement
    J: tuple
    u: ExtAffWeylElement
    has_regular_point: object = None


@dataclasses.dataclass(frozen=True)
class StraightClass:
    """A group of straight elements joined by sigma-conjugation.

    Attributes
    ----------
    representative : `ExtAffWeylElement`
        Least member by `ExtAffWeylElement.sort_key`.
    nu_dom : `tuple` [`Fraction`]
    kappa : `QuotientClass`
    members : `tuple` [`ExtAffWeylElement`]
        Straight elements of the enumeration in the group.
    """

    representative: ExtAffWeylElement
    nu_dom: tuple
    kappa: object
    members: tuple


def sigma_conjugate_simple(x, s, sigma=None):
    """Return ``s x sigma(s)``."""
    sigma = sigma or x.datum.sigma
    return s * x * apply_sigma(sigma, s)


def _letters(datum, generators):
    system = root_subsystem(datum)
    if generators == AFFINE_GENERATORS:
        return tuple(range(len(system.affine_simple)))
    if generators == FINITE_GENERATORS:
        return system.finite_letters
    raise PreconditionError(f"Unknown generator set {generators!r}.")


def _search(x, sigma, letters, accept):
    reflections = root_subsystem(x.datum).affine_simple
    twisted = {letter: apply_sigma(sigma, reflections[letter]) for letter in letters}
    parent = {x: None}
    queue = collections.deque([x])
    while queue:
        current = queue.popleft()
        for letter in letters:
            target = reflections[letter] * current * twisted[letter]
            if target in parent or not accept(current, target):
                continue
            kind = LENGTH_PRESERVING if target.length == current.length else LENGTH_DROPPING
            parent[target] = ReductionStep(letter, current, target, kind)
            queue.append(target)
    return {element: _path(parent, element) for element in parent}


def _path(parent, element):
    steps = []
    while parent[element] is not None:
        step = parent[element]
        steps.append(step)
        element = step.source
    return tuple(reversed(steps))


def reduce_to_minimal(x, sigma=None, generators=AFFINE_GENERATORS):
    """Breadth-first search over non-increasing reduction steps.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        Starting element.
    sigma : `DiagramAutomorphism`, optional
        Frobenius twist.
    generators : `str`, optional
        `AFFINE_GENERATORS` or `FINITE_GENERATORS`.

    Returns
    -------
    result : `ReductionResult`
    """
    sigma = sigma or x.datum.sigma
    paths = _search(x, sigma, _letters(x.datum, generators), lambda a, b: b.length <= a.length)
    shortest = min(element.length for element in paths)
    minimal = tuple(sorted((e for e in paths if e.length == shortest), key=lambda e: e.sort_key()))
    log.debug(f"Reduction of {x!r} reached {len(paths)} elements; minimal length {shortest}.")
    return ReductionResult(minimal, paths)


def length_preserving_class(x, sigma=None, generators=AFFINE_GENERATORS):
    """The ``~_sigma`` class of ``x`` with a path to each member.

    Returns
    -------
    paths : `dict`
        Maps each member to its steps from ``x``.
    """
    sigma = sigma or x.datum.sigma
    return _search(x, sigma, _letters(x.datum, generators), lambda a, b: b.length == a.length)


def approx_equiv(x, y, sigma=None):
    """``x ~_sigma y``: equal length and joined by length-preserving steps."""
    if x.length != y.length:
        return False
    return y in length_preserving_class(x, sigma)


def min_coset_representative(element, letters):
    """Minimal element of ``element W_K`` for the simple reflections
    ``letters``, by greedy right descents."""
    reflections = root_subsystem(element.datum).affine_simple
    descended = True
    while descended:
        descended = False
        for letter in letters:
            candidate = element * reflections[letter]
            if candidate.length < element.length:
                element = candidate
                descended = True
                break
    return element


def _is_left_minimal(element, letters):
    reflections = root_subsystem(element.datum).affine_simple
    return all((reflections[letter] * element).length > element.length for letter in letters)


def in_parabolic(element, letters):
    """Whether ``element`` lies in ``W_K`` for the given simple reflections."""
    return min_coset_representative(element, letters).is_identity()


def normalizes(x, source_letters, target_letters):
    reflections = root_subsystem(x.datum).affine_simple
    conjugated = {x * reflections[letter] * x.inverse() for letter in source_letters}
    return conjugated == {reflections[letter] for letter in target_letters}


def sigma_letter_permutation(datum, sigma):
    permutation = root_subsystem(datum).sigma_letters(sigma)
    if permutation is None:
        raise PreconditionError(f"sigma does not permute the simple affine reflections of {datum.label}.")
    return permutation


def _decompose(candidates, sigma, letters, require_straight, left_letters):
    datum = candidates[0][0].datum
    system = root_subsystem(datum)
    permutation = sigma_letter_permutation(datum, sigma)
    for minimal, path in candidates:
        for size in range(len(letters) + 1):
            for subset in itertools.combinations(letters, size):
                if not system.is_finite_subset(subset):
                    continue
                sigma_subset = tuple(permutation[j] for j in subset)
                x = min_coset_representative(minimal, sigma_subset)
                if not _is_left_minimal(x, left_letters(subset)):
                    continue
                if not normalizes(x, sigma_subset, subset):
                    continue
                if require_straight and not is_straight(x, sigma):
                    continue
                return minimal, path, x, subset, x.inverse() * minimal
    return None


def straight_decomposition(x, sigma=None):
    """Reduce ``x`` and split the result as a straight element times an
    element of a finite parabolic subgroup.

    The minimal elements reached are tried first, then the other reached
    elements by increasing length. For each, subsets J of ``S^a`` with
    finite ``W_J`` are tried by size and then lexicographically.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        The element.
    sigma : `DiagramAutomorphism`, optional
        Frobenius twist.

    Returns
    -------
    certificate : `ReductionCertificate`

    Raises
    ------
    CertificateError
        If no decomposition is found.
    """
    sigma = sigma or x.datum.sigma
    result = reduce_to_minimal(x, sigma)
    minimal = set(result.minimal)
    candidates = [(m, result.paths[m]) for m in result.minimal]
    candidates += [(e, result.paths[e]) for e in result.reached if e not in minimal]
    letters = _letters(x.datum, AFFINE_GENERATORS)
    found = _decompose(candidates, sigma, letters, True, lambda subset: subset)
    if found is None:
        raise CertificateError(f"No straight decomposition found for {x!r}.")
    reached, path, straight, subset, u = found
    return ReductionCertificate(x, path, reached, straight, subset, u, has_regular_point(reached, sigma))


def parabolic_decomposition(x, sigma=None):
    """Decomposition with the finite simple reflections ``S``: ``x ->_{S,sigma}
    w' = y u`` with J in ``S``, ``y`` minimal in ``W y`` and in
    ``y W_sigma(J)``, ``y sigma(J) y^-1 = J`` and ``u`` in ``W_sigma(J)``.

    Raises
    ------
    CertificateError
        If no decomposition is found.
    """
    sigma = sigma or x.datum.sigma
    result = reduce_to_minimal(x, sigma, FINITE_GENERATORS)
    candidates = [(e, result.paths[e]) for e in result.reached]
    letters = _letters(x.datum, FINITE_GENERATORS)
    found = _decompose(candidates, sigma, letters, False, lambda subset: letters)
    if found is None:
        raise CertificateError(f"No parabolic decomposition found for {x!r}.")
    reached, path, y, subset, u = found
    return ReductionCertificate(x, path, reached, y, subset, u)


def _rational(value):
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def has_regular_point(x, sigma=None):
    """Whether ``V_x`` meets the closed base alcove in a point lying on no
    affine root hyperplane other than those containing ``V_x``.

    Decided by the exact linear program maximizing ``epsilon`` subject to
    ``-1 + epsilon <= <alpha, p> <= -epsilon`` for every positive root
    non-constant on ``V_x``; roots constant on ``V_x`` must take a value in
    ``[-1, 0]``.
    """
    sigma = sigma or x.datum.sigma
    newton = newton_point(x, sigma)
    datum = x.datum
    params = sympy.symbols(f"t0:{newton.v_dimension}") if newton.v_dimension else ()
    epsilon = sympy.Symbol("epsilon")
    constraints = []
    for a in datum.positive_roots:
        root = datum.roots[a]
        constant = dot(root, newton.v_base)
        slopes = [dot(root, direction) for direction in newton.v_directions]
        if all(c == 0 for c in slopes):
            if not -1 <= constant <= 0:
                return False
            continue
        value = _rational(constant) + sum(_rational(c) * t for c, t in zip(slopes, params))
        constraints += [value >= -1 + epsilon, value <= -epsilon]
    if not constraints:
        return True
    try:
        optimum, _ = lpmax(epsilon, constraints + [epsilon <= 1])
    except InfeasibleLPError:
        return False
    return bool(optimum > 0)


def certificate_violations(certificate, sigma=None):
    """Names of the certificate invariants that fail (empty when valid)."""
    sigma = sigma or certificate.source.datum.sigma
    system = root_subsystem(certificate.source.datum)
    permutation = sigma_letter_permutation(certificate.source.datum, sigma)
    sigma_subset = tuple(permutation[j] for j in certificate.J)
    x, u, minimal = certificate.x, certificate.u, certificate.minimal
    checks = {
        "product": x * u == minimal,
        "u-in-parabolic": in_parabolic(u, sigma_subset),
        "x-minimal": _is_left_minimal(x, certificate.J)
        and min_coset_representative(x, sigma_subset) == x,
        "normalizes": normalizes(x, sigma_subset, certificate.J),
        "finite": system.is_finite_subset(certificate.J),
        "straight": is_straight(x, sigma),
        "newton": newton_point(minimal, sigma).nu == newton_point(x, sigma).nu,
        "bruhat": bruhat_leq(x, minimal),
    }
    path_source = certificate.path[0].source if certificate.path else certificate.source
    checks["path"] = path_source == certificate.source and (
        (certificate.path[-1].target if certificate.path else certificate.source) == minimal
    )
    return [name for name, ok in checks.items() if not ok]


def _conjugators(datum, sigma, include_omega):
    """Pairs ``(h, sigma(h)^-1)`` for ``S^a`` and, optionally, the Omega
    generators and their inverses."""
    system = root_subsystem(datum)
    pairs = [(s, s) for s in system.affine_simple]
    if include_omega:
        for omega in omega_generators(datum):
            pairs += [(omega, omega.inverse()), (omega.inverse(), omega)]
    return [(h, apply_sigma(sigma, h_inverse)) for h, h_inverse in pairs]


def conjugation_closure(x, sigma=None, cap=0, include_omega=True):
    """Elements reached from ``x`` by ``g -> h g sigma(h)^-1`` without
    leaving length ``cap``.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        Start.
    sigma : `DiagramAutomorphism`, optional
        Frobenius twist.
    cap : `int`
        Largest length allowed along the way.
    include_omega : `bool`, optional
        Conjugate by the Omega generators as well as by ``S^a``.

    Returns
    -------
    closure : `set` [`ExtAffWeylElement`]
    """
    sigma = sigma or x.datum.sigma
    conjugators = _conjugators(x.datum, sigma, include_omega)
    seen = {x}
    queue = collections.deque([x])
    while queue:
        current = queue.popleft()
        for h, twisted_inverse in conjugators:
            target = h * current * twisted_inverse
            if target.length <= cap and target not in seen:
                seen.add(target)
                queue.append(target)
    return seen


def straight_class_reps(datum, sigma=None, length_bound=0, slack=2, window=2):
    """Group the straight elements of length at most ``length_bound`` by
    sigma-conjugation reachability within length ``length_bound + slack``.

    Conjugation uses ``S^a`` and the Omega generators and their inverses.

    Returns
    -------
    classes : `list` [`StraightClass`]
        Sorted by representative.
    """
    sigma = sigma or datum.sigma
    straight = [x for x in enumerate_elements(datum, sigma, length_bound, window) if is_straight(x, sigma)]
    assigned = set()
    classes = []
    for x in straight:
        if x in assigned:
            continue
        seen = conjugation_closure(x, sigma, length_bound + slack)
        members = tuple(y for y in straight if y in seen)
        assigned.update(members)
        newton = newton_point(x, sigma)
        classes.append(StraightClass(members[0], newton.nu_dom, newton.kappa, members))
        log.debug(f"{datum.label}: straight class of {x!r} has {len(members)} members, {len(seen)} reached.")
    return sorted(classes, key=lambda c: c.representative.sort_key())
