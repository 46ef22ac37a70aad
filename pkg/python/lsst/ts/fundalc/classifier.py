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

"""Fundamental, K-fundamental and G(L)-fundamental elements.

An element is fundamental when it is straight. K- and G(L)-fundamental
elements are decided by a coset criterion and cross-checked by the
equivalent P-alcove criterion inside the Levi subsystem of the Newton
point.
"""

__all__ = [
    "K_FLAVOR",
    "GL_FLAVOR",
    "FundamentalWitness",
    "ClassifyRow",
    "MinusculeRow",
    "fundamental_witness_search",
    "is_fundamental",
    "x_part",
    "remark_gap",
    "criterion_b",
    "criterion_c",
    "is_K_fundamental",
    "is_GL_fundamental",
    "minuscule_report",
    "classify_report",
]

import dataclasses
import itertools
import logging

from .affine_weyl import ExtAffWeylElement, bruhat_leq, bruhat_lower_interval, root_subsystem
from .alcove import VDatum, is_p_alcove, is_p_fundamental, stable_v_data, transport_v_datum
from .enumeration import enumerate_elements
from .errors import CertificateError, ClassificationError, PreconditionError
from .lattice import dot
from .newton import is_straight, newton_point
from .reduction import conjugation_closure, length_preserving_class, straight_decomposition
from .root_datum import apply_sigma

log = logging.getLogger(__name__)

K_FLAVOR = "K"
"""J ranges over the finite simple reflections of the Levi (`str`)."""
GL_FLAVOR = "GL"
"""J ranges over the affine simple reflections of the Levi with finite
``W_J`` (`str`)."""


@dataclasses.dataclass(frozen=True)
class FundamentalWitness:
    """A P-fundamental certificate for a straight element.

    Attributes
    ----------
    v_datum : `VDatum`
        The parabolic datum for which the element itself is P-fundamental.
    path : `tuple` [`ReductionStep`]
        Length-preserving steps from the element to ``found_at``.
    found_at : `ExtAffWeylElement`
        Where the search first met a P-fundamental pair.
    found_v_datum : `VDatum`
        The pair at ``found_at``, transported back along ``path`` to give
        ``v_datum``.
    """

    v_datum: VDatum
    path: tuple
    found_at: ExtAffWeylElement
    found_v_datum: VDatum


@dataclasses.dataclass(frozen=True)
class ClassifyRow:
    element: ExtAffWeylElement
    length: int
    nu_dom: tuple
    kappa: object
    straight: bool
    k_fundamental: bool
    gl_fundamental: bool
    witness: object


@dataclasses.dataclass(frozen=True)
class MinusculeRow:
    element: ExtAffWeylElement
    straight_rep: ExtAffWeylElement
    witness: object
    bruhat_ok: bool
    conjugacy_ok: bool

    @property
    def ok(self):
        return self.bruhat_ok and self.conjugacy_ok


def fundamental_witness_search(x, sigma=None):
    """Search the ``~_sigma`` class of ``x`` for a P-fundamental pair and
    transport it back to ``x``.

    Returns
    -------
    witness : `FundamentalWitness` or `None`
        `None` when no member yields a pair that is P-fundamental for ``x``.
    """
    sigma = sigma or x.datum.sigma
    datum = x.datum
    paths = length_preserving_class(x, sigma)
    for element in sorted(paths, key=lambda e: (len(paths[e]), e.sort_key())):
        path = paths[element]
        for vd in stable_v_data(element, sigma):
            if not is_p_fundamental(element, sigma, vd):
                continue
            transported = vd
            for step in reversed(path):
                transported = transport_v_datum(transported, root_subsystem(datum).affine_simple[step.letter], datum)
            if is_p_fundamental(x, sigma, transported):
                return FundamentalWitness(transported, path, element, vd)
    return None


def is_fundamental(x, sigma=None):
    """Decide whether ``x`` is fundamental, that is straight.

    Returns
    -------
    fundamental : `bool`
    witness : `FundamentalWitness` or `None`
        A P-fundamental certificate when ``fundamental``.

    Raises
    ------
    CertificateError
        If ``x`` is straight and no witness is found.
    """
    sigma = sigma or x.datum.sigma
    if not is_straight(x, sigma):
        return False, None
    witness = fundamental_witness_search(x, sigma)
    if witness is None:
        raise CertificateError(f"{x!r} is straight but has no P-fundamental witness.")
    return True, witness


def _newton_levi(x, sigma):
    nu = newton_point(x, sigma).nu
    return nu, VDatum.from_vector(x.datum, nu)


def _x_part_in(x, levi_system):
    reflections = levi_system.affine_simple
    y = x
    current = levi_system.length(y)
    while current > 0:
        for s in reflections:
            candidate = s * y
            candidate_length = levi_system.length(candidate)
            if candidate_length < current:
                y, current = candidate, candidate_length
                break
        else:
            raise PreconditionError(f"No relative descent for {y!r} in {levi_system!r}.")
    return y


def x_part(x, sigma=None):
    """The element ``y`` of ``W^a_nu x`` with ``l_nu(y sigma) = 0``.

    Found by greedy left multiplication with the simple affine reflections
    of ``Phi_nu``; since ``x sigma`` normalizes ``W^a_nu`` this coset is
    also ``x sigma W^a_nu sigma^-1``.
    """
    sigma = sigma or x.datum.sigma
    _, vd = _newton_levi(x, sigma)
    return _x_part_in(x, root_subsystem(x.datum, vd.zero))


def remark_gap(x, sigma=None):
    """``l(x sigma) - l(y sigma) - l_nu(x sigma)`` for ``y = x_part(x)``;
    never negative."""
    sigma = sigma or x.datum.sigma
    _, vd = _newton_levi(x, sigma)
    levi = root_subsystem(x.datum, vd.zero)
    return x.length - x_part(x, sigma).length - levi.length(x)


def _in_parabolic(u, reflections, system):
    """Whether ``u`` lies in the subgroup generated by ``reflections``,
    simple reflections of ``system``."""
    descended = True
    while descended:
        descended = False
        current = system.length(u)
        for r in reflections:
            candidate = u * r
            if system.length(candidate) < current:
                u = candidate
                descended = True
                break
    return u.is_identity()


def _subsets(system, flavor):
    if flavor == K_FLAVOR:
        letters = system.finite_letters
    elif flavor == GL_FLAVOR:
        letters = tuple(range(len(system.affine_simple)))
    else:
        raise PreconditionError(f"Unknown flavor {flavor!r}.")
    for size in range(len(letters) + 1):
        for subset in itertools.combinations(letters, size):
            if system.is_finite_subset(subset):
                yield subset


def criterion_b(x, sigma, flavor, roots=None):
    """Coset criterion inside the root subsystem ``roots`` (all roots by
    default).

    With ``nu = nu_x`` and ``y`` the relative ``x_part``: ``y`` is straight
    in the subsystem, ``l(x) = l(y) + l_nu(x)``, and some J of the Levi's
    simple reflections (finite ones for K, any with finite ``W_J`` for
    G(L)) has ``y^-1 x`` in ``W_sigma(J)`` and ``y sigma(J) y^-1 = J``.
    """
    sigma = sigma or x.datum.sigma
    datum = x.datum
    system = root_subsystem(datum, roots)
    nu, vd = _newton_levi(x, sigma)
    levi_roots = frozenset(vd.zero & system.roots)
    levi = root_subsystem(datum, levi_roots)
    y = _x_part_in(x, levi)

    y_nu = newton_point(y, sigma).nu
    straight_part = sum(abs(dot(datum.roots[a], y_nu)) for a in system.positive)
    if system.length(y) != straight_part:
        return False
    if system.length(x) != system.length(y) + levi.length(x):
        return False

    sigma_roots = frozenset(sigma.root_permutation[r] for r in levi_roots)
    sigma_levi = root_subsystem(datum, sigma_roots)
    u = y.inverse() * x
    y_inverse = y.inverse()
    for subset in _subsets(levi, flavor):
        sigma_reflections = [apply_sigma(sigma, levi.affine_simple[j]) for j in subset]
        if not _in_parabolic(u, sigma_reflections, sigma_levi):
            continue
        conjugated = {y * r * y_inverse for r in sigma_reflections}
        if conjugated == {levi.affine_simple[j] for j in subset}:
            return True
    return False


def criterion_c(x, sigma, flavor):
    """P-alcove criterion: ``x`` is a ``P_nu``-alcove element and satisfies
    the coset criterion inside the Levi ``Phi_nu``.

    Returns
    -------
    result : `bool` or `None`
        `None` when ``Phi_nu`` is everything, where the criterion is
        vacuous and defers to `criterion_b`.
    """
    sigma = sigma or x.datum.sigma
    _, vd = _newton_levi(x, sigma)
    if len(vd.zero) == len(x.datum.roots):
        return None
    return is_p_alcove(x, sigma, vd) and criterion_b(x, sigma, flavor, vd.zero)


def _classify(x, sigma, flavor):
    sigma = sigma or x.datum.sigma
    by_coset = criterion_b(x, sigma, flavor)
    by_alcove = criterion_c(x, sigma, flavor)
    if by_alcove is not None and by_alcove != by_coset:
        raise ClassificationError(
            f"{flavor}-fundamental criteria disagree for {x!r}: coset {by_coset}, P-alcove {by_alcove}."
        )
    return by_coset


def is_K_fundamental(x, sigma=None):
    """K-fundamental test.

    Raises
    ------
    ClassificationError
        If the coset and P-alcove criteria disagree.
    """
    return _classify(x, sigma, K_FLAVOR)


def is_GL_fundamental(x, sigma=None):
    """G(L)-fundamental test.

    Raises
    ------
    ClassificationError
        If the coset and P-alcove criteria disagree.
    """
    return _classify(x, sigma, GL_FLAVOR)


def _check_minuscule(datum, mu):
    if len(mu) != datum.rank:
        raise PreconditionError(f"mu = {list(mu)} does not have rank {datum.rank}.")
    bad = [datum.roots[a] for a in datum.positive_roots if abs(dot(datum.roots[a], mu)) > 1]
    if bad:
        raise PreconditionError(f"mu = {list(mu)} is not minuscule: <alpha, mu> = {dot(bad[0], mu)}.")


def minuscule_report(datum, sigma=None, mu=(), slack=4):
    """Check that each element of ``W t^mu W`` dominates a straight element
    of its own sigma-conjugacy class.

    The class is found by `straight_decomposition`; candidates are the
    straight elements of the Bruhat interval below the element with the
    same Newton and Kottwitz points as the decomposition's straight part,
    and conjugacy is confirmed by a capped ``W^a``-sigma-conjugation search.

    Parameters
    ----------
    datum : `BasedRootDatum`
        Root datum.
    sigma : `DiagramAutomorphism`, optional
        Frobenius twist.
    mu : `tuple` [`int`]
        A minuscule cocharacter.
    slack : `int`, optional
        Extra length allowed in the conjugation search.

    Returns
    -------
    rows : `list` [`MinusculeRow`]

    Raises
    ------
    PreconditionError
        If ``mu`` is not minuscule.
    """
    sigma = sigma or datum.sigma
    mu = tuple(int(c) for c in mu)
    _check_minuscule(datum, mu)
    orbit = {tuple(int(c) for c in u.act(mu)) for u in datum.weyl_group}
    elements = sorted(
        {ExtAffWeylElement(datum, lam, w) for lam in orbit for w in datum.weyl_group},
        key=lambda e: e.sort_key(),
    )
    rows = []
    for element in elements:
        certificate = straight_decomposition(element, sigma)
        straight = certificate.x
        target = newton_point(straight, sigma)
        candidates = sorted(
            (
                y
                for y in bruhat_lower_interval(element)
                if is_straight(y, sigma)
                and newton_point(y, sigma).nu_dom == target.nu_dom
                and newton_point(y, sigma).kappa == target.kappa
            ),
            key=lambda e: e.sort_key(),
        )
        closure = conjugation_closure(
            straight, sigma, max(element.length, straight.length) + slack, include_omega=False
        )
        witness = next((y for y in candidates if y in closure), None)
        rows.append(
            MinusculeRow(
                element=element,
                straight_rep=straight,
                witness=witness,
                bruhat_ok=witness is not None and bruhat_leq(witness, element),
                conjugacy_ok=witness is not None,
            )
        )
    log.debug(f"{datum.label}: minuscule report for mu = {list(mu)} has {len(rows)} rows.")
    return rows


def classify_report(datum, sigma=None, max_len=0, window=2, cache=None):
    """Classify every enumerated element of length at most ``max_len``.

    Returns
    -------
    rows : `list` [`ClassifyRow`]
    """
    sigma = sigma or datum.sigma
    rows = []
    for x in enumerate_elements(datum, sigma, max_len, window, cache):
        newton = newton_point(x, sigma)
        fundamental, witness = is_fundamental(x, sigma)
        rows.append(
            ClassifyRow(
                element=x,
                length=x.length,
                nu_dom=newton.nu_dom,
                kappa=newton.kappa,
                straight=fundamental,
                k_fundamental=is_K_fundamental(x, sigma),
                gl_fundamental=is_GL_fundamental(x, sigma),
                witness=witness.v_datum if witness else None,
            )
        )
    return rows
