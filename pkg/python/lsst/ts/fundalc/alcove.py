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
    "VDatum",
    "Hyperplane",
    "alcove_ge",
    "is_face_stable",
    "is_p_alcove",
    "relative_length",
    "is_p_fundamental",
    "face_v_data",
    "stable_v_data",
    "find_p_alcove_witness",
    "transport_v_datum",
    "levi_walls",
    "map_hyperplane",
]

import dataclasses
import functools
import itertools
from fractions import Fraction

from .affine_weyl import ExtAffWeylElement, root_subsystem
from .errors import PreconditionError
from .lattice import dot, fraction_vector, mat_vec, solve_affine
from .newton import linear_part, twisted_root_permutation


@dataclasses.dataclass(frozen=True)
class VDatum:
    """A rational cocharacter ``v`` with its parabolic shadow.

    Attributes
    ----------
    v : `tuple` [`Fraction`]
        The vector.
    zero : `frozenset` [`int`]
        ``Phi_v``, roots vanishing on ``v``.
    plus : `frozenset` [`int`]
        ``Phi_{v,+}``, roots positive on ``v``.
    """

    v: tuple
    zero: frozenset
    plus: frozenset

    @classmethod
    def from_vector(cls, datum, vector):
        vector = fraction_vector(vector)
        zero = []
        plus = []
        for i, root in enumerate(datum.roots):
            value = dot(root, vector)
            if value == 0:
                zero.append(i)
            elif value > 0:
                plus.append(i)
        return cls(vector, frozenset(zero), frozenset(plus))

    @property
    def pattern(self):
        return self.zero, self.plus

    def is_regular(self):
        return not self.zero

    def sort_key(self):
        return (any(c != 0 for c in self.v), -len(self.zero), tuple(sorted(self.zero)), tuple(sorted(self.plus)))


@dataclasses.dataclass(frozen=True)
class Hyperplane:
    """The hyperplane ``<alpha, v> = level``, stored with ``alpha``
    positive."""

    root: int
    level: int

    @classmethod
    def normalized(cls, datum, root, level):
        if datum.is_positive(root):
            return cls(root, level)
        return cls(datum.negative(root), -level)


def alcove_ge(x, y, root):
    """``x Delta >=_alpha y Delta``: no integer ``k`` has ``<alpha, y Delta> >
    k > <alpha, x Delta>``, that is ``m_alpha(x) >= m_alpha(y)``."""
    return x.m_all[root] >= y.m_all[root]


def is_face_stable(x, sigma, vd):
    """Whether ``w sigma`` preserves ``(Phi_v, Phi_{v,+})``; then the
    ``w sigma``-average of ``v`` is a fixed vector with the same pattern."""
    permutation = twisted_root_permutation(x, sigma or x.datum.sigma)
    return all(permutation[r] in vd.zero for r in vd.zero) and all(permutation[r] in vd.plus for r in vd.plus)


def is_p_alcove(x, sigma, vd):
    """P-alcove test: ``w sigma`` fixes the face of ``v`` and
    ``x Delta >=_alpha Delta`` for every ``alpha`` in ``Phi_{v,+}``.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        The element.
    sigma : `DiagramAutomorphism`
        Frobenius twist.
    vd : `VDatum`
        Defines the parabolic ``P_v``.

    Returns
    -------
    result : `bool`
    """
    if not is_face_stable(x, sigma, vd):
        return False
    base = ExtAffWeylElement.identity(x.datum)
    return all(alcove_ge(x, base, r) for r in vd.plus)


def relative_length(x, sigma, vd):
    """``l_v(x sigma)``: hyperplanes of ``Phi_v`` separating ``Delta_v`` from
    ``x sigma Delta_v``.

    Raises
    ------
    PreconditionError
        If ``w sigma`` does not preserve ``Phi_v``.
    """
    permutation = twisted_root_permutation(x, sigma or x.datum.sigma)
    if any(permutation[r] not in vd.zero for r in vd.zero):
        raise PreconditionError(f"{x!r} sigma does not preserve Phi_v for v = {list(map(str, vd.v))}.")
    return root_subsystem(x.datum, vd.zero).length(x)


def is_p_fundamental(x, sigma, vd):
    """P-alcove with zero relative length."""
    return is_p_alcove(x, sigma, vd) and relative_length(x, sigma, vd) == 0


@functools.lru_cache(maxsize=None)
def face_v_data(datum):
    """One vector per face of the Weyl chamber fan, ``u v_J`` for
    ``u`` in W and ``v_J`` spanning the face of the dominant chamber
    where exactly the simple roots in J vanish."""
    faces = {}
    rank = datum.rank
    simple = [datum.roots[i] for i in datum.simple_roots]
    for size in range(len(simple) + 1):
        for subset in itertools.combinations(range(len(simple)), size):
            rhs = [0 if i in subset else 1 for i in range(len(simple))]
            base, _ = solve_affine(simple, rhs, rank)
            for u in datum.weyl_group:
                vd = VDatum.from_vector(datum, u.act(base))
                faces.setdefault(vd.pattern, vd)
    return tuple(faces.values())


@functools.lru_cache(maxsize=1 << 14)
def _stable_v_data(finite, sigma):
    x = ExtAffWeylElement.from_finite(finite)
    linear = linear_part(x, sigma)
    result = []
    for vd in face_v_data(finite.datum):
        if not is_face_stable(x, sigma, vd):
            continue
        orbit = list(_orbit(linear, vd.v))
        average = tuple(sum((p[i] for p in orbit), Fraction(0)) / len(orbit) for i in range(finite.datum.rank))
        result.append(VDatum(average, vd.zero, vd.plus))
    return tuple(sorted(result, key=VDatum.sort_key))


def _orbit(linear, vector):
    point = tuple(vector)
    while True:
        yield point
        point = tuple(mat_vec(linear, point))
        if point == tuple(vector):
            return


def stable_v_data(x, sigma=None):
    """Enumerate the parabolic pairs ``(Phi_v, Phi_{v,+})`` fixed by
    ``w sigma``.

    Returns
    -------
    v_data : `tuple` [`VDatum`]
        One representative per stable pair, ``v`` being ``w sigma``-fixed;
        ``v = 0`` comes first, then pairs with larger ``Phi_v``.
    """
    return _stable_v_data(x.finite, sigma or x.datum.sigma)


def find_p_alcove_witness(x, sigma=None, levi_constraint=None):
    """First stable ``VDatum`` for which ``x`` is a P-alcove element, with
    ``Phi_v`` inside ``levi_constraint`` when one is given.

    Returns
    -------
    vd : `VDatum` or `None`
    """
    sigma = sigma or x.datum.sigma
    allowed = None if levi_constraint is None else frozenset(getattr(levi_constraint, "zero", levi_constraint))
    for vd in stable_v_data(x, sigma):
        if allowed is not None and not vd.zero <= allowed:
            continue
        if is_p_alcove(x, sigma, vd):
            return vd
    return None


def transport_v_datum(vd, s, datum):
    """The datum of ``s_bar(v)`` for an affine element ``s``."""
    return VDatum.from_vector(datum, s.finite.act(vd.v))


def levi_walls(vd, datum):
    """Walls of ``Delta_v``: ``<beta, v> = 0`` for the simple roots of
    ``Phi_v`` and ``<theta, v> = -1`` for each component's highest root."""
    system = root_subsystem(datum, vd.zero)
    return frozenset(Hyperplane.normalized(datum, wall.root, -wall.level) for wall in system.walls)


def map_hyperplane(x, hyperplane):
    """Image of ``<alpha, v> = k`` under ``t^mu w``: ``<w alpha, v> = k +
    <w alpha, mu>``."""
    datum = x.datum
    image = x.finite.root_permutation[hyperplane.root]
    return Hyperplane.normalized(datum, image, hyperplane.level + dot(datum.roots[image], x.translation))
