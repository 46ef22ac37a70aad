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
    "NewtonDatum",
    "linear_part",
    "twisted_root_permutation",
    "newton_point",
    "orbit_average",
    "two_rho_pairing",
    "is_straight",
    "l_permissible",
]

import dataclasses
import functools
from fractions import Fraction

from .affine_weyl import kottwitz_point
from .errors import PreconditionError
from .lattice import (
    QuotientClass,
    dot,
    fraction_vector,
    generic_point,
    integral_multiple,
    mat_mul,
    mat_vec,
    nullspace,
    solve_affine,
)
from .root_datum import dominant_representative

MAX_PERIOD = 10_000


@dataclasses.dataclass(frozen=True)
class NewtonDatum:
    """Newton and Kottwitz invariants of ``x sigma``.

    Attributes
    ----------
    nu : `tuple` [`Fraction`]
        Newton point ``nu_x``: ``(x sigma)^n sigma^-n = t^{n nu}``.
    nu_dom : `tuple` [`Fraction`]
        Its dominant representative.
    period : `int`
        Order ``n`` of the linear part ``w sigma``.
    kappa : `QuotientClass`
        Kottwitz point in ``Omega_<sigma>``.
    v_base : `tuple` [`Fraction`]
        A point of ``V_x = {v : x sigma(v) = v + nu}``.
    v_directions : `tuple` [`tuple` [`Fraction`]]
        Basis of the direction space of ``V_x``.
    """

    nu: tuple
    nu_dom: tuple
    period: int
    kappa: QuotientClass
    v_base: tuple
    v_directions: tuple

    @property
    def v_dimension(self):
        return len(self.v_directions)


def linear_part(x, sigma):
    """Matrix of ``w sigma`` on cocharacters."""
    return mat_mul(x.finite.matrix, sigma.matrix)


def twisted_root_permutation(x, sigma):
    """Root indices of ``w sigma(alpha)``."""
    sigma_perm = sigma.root_permutation
    finite_perm = x.finite.root_permutation
    return tuple(finite_perm[sigma_perm[i]] for i in range(len(sigma_perm)))


def _order(matrix):
    identity = tuple(tuple(int(i == j) for j in range(len(matrix))) for i in range(len(matrix)))
    power = matrix
    for n in range(1, MAX_PERIOD + 1):
        if power == identity:
            return n
        power = mat_mul(power, matrix)
    raise PreconditionError("The linear part does not have finite order.")


@functools.lru_cache(maxsize=1 << 16)
def newton_point(x, sigma=None):
    """Compute the Newton datum of ``x sigma``.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        The element.
    sigma : `DiagramAutomorphism`, optional
        Frobenius twist; the datum's own when omitted.

    Returns
    -------
    newton : `NewtonDatum`
        ``nu`` is the orbit average of the translation under the linear
        part; ``V_x`` solves ``(w sigma - 1) v = nu - lambda``.
    """
    sigma = sigma or x.datum.sigma
    linear = linear_part(x, sigma)
    period = _order(linear)
    total = [Fraction(0)] * x.datum.rank
    term = x.translation
    for _ in range(period):
        total = [a + b for a, b in zip(total, term)]
        term = mat_vec(linear, term)
    nu = tuple(Fraction(c) / period for c in total)
    nu_dom, _ = dominant_representative(x.datum, nu)

    rank = x.datum.rank
    shifted = [[linear[i][j] - int(i == j) for j in range(rank)] for i in range(rank)]
    solution = solve_affine(shifted, [n - l for n, l in zip(nu, x.translation)], rank)
    if solution is None:
        raise PreconditionError(f"V_x is empty for {x!r}.")
    base, directions = solution
    return NewtonDatum(
        nu=nu,
        nu_dom=tuple(nu_dom),
        period=period,
        kappa=kottwitz_point(x, sigma),
        v_base=base,
        v_directions=tuple(directions),
    )


def orbit_average(x, sigma, vector):
    """``(1/n) sum_i (x sigma)^i (v)`` over one period; lies in ``V_x``."""
    sigma = sigma or x.datum.sigma
    period = newton_point(x, sigma).period
    total = [Fraction(0)] * x.datum.rank
    point = fraction_vector(vector)
    for _ in range(period):
        total = [a + b for a, b in zip(total, point)]
        point = x.act(mat_vec(sigma.matrix, point))
    return tuple(c / period for c in total)


def two_rho_pairing(datum, vector):
    """``<2 rho, v_dom> = sum over positive alpha of |<alpha, v>|``."""
    return sum((abs(dot(datum.roots[a], vector)) for a in datum.positive_roots), Fraction(0))


def is_straight(x, sigma=None):
    """Whether ``length(x) == <2 rho, nu_dom>``, compared exactly."""
    newton = newton_point(x, sigma or x.datum.sigma)
    return x.length == two_rho_pairing(x.datum, newton.nu_dom)


def _levi_roots(datum, levi):
    roots = getattr(levi, "zero", levi)
    return frozenset(int(r) for r in roots)


def l_permissible(x, sigma, levi):
    """Decide whether a ``w sigma``-fixed cocharacter ``lambda`` with
    ``Phi_lambda = Phi_L`` exists.

    Parameters
    ----------
    x : `ExtAffWeylElement`
        The element.
    sigma : `DiagramAutomorphism`
        Frobenius twist.
    levi : `VDatum` or iterable of `int`
        ``Phi_L``, as root indices or through the zero part of a `VDatum`.

    Returns
    -------
    permissible : `bool`
        Whether such a cocharacter exists.
    witness : `tuple` [`int`] or `None`
        An integral ``lambda`` when ``permissible``.

    Raises
    ------
    PreconditionError
        If ``Phi_L`` is not the root system of a Levi subgroup.
    """
    datum = x.datum
    sigma = sigma or datum.sigma
    levi_roots = _levi_roots(datum, levi)
    rank = datum.rank
    orthogonal = nullspace([datum.roots[r] for r in levi_roots], rank)
    closure = frozenset(
        i for i, root in enumerate(datum.roots) if all(dot(root, u) == 0 for u in orthogonal)
    )
    if closure != levi_roots:
        raise PreconditionError(f"The roots {sorted(levi_roots)} do not form a Levi subsystem of {datum.label}.")

    permutation = twisted_root_permutation(x, sigma)
    if frozenset(permutation[r] for r in levi_roots) != levi_roots:
        return False, None

    linear = linear_part(x, sigma)
    rows = [[linear[i][j] - int(i == j) for j in range(rank)] for i in range(rank)]
    rows += [list(datum.roots[r]) for r in levi_roots]
    fixed = nullspace(rows, rank)
    if not fixed:
        return (True, (0,) * rank) if len(levi_roots) == len(datum.roots) else (False, None)
    outside = [datum.roots[r] for r in datum.positive_roots if r not in levi_roots]
    point = generic_point(fixed, outside)
    if point is None:
        return False, None
    return True, integral_multiple(point)
