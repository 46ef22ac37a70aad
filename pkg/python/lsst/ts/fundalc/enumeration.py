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

__all__ = ["enumerate_elements", "count_elements"]

import logging

from .affine_weyl import omega_elements, simple_affine_reflections

log = logging.getLogger(__name__)


def _layers(datum, max_len, window):
    layer = sorted(omega_elements(datum, window), key=lambda x: x.sort_key())
    reflections = simple_affine_reflections(datum)
    for current_length in range(max_len + 1):
        yield layer
        if current_length == max_len:
            return
        following = {}
        for x in layer:
            for s in reflections:
                y = s * x
                if y.length == current_length + 1:
                    following.setdefault(y, None)
        layer = sorted(following, key=lambda x: x.sort_key())
        log.debug(f"{datum.label}: {len(layer)} elements of length {current_length + 1}.")


def enumerate_elements(datum, sigma=None, max_len=0, window=2, cache=None):
    """Yield every element of length at most ``max_len`` exactly once.

    Elements are generated layer by layer from the Omega-window by left
    multiplication with ``S^a``; within a layer they come in
    `ExtAffWeylElement.sort_key` order.

    Parameters
    ----------
    datum : `BasedRootDatum`
        Root datum.
    sigma : `DiagramAutomorphism`, optional
        Frobenius twist. It does not change the set of elements, only the
        cache entry the result is filed under.
    max_len : `int`
        Largest length.
    window : `int`, optional
        Omega-window radius for free generators of Omega.
    cache : `EnumerationCache`, optional
        When given, elements are read from or written to the cache.

    Yields
    ------
    x : `ExtAffWeylElement`
    """
    if max_len < 0:
        return
    sigma = sigma or datum.sigma
    if cache is not None:
        yield from cache.get_or_build(
            datum,
            sigma,
            max_len,
            window,
            lambda: [x for layer in _layers(datum, max_len, window) for x in layer],
        )
        return
    for layer in _layers(datum, max_len, window):
        yield from layer


def count_elements(datum, max_len, window=2):
    """Number of elements with length at most ``max_len`` in the window."""
    return sum(len(layer) for layer in _layers(datum, max_len, window))
