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

__all__ = ["LemmaSuite"]

import yaml

from ..affine_weyl import ExtAffWeylElement, affine_reflection, bruhat_leq, bruhat_lower_interval, root_subsystem
from ..alcove import face_v_data, is_p_alcove, levi_walls, map_hyperplane, stable_v_data, transport_v_datum
from ..classifier import is_GL_fundamental, is_K_fundamental
from ..errors import ClassificationError
from ..lattice import dot
from ..literals import format_element, format_vector
from ..newton import newton_point
from ..oracles import alcove_interior_point
from ..reduction import (
    conjugation_closure,
    length_preserving_class,
    normalizes,
    sigma_conjugate_simple,
    sigma_letter_permutation,
)
from ..root_datum import apply_sigma
from .base_suite import BaseSuite, element_rng


class LemmaSuite(BaseSuite):
    """The alcove, reduction and Bruhat lemmas behind the classification.

    Elements up to ``exhaustive_max_len`` are checked in full; longer ones
    are checked with probability ``sample_fraction``.
    """

    name = "lemmas"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the lemmas suite.
type: object
additionalProperties: false
properties:
  exhaustive_max_len:
    description: Elements up to this length are always checked.
    type: integer
    minimum: 0
    default: 8
  sample_fraction:
    description: Probability of checking a longer element.
    type: number
    minimum: 0
    maximum: 1
    default: 0.25
  bruhat_samples:
    description: Triples drawn per element for the Bruhat lemma.
    type: integer
    minimum: 0
    default: 4
"""
        )

    def setup(self, config, settings):
        self.config = config
        self.seed = settings.random_seed
        self.slack = settings.reachability_slack

    def check_element(self, tally, x, sigma):
        rng = element_rng(self.seed, x)
        if x.length > self.config.exhaustive_max_len and rng.random() >= self.config.sample_fraction:
            return
        self._check_length(tally, x, sigma)
        self._check_f(tally, x, sigma)
        self._check_red(tally, x, sigma)
        self._check_j(tally, x, sigma)
        self._check_bruhat(tally, x, sigma, rng)

    def check_datum(self, tally, datum, sigma, elements):
        self._check_change(tally, datum)

    def _check_length(self, tally, x, sigma):
        """Multiplying by an affine reflection fixing v that adds one to the
        length keeps the P_v-alcove property."""
        datum = x.datum
        bound = x.length + 2
        for vd in stable_v_data(x, sigma):
            before = is_p_alcove(x, sigma, vd)
            for root in sorted(vd.zero):
                if not datum.is_positive(root):
                    continue
                for level in range(-bound, bound + 1):
                    y = affine_reflection(datum, root, level) * x
                    if y.length == x.length + 1:
                        tally.record(
                            "length",
                            is_p_alcove(y, sigma, vd) == before,
                            f"{format_element(x)}, v = {format_vector(vd.v)}, reflection ({root}, {level})",
                        )

    def _check_f(self, tally, x, sigma):
        datum = x.datum
        for vd in stable_v_data(x, sigma):
            if not is_p_alcove(x, sigma, vd):
                continue
            label = f"{format_element(x)}, v = {format_vector(vd.v)}"
            for letter, s in enumerate(root_subsystem(datum).affine_simple):
                y = sigma_conjugate_simple(x, s, sigma)
                if y.length == x.length:
                    image = transport_v_datum(vd, s, datum)
                    tally.record("f-a", is_p_alcove(y, sigma, image), f"{label}, s{letter}")
                elif y.length < x.length:
                    tally.record("f-b-fixed", tuple(s.finite.act(vd.v)) == tuple(vd.v), f"{label}, s{letter}")
                    z = x * apply_sigma(sigma, s)
                    tally.record(
                        "f-b-alcove",
                        is_p_alcove(y, sigma, vd) and is_p_alcove(z, sigma, vd),
                        f"{label}, s{letter}",
                    )

    @staticmethod
    def _fundamental(test, x, sigma):
        try:
            return test(x, sigma)
        except ClassificationError:
            return None

    def _check_red(self, tally, x, sigma):
        """Reductions keep K-fundamental elements K-fundamental under S and
        G(L)-fundamental ones under ``S^a``; a strict reduction fixes both
        Newton points."""
        system = root_subsystem(x.datum)
        flavors = (
            ("K", is_K_fundamental, system.finite_letters),
            ("GL", is_GL_fundamental, tuple(range(len(system.affine_simple)))),
        )
        for flavor, test, letters in flavors:
            if not self._fundamental(test, x, sigma):
                continue
            for letter in letters:
                s = system.affine_simple[letter]
                label = f"{format_element(x)}, s{letter}"
                y = sigma_conjugate_simple(x, s, sigma)
                if y.length == x.length:
                    tally.record(f"red-a-{flavor}", bool(self._fundamental(test, y, sigma)), label)
                    continue
                if y.length > x.length:
                    continue
                z = x * apply_sigma(sigma, s)
                tally.record(
                    f"red-b-{flavor}",
                    bool(self._fundamental(test, y, sigma)) and bool(self._fundamental(test, z, sigma)),
                    label,
                )
                nu_x = newton_point(x, sigma).nu
                nu_z = newton_point(z, sigma).nu
                tally.record(
                    f"red-b-newton-fixed-{flavor}",
                    tuple(s.finite.act(nu_x)) == tuple(nu_x) and tuple(s.finite.act(nu_z)) == tuple(nu_z),
                    label,
                )

    def _check_j(self, tally, x, sigma):
        """For x minimal in ``W x``, the support of any w commuting with
        ``x sigma`` is normalized by ``x sigma``."""
        datum = x.datum
        system = root_subsystem(datum)
        if any((system.affine_simple[letter] * x).length < x.length for letter in system.finite_letters):
            return
        permutation = sigma_letter_permutation(datum, sigma)
        for w in datum.weyl_group:
            element = ExtAffWeylElement.from_finite(w)
            if element * x != x * apply_sigma(sigma, element):
                continue
            support = tuple(sorted({system.finite_letters[p] for p in w.word}))
            tally.record(
                "J",
                normalizes(x, tuple(permutation[j] for j in support), support),
                f"{format_element(x)}, w = {format_element(element)}",
            )

    def _check_bruhat(self, tally, x, sigma, rng):
        """For ``x ~ x' >= y`` some ``W^a``-sigma-conjugate ``z`` of ``y``
        has ``z <= x`` and ``l(z) <= l(y)``."""
        if not self.config.bruhat_samples:
            return
        members = sorted(length_preserving_class(x, sigma), key=lambda e: e.sort_key())
        for _ in range(self.config.bruhat_samples):
            other = members[int(rng.integers(len(members)))]
            lower = sorted(bruhat_lower_interval(other), key=lambda e: e.sort_key())
            y = lower[int(rng.integers(len(lower)))]
            closure = conjugation_closure(y, sigma, y.length + self.slack, include_omega=False)
            found = any(z.length <= y.length and bruhat_leq(z, x) for z in closure)
            tally.record(
                "bruhat",
                found,
                f"{format_element(x)} ~ {format_element(other)} >= {format_element(y)} (cap {y.length + self.slack})",
            )

    def _check_change(self, tally, datum):
        """A simple affine reflection moving v carries ``Delta_v`` onto
        ``Delta_{s(v)}``."""
        point = alcove_interior_point(datum)
        for vd in face_v_data(datum):
            walls = levi_walls(vd, datum)
            for letter, s in enumerate(root_subsystem(datum).affine_simple):
                if tuple(s.finite.act(vd.v)) == tuple(vd.v):
                    continue
                image = transport_v_datum(vd, s, datum)
                label = f"v = {format_vector(vd.v)}, s{letter}"
                mapped = frozenset(map_hyperplane(s, wall) for wall in walls)
                tally.record("change-walls", mapped == levi_walls(image, datum), label)
                moved = s.act(point)
                inside = all(
                    -1 < dot(datum.roots[r], moved) < 0 for r in image.zero if datum.is_positive(r)
                )
                tally.record("change-interior", inside, label)
