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

__all__ = ["OracleSuite", "NewtonBoundsSuite", "DatumInvariantsSuite"]

import numpy as np
import yaml

from ..affine_weyl import (
    DESCENT_POLICIES,
    ExtAffWeylElement,
    bruhat_leq,
    bruhat_lower_interval,
    omega_generators,
    reduced_word,
    root_subsystem,
    twisted_power,
)
from ..errors import CatalogueError
from ..lattice import dot, mat_mul, mat_vec
from ..literals import format_element, format_vector, parse_element
from ..newton import is_straight, newton_point, orbit_average, two_rho_pairing
from ..oracles import bruhat_oracle, class_bfs_oracle, length_oracle, newton_limit_oracle
from ..reduction import reduce_to_minimal
from ..root_datum import apply_sigma, weyl_group_order
from .base_suite import BaseSuite, element_rng

MAX_WEYL_ORDER = 100_000
"""Largest Weyl group enumerated to compare with the product formula
(`int`)."""


class OracleSuite(BaseSuite):
    """Primary length, reduction and Bruhat computations agree with the
    brute-force oracles."""

    name = "oracles"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the oracles suite.
type: object
additionalProperties: false
properties:
  class_bfs:
    description: Compare reduction reachability with the conjugation BFS.
    type: boolean
    default: true
"""
        )

    def setup(self, config, settings):
        self.config = config
        self.seed = settings.random_seed
        self.pairs = settings.bruhat_pairs
        self.guard = settings.bruhat_cost_guard

    def check_element(self, tally, x, sigma):
        tally.record("length-oracle", x.length == length_oracle(x), x)
        for policy in DESCENT_POLICIES:
            word = reduced_word(x, policy)
            tally.record(f"reduced-word-{policy}", word.product() == x and len(word.letters) == x.length, x)
        if self.config.class_bfs:
            reached = set(reduce_to_minimal(x, sigma).reached)
            tally.record("class-bfs-superset", reached <= class_bfs_oracle(x, sigma, x.length), x)

    def check_datum(self, tally, datum, sigma, elements):
        candidates = [x for x in elements if x.length <= self.guard]
        if not candidates:
            return
        rng = np.random.default_rng(self.seed % 2**32)
        for _ in range(self.pairs):
            y = candidates[int(rng.integers(len(candidates)))]
            if rng.random() < 0.5:
                lower = sorted(bruhat_lower_interval(y), key=lambda e: e.sort_key())
                x = lower[int(rng.integers(len(lower)))]
            else:
                x = candidates[int(rng.integers(len(candidates)))]
            label = f"{format_element(x)} <= {format_element(y)}"
            expected = bruhat_oracle(x, y, self.guard)
            tally.record("bruhat-oracle", bruhat_leq(x, y) == expected, label)
            tally.record("bruhat-policy", bruhat_leq(x, y, "last") == expected, label)


class NewtonBoundsSuite(BaseSuite):
    """Length bounds from the Newton point, invariance of Newton and
    Kottwitz points under sigma-conjugation, and ``V_x``."""

    name = "newton-bounds"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the newton-bounds suite.
type: object
additionalProperties: false
properties:
  conjugation_samples:
    description: Random conjugators tried per element.
    type: integer
    minimum: 0
    default: 3
  conjugator_length:
    description: Longest random conjugator word.
    type: integer
    minimum: 1
    default: 3
  max_power:
    description: Largest twisted power whose length is checked.
    type: integer
    minimum: 1
    default: 12
"""
        )

    def setup(self, config, settings):
        self.config = config
        self.seed = settings.random_seed

    def check_element(self, tally, x, sigma):
        datum = x.datum
        rng = element_rng(self.seed, x)
        newton = newton_point(x, sigma)
        bound = two_rho_pairing(datum, newton.nu_dom)
        tally.record("length-bounds-newton", x.length >= bound, x)

        generators = list(root_subsystem(datum).affine_simple)
        for omega in omega_generators(datum):
            generators += [omega, omega.inverse()]
        for _ in range(self.config.conjugation_samples):
            g = ExtAffWeylElement.identity(datum)
            for _ in range(int(rng.integers(1, self.config.conjugator_length + 1))):
                g = g * generators[int(rng.integers(len(generators)))]
            y = g.inverse() * x * apply_sigma(sigma, g)
            other = newton_point(y, sigma)
            tally.record(
                "conjugation-invariance",
                other.nu_dom == newton.nu_dom and other.kappa == newton.kappa,
                f"{format_element(x)} conjugated by {format_element(g)}",
            )

        coefficients = [int(c) for c in rng.integers(-3, 4, size=newton.v_dimension)]
        point = list(newton.v_base)
        for c, direction in zip(coefficients, newton.v_directions):
            point = [p + c * d for p, d in zip(point, direction)]
        for name, p in (("v-subspace", point), ("orbit-average-in-v", orbit_average(x, sigma, point[::-1]))):
            image = x.act(mat_vec(sigma.matrix, p))
            tally.record(
                name,
                tuple(image) == tuple(a + b for a, b in zip(p, newton.nu)),
                f"{format_element(x)}, p = {format_vector(p)}",
            )

        straight = is_straight(x, sigma)
        for n in range(1, self.config.max_power + 1):
            power = twisted_power(x, sigma, n)
            label = f"{format_element(x)}, n = {n}"
            if straight:
                tally.record("straight-power-additive", power.length == n * x.length, label)
            tally.record("power-length-bounds", n * bound <= power.length <= n * x.length, label)
            if n % newton.period == 0:
                tally.record("limit-oracle", newton_limit_oracle(x, sigma, n) * n == power.length, label)


class DatumInvariantsSuite(BaseSuite):
    """Root datum axioms, Weyl group orders and the basic length
    identities."""

    name = "datum-invariants"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the datum-invariants suite.
type: object
additionalProperties: false
properties:
  round_trip:
    description: Check that canonical literals parse back to the element.
    type: boolean
    default: true
"""
        )

    def setup(self, config, settings):
        self.config = config
        self.seed = settings.random_seed
        self.samples = settings.random_samples

    def check_element(self, tally, x, sigma):
        datum = x.datum
        tally.record("length-inverse", x.length == x.inverse().length, x)
        tally.record("length-sigma", apply_sigma(sigma, x).length == x.length, x)
        for s in root_subsystem(datum).affine_simple:
            tally.record("length-simple-step", abs((s * x).length - x.length) == 1, x)
        for omega in omega_generators(datum):
            tally.record("length-omega-conjugation", (omega * x * omega.inverse()).length == x.length, x)
        if self.config.round_trip:
            tally.record("literal-round-trip", parse_element(format_element(x), datum) == x, x)

    def check_datum(self, tally, datum, sigma, elements):
        try:
            datum.validate()
        except CatalogueError as e:
            tally.record("datum-axioms", False, str(e))
        else:
            tally.record("datum-axioms", True)

        roots = set(datum.roots)
        tally.record("roots-symmetric", {tuple(-c for c in root) for root in roots} == roots, datum.label)
        tally.record("coroots-match", len(datum.coroots) == len(datum.roots), datum.label)
        two_rho = [sum(datum.roots[a][i] for a in datum.positive_roots) for i in range(datum.rank)]
        for i in datum.simple_roots:
            tally.record("rho-simple-coroot", dot(two_rho, datum.coroots[i]) == 2, f"simple root {i}")

        if datum.cartan_type and weyl_group_order(datum.cartan_type) <= MAX_WEYL_ORDER:
            tally.record(
                "weyl-group-order",
                len(datum.weyl_group) == weyl_group_order(datum.cartan_type),
                f"{len(datum.weyl_group)} != {weyl_group_order(datum.cartan_type)}",
            )

        rng = np.random.default_rng(self.seed % 2**32)
        group = datum.weyl_group
        for _ in range(self.samples if datum.rank else 0):
            u = tuple(int(c) for c in rng.integers(-5, 6, size=datum.rank))
            v = tuple(int(c) for c in rng.integers(-5, 6, size=datum.rank))
            w = group[int(rng.integers(len(group)))]
            tally.record(
                "inner-product-invariance",
                datum.inner(w.act(u), w.act(v)) == datum.inner(u, v),
                f"u = {format_vector(u)}, v = {format_vector(v)}",
            )

        power = datum.identity_weyl.matrix
        for _ in range(sigma.order):
            power = mat_mul(power, sigma.matrix)
        tally.record("sigma-order", power == datum.identity_weyl.matrix, datum.label)
        tally.record(
            "sigma-permutes-walls", root_subsystem(datum).sigma_letters(sigma) is not None, datum.label
        )
