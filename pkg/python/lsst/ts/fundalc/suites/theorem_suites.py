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
    "FundEquivalenceSuite",
    "MinCertificatesSuite",
    "KfCriteriaSuite",
    "StraightClassesSuite",
    "MinusculeSuite",
    "minuscule_cocharacters",
]

import itertools

import yaml

from ..affine_weyl import root_subsystem
from ..alcove import is_p_fundamental
from ..classifier import (
    fundamental_witness_search,
    is_GL_fundamental,
    is_K_fundamental,
    minuscule_report,
    remark_gap,
)
from ..errors import CertificateError, ClassificationError
from ..lattice import dot
from ..literals import format_element, format_vector
from ..newton import is_straight, newton_point
from ..reduction import certificate_violations, parabolic_decomposition, straight_class_reps, straight_decomposition
from .base_suite import BaseSuite


class FundEquivalenceSuite(BaseSuite):
    """The P-fundamental witness search succeeds exactly on straight
    elements."""

    name = "fund-equivalence"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the fund-equivalence suite.
type: object
additionalProperties: false
properties:
  check_witness:
    description: Re-check that each witness is P-fundamental for the element.
    type: boolean
    default: true
"""
        )

    def setup(self, config, settings):
        self.config = config

    def check_element(self, tally, x, sigma):
        witness = fundamental_witness_search(x, sigma)
        straight = is_straight(x, sigma)
        tally.record("witness-iff-straight", (witness is not None) == straight, x)
        if witness is not None and self.config.check_witness:
            tally.record("witness-p-fundamental", is_p_fundamental(x, sigma, witness.v_datum), x)


class MinCertificatesSuite(BaseSuite):
    """Every element reduces to a straight element times a finite
    parabolic part, with a valid certificate."""

    name = "min-certificates"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the min-certificates suite.
type: object
additionalProperties: false
properties:
  parabolic:
    description: Also check the decomposition with the finite simple reflections.
    type: boolean
    default: true
"""
        )

    def setup(self, config, settings):
        self.config = config

    def check_element(self, tally, x, sigma):
        try:
            certificate = straight_decomposition(x, sigma)
        except CertificateError:
            tally.record("straight-decomposition", False, x)
        else:
            tally.record("straight-decomposition", True)
            violations = certificate_violations(certificate, sigma)
            tally.record("certificate-invariants", not violations, f"{format_element(x)}: {','.join(violations)}")
            tally.record("regular-point", bool(certificate.has_regular_point), x, informational=True)

        if not self.config.parabolic:
            return
        try:
            certificate = parabolic_decomposition(x, sigma)
        except CertificateError:
            tally.record("parabolic-decomposition", False, x)
            return
        tally.record("parabolic-decomposition", True)
        violations = [
            name for name in certificate_violations(certificate, sigma) if name not in ("straight", "newton")
        ]
        tally.record(
            "parabolic-certificate-invariants", not violations, f"{format_element(x)}: {','.join(violations)}"
        )


class KfCriteriaSuite(BaseSuite):
    """The coset and P-alcove criteria agree for K- and G(L)-fundamental
    elements, and the coset decomposition never overshoots the length."""

    name = "kf-criteria"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the kf-criteria suite.
type: object
additionalProperties: false
properties:
  check_split:
    description: Check the K versus G(L) split on SL2.
    type: boolean
    default: true
"""
        )

    def setup(self, config, settings):
        self.config = config

    def _flavor(self, tally, name, test, x, sigma):
        try:
            result = test(x, sigma)
        except ClassificationError as e:
            tally.record(f"{name}-criteria-agree", False, f"{format_element(x)}: {e}")
            return None
        tally.record(f"{name}-criteria-agree", True)
        return result

    def check_element(self, tally, x, sigma):
        k_fundamental = self._flavor(tally, "K", is_K_fundamental, x, sigma)
        gl_fundamental = self._flavor(tally, "GL", is_GL_fundamental, x, sigma)
        if k_fundamental is not None and gl_fundamental is not None:
            tally.record("K-implies-GL", gl_fundamental or not k_fundamental, x)
        gap = remark_gap(x, sigma)
        tally.record("remark-gap-nonnegative", gap >= 0, f"{format_element(x)}: gap {gap}")

    def check_datum(self, tally, datum, sigma, elements):
        if not self.config.check_split or datum.label != "SL2" or not sigma.is_identity():
            return
        s0, s1 = root_subsystem(datum).affine_simple
        expected = (
            ("s0-not-K", not is_K_fundamental(s0, sigma)),
            ("s0-GL", is_GL_fundamental(s0, sigma)),
            ("s1-K", is_K_fundamental(s1, sigma)),
            ("s1-not-straight", not is_straight(s1, sigma)),
        )
        for name, ok in expected:
            tally.record(f"sl2-split-{name}", ok, name)


class StraightClassesSuite(BaseSuite):
    """Newton and Kottwitz points separate the sigma-conjugacy groups of
    straight elements."""

    name = "straight-classes"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the straight-classes suite.
type: object
additionalProperties: false
properties:
  slack:
    description: >-
      Extra length allowed in the conjugation search; the global
      reachability_slack when null.
    anyOf:
      - type: integer
        minimum: 0
      - type: "null"
    default: null
"""
        )

    def setup(self, config, settings):
        self.config = config
        self.slack = settings.reachability_slack if config.slack is None else config.slack
        self.window = settings.omega_window

    def check_datum(self, tally, datum, sigma, elements):
        bound = max((x.length for x in elements), default=0)
        cap = bound + self.slack
        classes = straight_class_reps(datum, sigma, bound, self.slack, self.window)
        self.log.debug(f"{datum.label}: {len(classes)} straight classes up to length {bound}, cap {cap}.")
        for group in classes:
            for member in group.members:
                newton = newton_point(member, sigma)
                tally.record(
                    "invariants-constant",
                    newton.nu_dom == group.nu_dom and newton.kappa == group.kappa,
                    f"{format_element(member)} vs {format_element(group.representative)} (cap {cap})",
                )
        for first, second in itertools.combinations(classes, 2):
            same = first.nu_dom == second.nu_dom and first.kappa == second.kappa
            tally.record(
                "complete-invariant",
                not same,
                f"{format_element(first.representative)} and {format_element(second.representative)} share "
                f"nu = {format_vector(first.nu_dom)}, kappa = {first.kappa} (cap {cap})",
            )


def minuscule_cocharacters(datum):
    """Dominant minuscule cocharacters with coordinates in ``{0, 1}`` that
    pair non-trivially with some root."""
    simple = [datum.roots[i] for i in datum.simple_roots]
    found = []
    for mu in itertools.product((0, 1), repeat=datum.rank):
        if any(dot(root, mu) < 0 for root in simple):
            continue
        pairings = [dot(datum.roots[a], mu) for a in datum.positive_roots]
        if all(p == 0 for p in pairings) or any(abs(p) > 1 for p in pairings):
            continue
        found.append(mu)
    return sorted(found, key=lambda mu: (sum(mu), tuple(-c for c in mu)))


class MinusculeSuite(BaseSuite):
    """Every element of ``W t^mu W`` dominates a straight element of its
    sigma-conjugacy class."""

    name = "minuscule"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
description: Schema for the minuscule suite.
type: object
additionalProperties: false
properties:
  mu:
    description: >-
      Minuscule cocharacters to check; every dominant 0/1 minuscule
      cocharacter of the datum when empty.
    type: array
    items:
      type: array
      items:
        type: integer
    default: []
  slack:
    description: Extra length allowed in the conjugation search.
    type: integer
    minimum: 0
    default: 4
"""
        )

    def setup(self, config, settings):
        self.config = config

    def check_datum(self, tally, datum, sigma, elements):
        choices = [tuple(mu) for mu in self.config.mu if len(mu) == datum.rank] or minuscule_cocharacters(datum)
        for mu in choices:
            for row in minuscule_report(datum, sigma, mu, self.config.slack):
                label = f"mu={format_vector(mu)} {format_element(row.element)}"
                tally.record("conjugacy", row.conjugacy_ok, label)
                tally.record("bruhat-dominates", row.bruhat_ok, label)
