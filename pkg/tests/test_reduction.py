#!/usr/bin/env python
#
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

import json
import unittest

from lsst.ts import fundalc
from lsst.ts.fundalc import ExtAffWeylElement


class ReductionTestCase(unittest.TestCase):
    def setUp(self):
        self.gl2 = fundalc.build_root_datum("GL2")
        self.sl2 = fundalc.build_root_datum("SL2")
        self.s = ExtAffWeylElement.from_finite(self.gl2.simple_reflections[0])
        self.tau = ExtAffWeylElement(self.gl2, (0, 1), self.gl2.simple_reflections[0])
        self.t10 = ExtAffWeylElement.from_translation(self.gl2, (1, 0))
        self.t01 = ExtAffWeylElement.from_translation(self.gl2, (0, 1))
        self.s0, self.s1 = fundalc.simple_affine_reflections(self.sl2)

    def test_sigma_conjugate_simple(self):
        assert fundalc.sigma_conjugate_simple(self.t10, self.s) == self.t01
        assert fundalc.sigma_conjugate_simple(self.s, self.s) == self.s
        assert fundalc.sigma_conjugate_simple(self.s0, self.s1).length == 3

    def test_twisted_conjugate(self):
        datum = fundalc.build_root_datum("SL3@2")
        s0, s1, s2 = fundalc.simple_affine_reflections(datum)
        assert fundalc.sigma_conjugate_simple(s1, s1) == s1 * s1 * s2

    def test_reduce_to_minimal(self):
        result = fundalc.reduce_to_minimal(self.tau)
        assert result.minimal == (self.tau,)

        result = fundalc.reduce_to_minimal(self.s)
        assert result.minimal == (self.s,)
        assert result.paths[self.s] == ()

        x = self.s0 * self.s1 * self.s0
        result = fundalc.reduce_to_minimal(x)
        assert result.minimal[0].length == 1
        for element, path in result.paths.items():
            assert path[-1].target == element if path else element == x
            for step in path:
                assert step.target.length <= step.source.length
        assert any(step.kind == fundalc.LENGTH_DROPPING for step in result.paths[result.minimal[0]])

    def test_reduce_with_finite_generators(self):
        result = fundalc.reduce_to_minimal(self.s0, generators="finite")
        assert result.minimal == (self.s0,)
        with self.assertRaises(fundalc.PreconditionError):
            fundalc.reduce_to_minimal(self.s0, generators="nonsense")

    def test_approx_equiv(self):
        assert fundalc.approx_equiv(self.t10, self.t10)
        assert fundalc.approx_equiv(self.t10, self.t01)
        assert not fundalc.approx_equiv(self.s1, self.s0)
        assert not fundalc.approx_equiv(self.s, self.t10 * self.s)
        assert set(fundalc.length_preserving_class(self.t10)) == {self.t10, self.t01}

    def test_straight_decomposition_straight(self):
        certificate = fundalc.straight_decomposition(self.tau)
        assert certificate.x == self.tau
        assert certificate.J == ()
        assert certificate.u.is_identity()
        assert certificate.path == ()
        assert fundalc.certificate_violations(certificate) == []

    def test_straight_decomposition(self):
        certificate = fundalc.straight_decomposition(self.s)
        assert certificate.x.is_identity()
        assert certificate.J == (1,)
        assert certificate.u == self.s
        assert fundalc.certificate_violations(certificate) == []

        certificate = fundalc.straight_decomposition(self.s0)
        assert certificate.x.is_identity()
        assert certificate.J == (0,)
        assert certificate.u == self.s0
        assert fundalc.certificate_violations(certificate) == []

    def test_straight_decomposition_enumerated(self):
        for key in ("GL2", "SL3", "SL3@2"):
            datum = fundalc.build_root_datum(key)
            for x in fundalc.enumerate_elements(datum, max_len=3, window=1):
                certificate = fundalc.straight_decomposition(x)
                assert fundalc.certificate_violations(certificate) == [], x
                assert certificate.minimal.length <= x.length

    def test_certificate_violations(self):
        certificate = fundalc.straight_decomposition(self.s)
        broken = fundalc.ReductionCertificate(
            certificate.source, certificate.path, certificate.minimal, certificate.x, certificate.J, self.t10
        )
        violations = fundalc.certificate_violations(broken)
        assert "product" in violations
        assert "u-in-parabolic" in violations

    def test_parabolic_decomposition(self):
        certificate = fundalc.parabolic_decomposition(self.s)
        assert certificate.x.is_identity()
        assert certificate.J == (1,)
        assert certificate.u == self.s

        certificate = fundalc.parabolic_decomposition(self.t10 * self.s)
        assert certificate.x * certificate.u == certificate.minimal
        assert set(certificate.J) <= {1}

    def test_parabolic_helpers(self):
        assert fundalc.in_parabolic(self.s1, (1,))
        assert not fundalc.in_parabolic(self.s0, (1,))
        assert fundalc.min_coset_representative(self.s0 * self.s1, (1,)) == self.s0
        assert fundalc.normalizes(ExtAffWeylElement.identity(self.sl2), (0,), (0,))
        assert not fundalc.normalizes(self.s1, (0,), (0,))
        datum = fundalc.build_root_datum("SL3@2")
        assert fundalc.sigma_letter_permutation(datum, datum.sigma) == (0, 2, 1)

    def test_has_regular_point(self):
        assert fundalc.has_regular_point(ExtAffWeylElement.identity(self.gl2))
        assert fundalc.has_regular_point(ExtAffWeylElement.identity(fundalc.build_root_datum("SL3")))

    def test_regular_point_is_plain_bool(self):
        identity = ExtAffWeylElement.identity(fundalc.build_root_datum("SL3"))
        assert type(fundalc.has_regular_point(identity)) is bool
        certificate = fundalc.straight_decomposition(identity)
        assert type(certificate.has_regular_point) is bool
        encoded = json.loads(json.dumps(fundalc.certificate_to_dict(certificate)))
        assert encoded["has_regular_point"] is True

    def test_conjugation_closure(self):
        assert fundalc.conjugation_closure(self.tau, cap=0) == {self.tau}
        closure = fundalc.conjugation_closure(self.t10, cap=1)
        assert closure == {self.t10, self.t01}
        assert fundalc.conjugation_closure(self.s1, cap=1, include_omega=False) == {self.s1}

    def test_straight_class_reps(self):
        classes = fundalc.straight_class_reps(self.sl2, length_bound=0)
        assert len(classes) == 1
        assert classes[0].representative.is_identity()
        assert classes[0].nu_dom == (0,)
        assert classes[0].kappa.is_zero()

        classes = fundalc.straight_class_reps(self.gl2, length_bound=1, window=1)
        members = [x for group in classes for x in group.members]
        assert len(members) == len(set(members))
        group = next(c for c in classes if self.t10 in c.members)
        assert self.t01 in group.members
        assert group.nu_dom == (1, 0)
        assert any(self.tau in c.members for c in classes)


if __name__ == "__main__":
    unittest.main()
