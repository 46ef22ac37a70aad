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

import unittest

from lsst.ts import fundalc
from lsst.ts.fundalc import ExtAffWeylElement


class AffineWeylTestCase(unittest.TestCase):
    def setUp(self):
        self.gl2 = fundalc.build_root_datum("GL2")
        self.sl2 = fundalc.build_root_datum("SL2")
        self.s = ExtAffWeylElement.from_finite(self.gl2.simple_reflections[0])
        self.tau = ExtAffWeylElement(self.gl2, (0, 1), self.gl2.simple_reflections[0])
        self.s0, self.s1 = fundalc.simple_affine_reflections(self.sl2)

    def translation(self, *values):
        datum = self.gl2 if len(values) == 2 else self.sl2
        return ExtAffWeylElement.from_translation(datum, values)

    def test_group_law(self):
        t10 = self.translation(1, 0)
        t01 = self.translation(0, 1)
        assert t10 * t01 == self.translation(1, 1)
        assert self.s * t10 * self.s.inverse() == t01
        for x in (t10, self.s, self.tau, self.tau * t10 * self.s):
            assert (x * x.inverse()).is_identity()
            assert fundalc.multiply(x, fundalc.invert(x)) == ExtAffWeylElement.identity(self.gl2)
        assert self.tau**3 == self.tau * self.tau * self.tau
        assert (self.tau**-2) * self.tau**2 == ExtAffWeylElement.identity(self.gl2)

    def test_mismatch(self):
        with self.assertRaises(fundalc.DatumMismatchError):
            self.s * self.s0
        with self.assertRaises(fundalc.DatumMismatchError):
            ExtAffWeylElement.from_translation(self.gl2, (1, 2, 3))
        with self.assertRaises(fundalc.DatumMismatchError):
            fundalc.bruhat_leq(self.s, self.s0)

    def test_m_vector(self):
        assert fundalc.m_vector(ExtAffWeylElement.identity(self.gl2)) == (-1,)
        assert fundalc.m_vector(self.tau) == (-1,)
        assert fundalc.m_vector(self.translation(1, 0) * self.s) == (1,)
        assert fundalc.m_vector(self.translation(1, 0)) == (0,)

    def test_length(self):
        assert fundalc.length(self.tau) == 0
        assert fundalc.length(self.s0) == 1
        assert fundalc.length(self.translation(1, 0)) == 1
        assert fundalc.length(self.translation(0, 1)) == 1
        assert fundalc.length(self.translation(3, 1)) == 2
        assert fundalc.length(self.translation(1, 1)) == 0
        assert fundalc.length(self.s0 * self.s1 * self.s0) == 3

    def test_simple_affine_reflections(self):
        assert self.s0.translation == (-1,)
        assert self.s0.finite == self.sl2.simple_reflections[0]
        assert self.s1 == ExtAffWeylElement.from_finite(self.sl2.simple_reflections[0])
        assert len(fundalc.simple_affine_reflections(fundalc.build_root_datum("GL3"))) == 3
        for key in ("SL3", "Sp4-sc", "G2-sc", "GL3@2"):
            with self.subTest(key=key):
                for s in fundalc.simple_affine_reflections(fundalc.build_root_datum(key)):
                    assert s.length == 1
                    assert (s * s).is_identity()

    def test_reduced_word(self):
        word = fundalc.reduced_word(self.tau)
        assert word.letters == ()
        assert word.omega == self.tau

        x = self.translation(-1)
        for policy in ("first", "last"):
            word = fundalc.reduced_word(x, policy)
            assert len(word.letters) == 2
            assert word.omega.is_identity()
            assert word.product() == x

        word = fundalc.reduced_word(self.translation(1, 1))
        assert word.letters == ()
        assert word.omega == self.translation(1, 1)

        with self.assertRaises(fundalc.PreconditionError):
            fundalc.reduced_word(x, "middle")

    def test_reduced_word_products(self):
        datum = fundalc.build_root_datum("Sp4-ad")
        for x in fundalc.enumerate_elements(datum, max_len=3):
            word = fundalc.reduced_word(x, "last")
            assert len(word.letters) == x.length
            assert word.product() == x
            assert fundalc.omega_part(x).length == 0

    def test_omega_elements(self):
        assert len(fundalc.omega_elements(self.sl2)) == 1
        pgl2 = fundalc.omega_elements(fundalc.build_root_datum("PGL2"))
        assert len(pgl2) == 2
        assert all(x.length == 0 for x in pgl2)
        assert len(fundalc.omega_elements(fundalc.build_root_datum("G2-sc"))) == 1
        assert len(fundalc.omega_elements(fundalc.build_root_datum("PGL3"))) == 3

        window = fundalc.omega_elements(self.gl2, 1)
        assert len(window) == 3
        assert all(x.length == 0 for x in window)
        assert self.tau in window or self.tau.inverse() in window

    def test_fundamental_group(self):
        assert fundalc.fundamental_group(self.sl2).order == 1
        assert fundalc.fundamental_group(fundalc.build_root_datum("SO8-ad")).order == 4
        assert not fundalc.fundamental_group(self.gl2).is_finite

    def test_bruhat_leq(self):
        identity = ExtAffWeylElement.identity(self.sl2)
        s0s1 = self.s0 * self.s1
        assert fundalc.bruhat_leq(s0s1, s0s1)
        assert fundalc.bruhat_leq(identity, s0s1)
        assert not fundalc.bruhat_leq(self.s1, self.s0)
        assert fundalc.bruhat_leq(self.s1, self.s0 * self.s1 * self.s0)
        assert not fundalc.bruhat_leq(s0s1, self.s1)

        omega = [x for x in fundalc.omega_elements(fundalc.build_root_datum("PGL2")) if not x.is_identity()]
        pgl2_identity = ExtAffWeylElement.identity(omega[0].datum)
        assert not fundalc.bruhat_leq(pgl2_identity, omega[0])

    def test_bruhat_lower_interval(self):
        interval = fundalc.bruhat_lower_interval(self.s0 * self.s1)
        assert interval == {ExtAffWeylElement.identity(self.sl2), self.s0, self.s1, self.s0 * self.s1}

    def test_kottwitz_point(self):
        t10 = self.translation(1, 0)
        assert fundalc.kottwitz_point(ExtAffWeylElement.identity(self.gl2)).is_zero()
        assert fundalc.kottwitz_point(t10) == fundalc.kottwitz_point(self.tau)
        assert not fundalc.kottwitz_point(t10).is_zero()
        assert fundalc.kottwitz_point(t10 * self.tau) == fundalc.kottwitz_point(t10) + fundalc.kottwitz_point(
            self.tau
        )
        assert fundalc.kottwitz_point(self.s * t10 * self.s) == fundalc.kottwitz_point(t10)

    def test_twisted_kottwitz_point(self):
        datum = fundalc.build_root_datum("GL3@2")
        x = ExtAffWeylElement.from_translation(datum, (1, 0, 0))
        y = ExtAffWeylElement.from_translation(datum, (0, 0, -1))
        # (1 - sigma) X_* contains (1, 0, 1).
        assert fundalc.kottwitz_point(x) == fundalc.kottwitz_point(y)

    def test_affine_root(self):
        assert fundalc.AffineRoot(self.sl2, 0, 0).is_positive()
        assert not fundalc.AffineRoot(self.sl2, 1, 0).is_positive()
        assert fundalc.AffineRoot(self.sl2, 1, 1).is_positive()
        assert -fundalc.AffineRoot(self.sl2, 0, 1) == fundalc.AffineRoot(self.sl2, 1, -1)

    def test_twisted_power(self):
        x = self.translation(1, 0) * self.s
        assert fundalc.twisted_power(x, self.gl2.sigma, 3) == x**3
        datum = fundalc.build_root_datum("SL3@2")
        s0, s1, s2 = fundalc.simple_affine_reflections(datum)
        assert fundalc.twisted_power(s1, datum.sigma, 2) == s1 * s2

    def test_root_subsystem(self):
        gl3 = fundalc.build_root_datum("GL3")
        system = fundalc.root_subsystem(gl3)
        assert len(system.components) == 1
        assert system.finite_letters == (1, 2)
        assert system.is_finite_subset((0, 1))
        assert not system.is_finite_subset((0, 1, 2))
        levi = fundalc.root_subsystem(gl3, frozenset({0, gl3.negative(0)}))
        assert levi.simple == (0,)
        assert len(levi.affine_simple) == 2
        assert levi.length(ExtAffWeylElement.from_finite(gl3.simple_reflections[1])) == 0
        with self.assertRaises(fundalc.PreconditionError):
            fundalc.root_subsystem(gl3, frozenset({0}))


if __name__ == "__main__":
    unittest.main()
