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
from fractions import Fraction

from lsst.ts import fundalc
from lsst.ts.fundalc import ExtAffWeylElement


class OraclesTestCase(unittest.TestCase):
    def setUp(self):
        self.gl2 = fundalc.build_root_datum("GL2")
        self.s = ExtAffWeylElement.from_finite(self.gl2.simple_reflections[0])
        self.tau = ExtAffWeylElement(self.gl2, (0, 1), self.gl2.simple_reflections[0])
        self.t10 = ExtAffWeylElement.from_translation(self.gl2, (1, 0))
        self.t01 = ExtAffWeylElement.from_translation(self.gl2, (0, 1))

    def test_interior_point(self):
        assert fundalc.alcove_interior_point(self.gl2) == (Fraction(-1, 2), Fraction(0))
        for key in ("SL3", "Sp4-sc", "G2-sc"):
            datum = fundalc.build_root_datum(key)
            point = fundalc.alcove_interior_point(datum)
            for a in datum.positive_roots:
                value = fundalc.dot(datum.roots[a], point)
                assert -1 < value < 0

    def test_length_oracle_agrees(self):
        for key in ("GL2", "SL3", "Sp4-ad", "G2-sc"):
            datum = fundalc.build_root_datum(key)
            for x in fundalc.enumerate_elements(datum, max_len=3, window=1):
                with self.subTest(key=key, x=x):
                    assert fundalc.length_oracle(x) == x.length

    def test_oracle_word(self):
        letters, omega = fundalc.oracle_word(self.t10)
        assert len(letters) == 1
        assert omega.length == 0
        reflections = fundalc.oracle_affine_reflections(self.gl2)
        product = ExtAffWeylElement.identity(self.gl2)
        for letter in letters:
            product = product * reflections[letter]
        assert product * omega == self.t10

    def test_oracle_affine_reflections(self):
        for key in ("GL2", "SL2", "GL3", "SL3@2", "Sp4-sc", "G2-sc", "SO8-ad"):
            datum = fundalc.build_root_datum(key)
            with self.subTest(key=key):
                reflections = fundalc.oracle_affine_reflections(datum)
                assert reflections == fundalc.simple_affine_reflections(datum)
                assert all(fundalc.length_oracle(s) == 1 for s in reflections)
        s0 = fundalc.oracle_affine_reflections(self.gl2)[0]
        assert s0 == ExtAffWeylElement(self.gl2, (-1, 1), self.gl2.simple_reflections[0])

    def test_bruhat_oracle_agrees(self):
        datum = fundalc.build_root_datum("SL3")
        elements = list(fundalc.enumerate_elements(datum, max_len=3))
        for x in elements[:12]:
            for y in elements:
                with self.subTest(x=x, y=y):
                    assert fundalc.bruhat_oracle(x, y) == fundalc.bruhat_leq(x, y)

    def test_bruhat_guard(self):
        long = ExtAffWeylElement.from_translation(self.gl2, (5, 0))
        with self.assertRaises(fundalc.CostGuardError):
            fundalc.bruhat_oracle(self.s, long, guard=4)
        assert fundalc.bruhat_oracle(self.s, long, guard=5) == fundalc.bruhat_leq(self.s, long)

    def test_class_bfs(self):
        assert fundalc.class_bfs_oracle(self.t10, length_cap=1) == {self.t10, self.t01}
        assert fundalc.class_bfs_oracle(self.t10, length_cap=0) == set()
        identity = ExtAffWeylElement.identity(self.gl2)
        assert fundalc.class_bfs_oracle(identity, length_cap=0) == {identity}

    def test_newton_limit(self):
        assert fundalc.newton_limit_oracle(self.s, n=2) == 0
        assert fundalc.newton_limit_oracle(self.tau, n=2) == 0
        assert fundalc.newton_limit_oracle(self.t10, n=3) == 1
        assert fundalc.newton_limit_oracle(self.s, n=1) == 1
        for n in (0, -2):
            with self.assertRaises(fundalc.PreconditionError):
                fundalc.newton_limit_oracle(self.s, n=n)


if __name__ == "__main__":
    unittest.main()
