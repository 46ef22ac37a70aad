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
from lsst.ts.fundalc import ExtAffWeylElement, Hyperplane, VDatum


class AlcoveTestCase(unittest.TestCase):
    def setUp(self):
        self.gl2 = fundalc.build_root_datum("GL2")
        self.sigma = self.gl2.sigma
        self.identity = ExtAffWeylElement.identity(self.gl2)
        self.s = ExtAffWeylElement.from_finite(self.gl2.simple_reflections[0])
        self.tau = ExtAffWeylElement(self.gl2, (0, 1), self.gl2.simple_reflections[0])
        self.t10 = ExtAffWeylElement.from_translation(self.gl2, (1, 0))
        self.t01 = ExtAffWeylElement.from_translation(self.gl2, (0, 1))
        self.v0 = VDatum.from_vector(self.gl2, (0, 0))
        self.v10 = VDatum.from_vector(self.gl2, (1, 0))

    def test_vdatum(self):
        assert self.v0.zero == {0, 1}
        assert not self.v0.plus
        assert self.v10.plus == {0}
        assert self.v10.is_regular()
        assert VDatum.from_vector(self.gl2, (Fraction(1, 2), Fraction(1, 2))).pattern == self.v0.pattern

    def test_alcove_ge(self):
        assert fundalc.alcove_ge(self.t10, self.t10, 0)
        assert fundalc.alcove_ge(self.t10, self.identity, 0)
        assert not fundalc.alcove_ge(self.t01, self.identity, 0)

    def test_is_p_alcove(self):
        for x in (self.identity, self.s, self.tau, self.t01):
            assert fundalc.is_p_alcove(x, self.sigma, self.v0)
        assert fundalc.is_p_alcove(self.t10, self.sigma, self.v10)
        assert not fundalc.is_p_alcove(self.t01, self.sigma, self.v10)
        assert not fundalc.is_p_alcove(self.s, self.sigma, self.v10)

    def test_relative_length(self):
        assert fundalc.relative_length(self.t10, self.sigma, self.v10) == 0
        assert fundalc.relative_length(self.s, self.sigma, self.v0) == 1
        half = VDatum.from_vector(self.gl2, (Fraction(1, 2), Fraction(1, 2)))
        assert fundalc.relative_length(self.tau, self.sigma, half) == 0
        with self.assertRaises(fundalc.PreconditionError):
            gl3 = fundalc.build_root_datum("GL3")
            x = ExtAffWeylElement.from_finite(gl3.simple_reflections[1])
            fundalc.relative_length(x, gl3.sigma, VDatum.from_vector(gl3, (1, 1, 0)))

    def test_is_p_fundamental(self):
        assert fundalc.is_p_fundamental(self.tau, self.sigma, self.v0)
        assert fundalc.is_p_fundamental(self.t10, self.sigma, self.v10)
        assert not fundalc.is_p_fundamental(self.s, self.sigma, self.v0)
        assert not fundalc.is_p_fundamental(self.t10, self.sigma, self.v0)

    def test_face_v_data(self):
        assert len(fundalc.face_v_data(self.gl2)) == 3
        # 13 faces of the A2 Coxeter fan: the origin, 6 rays and 6 chambers.
        assert len(fundalc.face_v_data(fundalc.build_root_datum("SL3"))) == 13

    def test_stable_v_data(self):
        data = fundalc.stable_v_data(self.identity)
        assert len(data) == 3
        assert not any(data[0].v)
        assert len(fundalc.stable_v_data(self.s)) == 1
        for x in (self.tau, self.t10 * self.s):
            data = fundalc.stable_v_data(x)
            assert data[0].zero == self.v0.zero

    def test_stable_v_data_fixed(self):
        datum = fundalc.build_root_datum("SL3@2")
        x = ExtAffWeylElement.identity(datum)
        for vd in fundalc.stable_v_data(x):
            assert fundalc.apply_sigma(datum.sigma, vd.v) == vd.v
            assert fundalc.is_face_stable(x, datum.sigma, vd)

    def test_find_p_alcove_witness(self):
        vd = fundalc.find_p_alcove_witness(self.t10, self.sigma, frozenset())
        assert vd.v == (1, 0)
        assert fundalc.find_p_alcove_witness(self.s, self.sigma, frozenset()) is None
        vd = fundalc.find_p_alcove_witness(self.s)
        assert vd.zero == self.v0.zero

    def test_transport_and_walls(self):
        vd = fundalc.transport_v_datum(self.v10, self.s, self.gl2)
        assert vd.v == (0, 1)
        assert vd.plus == {1}
        assert fundalc.levi_walls(self.v0, self.gl2) == {Hyperplane(0, -1), Hyperplane(0, 0)}
        assert fundalc.levi_walls(self.v10, self.gl2) == frozenset()
        assert fundalc.map_hyperplane(self.identity, Hyperplane(0, 2)) == Hyperplane(0, 2)
        assert fundalc.map_hyperplane(self.t10, Hyperplane(0, 0)) == Hyperplane(0, 1)
        assert fundalc.map_hyperplane(self.s, Hyperplane(0, 1)) == Hyperplane(0, -1)


if __name__ == "__main__":
    unittest.main()
