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


class NewtonTestCase(unittest.TestCase):
    def setUp(self):
        self.gl2 = fundalc.build_root_datum("GL2")
        self.sigma = self.gl2.sigma
        self.s = ExtAffWeylElement.from_finite(self.gl2.simple_reflections[0])
        self.tau = ExtAffWeylElement(self.gl2, (0, 1), self.gl2.simple_reflections[0])
        self.t10 = ExtAffWeylElement.from_translation(self.gl2, (1, 0))

    def test_translation(self):
        x = ExtAffWeylElement.from_translation(self.gl2, (3, -2))
        newton = fundalc.newton_point(x, self.sigma)
        assert newton.nu == (3, -2)
        assert newton.nu_dom == (3, -2)
        assert newton.period == 1
        assert newton.v_dimension == 2

    def test_tau(self):
        newton = fundalc.newton_point(self.tau)
        assert newton.nu == (Fraction(1, 2), Fraction(1, 2))
        assert newton.period == 2
        assert newton.v_dimension == 1
        assert newton.kappa == fundalc.kottwitz_point(self.tau)

    def test_gl3_omega(self):
        gl3 = fundalc.build_root_datum("GL3")
        generator = fundalc.omega_generators(gl3)[0]
        newton = fundalc.newton_point(generator)
        assert newton.period == 3
        assert len(set(newton.nu)) == 1
        assert abs(newton.nu[0]) == Fraction(1, 3)

    def test_sl2_reflection(self):
        sl2 = fundalc.build_root_datum("SL2")
        s0, s1 = fundalc.simple_affine_reflections(sl2)
        assert fundalc.newton_point(s1).nu == (0,)
        assert fundalc.newton_point(s0).nu == (0,)
        assert fundalc.newton_point(s1).v_base == (0,)

    def test_twisted(self):
        datum = fundalc.build_root_datum("SL3@2")
        x = ExtAffWeylElement.from_translation(datum, (1, 0))
        newton = fundalc.newton_point(x)
        assert newton.period == 2
        assert newton.nu == (Fraction(1, 2), Fraction(1, 2))
        assert fundalc.newton_point(x, datum.sigma.power(0)).nu == (1, 0)

    def test_v_space(self):
        for x in (self.tau, self.s, self.t10 * self.s, self.tau * self.t10):
            with self.subTest(x=x):
                newton = fundalc.newton_point(x)
                points = [newton.v_base] + [
                    tuple(b + d for b, d in zip(newton.v_base, direction)) for direction in newton.v_directions
                ]
                for point in points:
                    image = x.act(fundalc.apply_sigma(self.sigma, point))
                    assert image == tuple(p + n for p, n in zip(point, newton.nu))

    def test_orbit_average(self):
        for x in (self.tau, self.t10 * self.s):
            average = fundalc.orbit_average(x, self.sigma, (3, -7))
            nu = fundalc.newton_point(x).nu
            assert x.act(average) == tuple(a + n for a, n in zip(average, nu))

    def test_two_rho_pairing(self):
        gl3 = fundalc.build_root_datum("GL3")
        assert fundalc.two_rho_pairing(gl3, (2, 1, 0)) == 4
        assert fundalc.two_rho_pairing(gl3, (0, 1, 2)) == 4
        assert fundalc.two_rho_pairing(self.gl2, (Fraction(1, 2), Fraction(1, 2))) == 0

    def test_is_straight(self):
        assert fundalc.is_straight(self.tau)
        assert not fundalc.is_straight(self.s)
        assert fundalc.is_straight(self.t10)
        assert fundalc.is_straight(ExtAffWeylElement.identity(self.gl2))
        assert not fundalc.is_straight(self.t10 * self.s)

    def test_length_bound(self):
        for key in ("GL2", "SL3", "Sp4-sc", "SL3@2"):
            datum = fundalc.build_root_datum(key)
            for x in fundalc.enumerate_elements(datum, max_len=3, window=1):
                newton = fundalc.newton_point(x)
                assert x.length >= fundalc.two_rho_pairing(datum, newton.nu_dom)

    def test_l_permissible(self):
        all_roots = range(len(self.gl2.roots))
        for x in (self.s, self.tau, self.t10):
            permissible, witness = fundalc.l_permissible(x, self.sigma, all_roots)
            assert permissible
            assert fundalc.VDatum.from_vector(self.gl2, witness).zero == set(all_roots)

        permissible, witness = fundalc.l_permissible(ExtAffWeylElement.identity(self.gl2), self.sigma, ())
        assert permissible
        assert fundalc.VDatum.from_vector(self.gl2, witness).is_regular()

        permissible, witness = fundalc.l_permissible(self.s, self.sigma, ())
        assert not permissible
        assert witness is None

    def test_l_permissible_not_levi(self):
        gl3 = fundalc.build_root_datum("GL3")
        x = ExtAffWeylElement.identity(gl3)
        with self.assertRaises(fundalc.PreconditionError):
            fundalc.l_permissible(x, gl3.sigma, (0, 1))
        permissible, witness = fundalc.l_permissible(x, gl3.sigma, (0, gl3.negative(0)))
        assert permissible
        assert fundalc.VDatum.from_vector(gl3, witness).zero == {0, gl3.negative(0)}


if __name__ == "__main__":
    unittest.main()
