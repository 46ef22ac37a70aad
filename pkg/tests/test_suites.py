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

import os
import pathlib
import types
import unittest
from unittest import mock

import jsonschema
import yaml

from lsst.ts import fundalc
from lsst.ts.fundalc.suites.base_suite import UNEXPECTED_EXCEPTION

TEST_CONFIG_DIR = pathlib.Path(__file__).parent / "data" / "config"


class CrashingSuite(fundalc.BaseSuite):
    name = "crashing"

    def get_config_schema(self):
        return yaml.safe_load(
            """
$schema: http://json-schema.org/draft-07/schema#
type: object
additionalProperties: false
properties: {}
"""
        )

    def setup(self, config, settings):
        self.config = config

    def check_element(self, tally, x, sigma):
        tally.record("length-zero", x.length == 0, x)
        if x.length > 0:
            raise RuntimeError("deliberate failure")


class BrokenGlobalSuite(CrashingSuite):
    name = "broken-global"

    def check_element(self, tally, x, sigma):
        tally.record("length-zero", True)

    async def run_global(self, datum, sigma, elements):
        raise RuntimeError("deliberate failure")


class ConfigTestCase(unittest.TestCase):
    def test_defaults(self):
        with mock.patch.dict(os.environ, {fundalc.CACHE_DIR_ENV: ""}):
            config = fundalc.load_config()
        assert config.use_cache
        assert config.omega_window == 2
        assert config.jobs == 1
        assert config.bruhat_cost_guard == 14
        assert config.suites == {}
        assert config.cache_dir == str(pathlib.Path("~/.cache/fundalc").expanduser())

    def test_file_and_overrides(self):
        path = TEST_CONFIG_DIR / "_init.yaml"
        config = fundalc.load_config(path)
        assert not config.use_cache
        assert config.omega_window == 1
        assert config.random_seed == 7
        assert config.suites["lemmas"]["exhaustive_max_len"] == 3

        config = fundalc.load_config(path, omega_window=3, jobs=None)
        assert config.omega_window == 3
        assert config.jobs == 1

    def test_cache_dir_env(self):
        with mock.patch.dict(os.environ, {fundalc.CACHE_DIR_ENV: "/tmp/fundalc-cache"}):
            config = fundalc.load_config(cache_dir="/elsewhere")
        assert config.cache_dir == "/tmp/fundalc-cache"

    def test_invalid(self):
        with self.assertRaises(jsonschema.ValidationError):
            fundalc.load_config(omega_window=-1)
        with self.assertRaises(jsonschema.ValidationError):
            fundalc.load_config(jobs=0)
        with self.assertRaises(jsonschema.ValidationError):
            fundalc.load_config(no_such_setting=True)


class SuiteModelTestCase(unittest.TestCase):
    def test_resolve(self):
        everything = fundalc.SuiteModel.resolve([fundalc.ALL_SUITES])
        assert everything == list(fundalc.available_suites)
        assert len(everything) == 9
        assert fundalc.SuiteModel.resolve(["oracles", "lemmas", "oracles"]) == ["oracles", "lemmas"]
        assert fundalc.SuiteModel.resolve(["oracles", "all"])[0] == "oracles"
        with self.assertRaises(fundalc.UnknownSuiteError) as cm:
            fundalc.SuiteModel.resolve(["no-such-suite"])
        assert "no-such-suite" in str(cm.exception)

    def test_setup(self):
        settings = fundalc.load_config(TEST_CONFIG_DIR / "_init.yaml")
        model = fundalc.SuiteModel()
        suites = model.setup(["lemmas", "newton-bounds"], settings)
        assert suites["lemmas"].config.exhaustive_max_len == 3
        assert suites["lemmas"].config.bruhat_samples == 2
        assert suites["newton-bounds"].config.max_power == 6
        assert suites["newton-bounds"].config.conjugator_length == 3

        with self.assertLogs(level="WARNING"):
            suites = model.setup(["oracles"], settings)
        assert list(suites) == ["oracles"]

    def test_setup_invalid_block(self):
        settings = fundalc.load_config(suites={"lemmas": {"sample_fraction": 2}})
        with self.assertRaises(jsonschema.ValidationError):
            fundalc.SuiteModel().setup(["lemmas"], settings)

    def test_schemas(self):
        for name, suite_class in fundalc.available_suites.items():
            with self.subTest(name=name):
                suite = suite_class()
                assert suite.name == name
                config = fundalc.DefaultingValidator(suite.get_config_schema()).validate({})
                assert isinstance(config, dict)


class TallyTestCase(unittest.TestCase):
    def test_tally(self):
        gl2 = fundalc.build_root_datum("GL2")
        x = fundalc.parse_element("t[1,0]*s1", gl2)
        tally = fundalc.PropertyTally("suite", "GL2")
        tally.record("b", True)
        tally.record("b", False, x)
        tally.record("b", False, "second")
        tally.record("a", False, "first", informational=True)
        results = tally.results()
        assert [r.property for r in results] == ["a", "b"]
        a, b = results
        assert (b.checked, b.failures, b.counterexample) == (3, 2, "t[1,0]*s1")
        assert b.failed
        assert a.informational
        assert not a.failed
        assert fundalc.runner.exit_code(results) == fundalc.EXIT_PROPERTY_FAILURE
        assert fundalc.runner.exit_code([a]) == fundalc.EXIT_OK

    def test_merge(self):
        results = [
            fundalc.PropertyResult("s", "GL2", "p", 3, 0),
            fundalc.PropertyResult("s", "GL2", "p", 2, 1, "first"),
            fundalc.PropertyResult("s", "GL2", "p", 1, 1, "second"),
            fundalc.PropertyResult("r", "GL2", "q", 1, 0),
        ]
        merged = fundalc.merge_results(results)
        assert [r.suite for r in merged] == ["r", "s"]
        assert merged[1] == fundalc.PropertyResult("s", "GL2", "p", 6, 2, "first")

    def test_element_rng(self):
        gl2 = fundalc.build_root_datum("GL2")
        x = fundalc.parse_element("s1", gl2)
        first = fundalc.element_rng(3, x).integers(1000, size=5)
        second = fundalc.element_rng(3, x).integers(1000, size=5)
        assert list(first) == list(second)


class SuiteRunTestCase(unittest.IsolatedAsyncioTestCase):
    async def test_guarded_check(self):
        datum = fundalc.build_root_datum("SL2")
        elements = list(fundalc.enumerate_elements(datum, max_len=1))
        suite = CrashingSuite()
        with self.assertLogs("CrashingSuite", level="ERROR"):
            results = await suite.run(datum, datum.sigma, elements)
        by_name = {r.property: r for r in results}
        assert by_name["length-zero"].checked == 3
        assert by_name["length-zero"].failures == 2
        crash = by_name[UNEXPECTED_EXCEPTION]
        assert crash.failures == 2
        assert crash.counterexample.startswith("t[-1]*s1: ")
        assert "deliberate failure" in crash.counterexample

    async def test_run_global_default(self):
        datum = fundalc.build_root_datum("SL2")
        assert await CrashingSuite().run_global(datum, datum.sigma, []) == []


class VerificationRunnerTestCase(unittest.IsolatedAsyncioTestCase):
    def setUp(self):
        self.settings = fundalc.load_config(TEST_CONFIG_DIR / "_init.yaml")

    async def test_suites_pass(self):
        runner = fundalc.VerificationRunner(self.settings)
        names = ["fund-equivalence", "kf-criteria", "datum-invariants", "oracles"]
        results = await runner.verify(names, ["GL2", "SL2"], 2)
        failed = [r for r in results if r.failed]
        assert failed == []
        assert fundalc.runner.exit_code(results) == fundalc.EXIT_OK
        assert results == sorted(results, key=lambda r: r.sort_key())
        assert {r.suite for r in results} == set(names)
        assert {r.datum for r in results} == {"GL2", "SL2"}
        properties = {(r.suite, r.datum, r.property) for r in results}
        assert ("kf-criteria", "SL2", "sl2-split-s0-not-K") in properties
        assert ("fund-equivalence", "GL2", "witness-iff-straight") in properties
        assert ("datum-invariants", "SL2", "datum-axioms") in properties

    async def test_twisted(self):
        runner = fundalc.VerificationRunner(self.settings)
        results = await runner.verify(["fund-equivalence", "min-certificates"], ["SL3@2"], 2)
        assert [r for r in results if r.failed] == []
        assert {r.datum for r in results} == {"SL3@2"}

    async def test_all_suites_run(self):
        runner = fundalc.VerificationRunner(self.settings)
        results = await runner.verify([fundalc.ALL_SUITES], ["SL2"], 2)
        assert [r for r in results if r.property == UNEXPECTED_EXCEPTION] == []
        assert {r.suite for r in results} >= {"lemmas", "newton-bounds", "straight-classes", "oracles"}
        assert all(r.checked > 0 for r in results)

    async def test_jobs_do_not_change_results(self):
        single = await fundalc.VerificationRunner(self.settings).verify(["fund-equivalence"], ["SL2"], 2)
        settings = types.SimpleNamespace(**{**vars(self.settings), "jobs": 2})
        pooled = await fundalc.VerificationRunner(settings).verify(["fund-equivalence"], ["SL2"], 2)
        assert pooled == single

    async def test_unknown(self):
        runner = fundalc.VerificationRunner(self.settings)
        with self.assertRaises(fundalc.UnknownSuiteError):
            await runner.verify(["no-such-suite"], ["GL2"], 1)
        with self.assertRaises(fundalc.CatalogueError):
            await runner.verify(["oracles"], ["XY3"], 1)
        with self.assertRaises(fundalc.CatalogueError):
            await runner.verify(["oracles"], ["GL2-sc"], 1)

    async def test_crashes_are_recorded(self):
        suites = {"crashing": CrashingSuite, "broken-global": BrokenGlobalSuite}
        with mock.patch.dict(fundalc.model.available_suites, suites):
            runner = fundalc.VerificationRunner(self.settings)
            with self.assertLogs(level="ERROR"):
                results = await runner.verify(["crashing", "broken-global"], ["SL2"], 1)
        crashes = {r.suite: r for r in results if r.property == UNEXPECTED_EXCEPTION}
        assert set(crashes) == {"crashing", "broken-global"}
        assert crashes["broken-global"].failures == 1
        assert "deliberate failure" in crashes["broken-global"].counterexample
        assert fundalc.runner.exit_code(results) == fundalc.EXIT_PROPERTY_FAILURE


if __name__ == "__main__":
    unittest.main()
