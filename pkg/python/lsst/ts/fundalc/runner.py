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

__all__ = ["VerificationRunner", "EXIT_OK", "EXIT_PROPERTY_FAILURE", "EXIT_USAGE_ERROR", "exit_code"]

import asyncio
import concurrent.futures
import functools
import logging
import traceback
import types

from .cache import EnumerationCache
from .enumeration import enumerate_elements
from .model import SuiteModel
from .root_datum import build_root_datum
from .suites.base_suite import UNEXPECTED_EXCEPTION, PropertyResult, merge_results

EXIT_OK = 0
"""Every property held (`int`)."""
EXIT_PROPERTY_FAILURE = 1
"""Some property failed or a check raised (`int`).

Also returned when a certificate or classification search fails outside
a suite.
"""
EXIT_USAGE_ERROR = 2
"""Bad arguments, unknown datum, suite or element, or an invalid
configuration (`int`)."""

GLOBAL_SHARD = -1
"""Shard index for the whole-datum checks of a suite (`int`)."""


def exit_code(results):
    """`EXIT_PROPERTY_FAILURE` if any result failed, else `EXIT_OK`."""
    return EXIT_PROPERTY_FAILURE if any(r.failed for r in results) else EXIT_OK


def _elements(datum, sigma, max_len, settings):
    cache = EnumerationCache(settings.cache_dir) if settings.use_cache else None
    return list(enumerate_elements(datum, sigma, max_len, settings.omega_window, cache))


async def _run_suite_shard(suite, datum, sigma, elements, shard, shard_count):
    if shard == GLOBAL_SHARD:
        return await suite.run_global(datum, sigma, elements)
    return await suite.run(datum, sigma, elements[shard::shard_count])


def run_shard(suite_name, settings_dict, datum_key, sigma_power, max_len, shard, shard_count):
    """Run one shard of a suite in a worker process.

    Everything is rebuilt from plain arguments so the call can be sent to
    a process pool.

    Returns
    -------
    results : `list` [`PropertyResult`]
    """
    settings = types.SimpleNamespace(**settings_dict)
    suite = SuiteModel().setup([suite_name], settings)[suite_name]
    datum = build_root_datum(datum_key)
    sigma = datum.sigma.power(sigma_power)
    elements = _elements(datum, sigma, max_len, settings)
    return asyncio.run(_run_suite_shard(suite, datum, sigma, elements, shard, shard_count))


class VerificationRunner:
    """Run verification suites over root data, in process or sharded over a
    process pool.

    Parameters
    ----------
    settings : `types.SimpleNamespace`
        Configuration as returned by `load_config`.
    """

    def __init__(self, settings):
        self.log = logging.getLogger(type(self).__name__)
        self.settings = settings
        self.model = SuiteModel()

    async def verify(self, names, datum_keys, max_len, sigma_power=1):
        """Run the named suites on every datum.

        Parameters
        ----------
        names : `list` [`str`]
            Suite names, or ``"all"``.
        datum_keys : `list` [`str`]
            Catalogue keys or datum files.
        max_len : `int`
            Length bound of the enumeration.
        sigma_power : `int`, optional
            Use this power of each datum's sigma.

        Returns
        -------
        results : `list` [`PropertyResult`]
            Merged and sorted, independent of the number of jobs.

        Raises
        ------
        UnknownSuiteError
            If a suite is not registered.
        CatalogueError
            If a datum key is unknown.
        jsonschema.ValidationError
            If a suite block is invalid.
        """
        suites = self.model.setup(names, self.settings)
        data = [build_root_datum(key) for key in datum_keys]
        tasks = [
            (name, key, datum, shard)
            for key, datum in zip(datum_keys, data)
            for name in suites
            for shard in [GLOBAL_SHARD] + list(range(self.settings.jobs))
        ]
        if self.settings.jobs == 1:
            results = await self._run_inline(suites, tasks, max_len, sigma_power)
        else:
            results = await self._run_pool(tasks, max_len, sigma_power)
        return merge_results(results)

    async def _run_inline(self, suites, tasks, max_len, sigma_power):
        results = []
        elements = {}
        for name, key, datum, shard in tasks:
            sigma = datum.sigma.power(sigma_power)
            try:
                if key not in elements:
                    elements[key] = _elements(datum, sigma, max_len, self.settings)
                results += await _run_suite_shard(suites[name], datum, sigma, elements[key], shard, 1)
            except Exception:
                error_msg = f"Error running suite {name} on {datum.label}."
                self.log.exception(error_msg)
                results.append(self._crash(name, datum.label, traceback.format_exc()))
        return results

    async def _run_pool(self, tasks, max_len, sigma_power):
        loop = asyncio.get_running_loop()
        settings_dict = vars(self.settings)
        with concurrent.futures.ProcessPoolExecutor(max_workers=self.settings.jobs) as pool:
            futures = [
                loop.run_in_executor(
                    pool,
                    functools.partial(
                        run_shard, name, settings_dict, key, sigma_power, max_len, shard, self.settings.jobs
                    ),
                )
                for name, key, _, shard in tasks
            ]
            outcomes = await asyncio.gather(*futures, return_exceptions=True)
        results = []
        for (name, _, datum, _), outcome in zip(tasks, outcomes):
            if isinstance(outcome, BaseException):
                report = "".join(traceback.format_exception(type(outcome), outcome, outcome.__traceback__))
                self.log.error(f"Error running suite {name} on {datum.label}:\n{report}")
                results.append(self._crash(name, datum.label, report))
            else:
                results += outcome
        return results

    @staticmethod
    def _crash(name, label, report):
        return PropertyResult(name, label, UNEXPECTED_EXCEPTION, 1, 1, report)
