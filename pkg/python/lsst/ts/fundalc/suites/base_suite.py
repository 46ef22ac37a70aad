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

__all__ = ["BaseSuite", "PropertyResult", "PropertyTally", "merge_results", "element_rng"]

import abc
import asyncio
import dataclasses
import logging
import traceback
import zlib

import numpy as np

from ..literals import format_element

UNEXPECTED_EXCEPTION = "unexpected-exception"
"""Property recorded when a check raises (`str`)."""


@dataclasses.dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property over a set of checks.

    Attributes
    ----------
    suite : `str`
    datum : `str`
        Datum label.
    property : `str`
    checked : `int`
        Number of instances checked.
    failures : `int`
        Number of failing instances.
    counterexample : `str`
        First failing instance, empty when there is none.
    informational : `bool`
        Recorded for information only; failures do not fail the run.
    """

    suite: str
    datum: str
    property: str
    checked: int
    failures: int
    counterexample: str = ""
    informational: bool = False

    @property
    def failed(self):
        return self.failures > 0 and not self.informational

    def sort_key(self):
        return (self.suite, self.datum, self.property)


class PropertyTally:
    """Accumulate property checks for one suite and datum."""

    def __init__(self, suite, datum):
        self.suite = suite
        self.datum = datum
        self.counts = {}
        self.informational = set()

    def record(self, name, ok, example=None, informational=False):
        """Count one check of ``name``; ``example`` (an element or a string)
        is formatted only for the first failure."""
        checked, failures, counterexample = self.counts.get(name, (0, 0, ""))
        checked += 1
        if not ok:
            failures += 1
            if not counterexample and example is not None:
                counterexample = example if isinstance(example, str) else format_element(example)
        self.counts[name] = (checked, failures, counterexample)
        if informational:
            self.informational.add(name)

    def results(self):
        return [
            PropertyResult(self.suite, self.datum, name, *counts, informational=name in self.informational)
            for name, counts in sorted(self.counts.items())
        ]


def element_rng(seed, x):
    """Random generator seeded by ``seed`` and the canonical literal of
    ``x``, so sampled checks do not depend on sharding."""
    return np.random.default_rng([seed % 2**32, zlib.crc32(format_element(x).encode())])


def merge_results(results):
    """Sum shard results per ``(suite, datum, property)``.

    Shards are merged in the order given; the first counterexample wins.

    Returns
    -------
    merged : `list` [`PropertyResult`]
        Sorted by suite, datum and property.
    """
    merged = {}
    for result in results:
        key = result.sort_key()
        previous = merged.get(key)
        if previous is None:
            merged[key] = result
            continue
        merged[key] = dataclasses.replace(
            previous,
            checked=previous.checked + result.checked,
            failures=previous.failures + result.failures,
            counterexample=previous.counterexample or result.counterexample,
            informational=previous.informational and result.informational,
        )
    return [merged[key] for key in sorted(merged)]


class BaseSuite(abc.ABC):
    """Base class for verification suites.

    A suite checks a family of properties on one root datum. Per-element
    properties go in `check_element`, which `run` calls for every element
    of a shard; properties of the datum as a whole go in `check_datum`,
    which `run_global` calls once with the full enumeration.

    When developing a suite, subclass this class, give it a ``name`` and
    overwrite `get_config_schema`, `setup` and one or both check methods.
    """

    name = ""
    yield_every = 50

    def __init__(self):
        self.log = logging.getLogger(type(self).__name__)
        self.config = None

    @abc.abstractmethod
    def get_config_schema(self):
        """Get the configuration schema for this suite.

        Returns
        -------
        `dict`
            The configuration schema in yaml format.
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def setup(self, config, settings):
        """Configure the suite.

        Parameters
        ----------
        config : `types.SimpleNamespace`
            The suite block, validated against `get_config_schema`.
        settings : `types.SimpleNamespace`
            The global configuration.
        """
        raise NotImplementedError()

    def check_element(self, tally, x, sigma):
        """Record the per-element properties of ``x``."""

    def check_datum(self, tally, datum, sigma, elements):
        """Record the properties of ``datum`` as a whole."""

    def _guarded(self, tally, label, check, *args):
        try:
            check(tally, *args)
        except Exception:
            error_msg = f"Error in suite {self.name} while checking {label}."
            self.log.exception(error_msg)
            tally.record(UNEXPECTED_EXCEPTION, False, f"{label}: {traceback.format_exc()}")

    async def run(self, datum, sigma, elements):
        """Check every element of ``elements``.

        Returns
        -------
        results : `list` [`PropertyResult`]
        """
        tally = PropertyTally(self.name, datum.label)
        for i, x in enumerate(elements):
            self._guarded(tally, format_element(x), self.check_element, x, sigma)
            if i % self.yield_every == 0:
                await asyncio.sleep(0)
        return tally.results()

    async def run_global(self, datum, sigma, elements):
        """Check the properties of ``datum`` as a whole.

        Returns
        -------
        results : `list` [`PropertyResult`]
        """
        tally = PropertyTally(self.name, datum.label)
        self._guarded(tally, datum.label, self.check_datum, datum, sigma, list(elements))
        return tally.results()
