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

__all__ = ["SuiteModel", "available_suites", "ALL_SUITES", "load_config"]

import logging
import os
import pathlib
import types

import yaml

from . import suites
from .config_schema import CACHE_DIR_ENV, CONFIG_SCHEMA
from .errors import UnknownSuiteError
from .validator import DefaultingValidator

available_suites = {
    suite.name: suite
    for suite in (
        suites.FundEquivalenceSuite,
        suites.MinCertificatesSuite,
        suites.KfCriteriaSuite,
        suites.StraightClassesSuite,
        suites.MinusculeSuite,
        suites.LemmaSuite,
        suites.OracleSuite,
        suites.NewtonBoundsSuite,
        suites.DatumInvariantsSuite,
    )
}

ALL_SUITES = "all"
"""Suite name selecting every registered suite (`str`)."""


def load_config(path=None, **overrides):
    """Read and validate a configuration file.

    Parameters
    ----------
    path : `str` or `pathlib.Path`, optional
        YAML file; all defaults when omitted.
    **overrides
        Values replacing those of the file; `None` values are ignored.

    Returns
    -------
    config : `types.SimpleNamespace`
        The validated configuration with defaults filled in, and
        ``cache_dir`` taken from ``FUNDALC_CACHE_DIR`` when that is set.

    Raises
    ------
    jsonschema.ValidationError
        If the configuration does not match `CONFIG_SCHEMA`.
    """
    data = {}
    if path is not None:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    data.update({key: value for key, value in overrides.items() if value is not None})
    config_dict = DefaultingValidator(CONFIG_SCHEMA).validate(data)
    if os.environ.get(CACHE_DIR_ENV):
        config_dict["cache_dir"] = os.environ[CACHE_DIR_ENV]
    config_dict["cache_dir"] = str(pathlib.Path(config_dict["cache_dir"]).expanduser())
    return types.SimpleNamespace(**config_dict)


class SuiteModel:
    """Build and configure verification suites by name."""

    def __init__(self):
        self.log = logging.getLogger(__name__)
        self.suites = {}

    @staticmethod
    def resolve(names):
        """Expand `ALL_SUITES` and check that every name is registered.

        Raises
        ------
        UnknownSuiteError
            If a name is not registered.
        """
        resolved = []
        for name in names:
            if name == ALL_SUITES:
                resolved += [n for n in available_suites if n not in resolved]
                continue
            if name not in available_suites:
                known = ", ".join(sorted(available_suites))
                raise UnknownSuiteError(f"Unknown suite {name!r}; known suites: {known}, {ALL_SUITES}.")
            if name not in resolved:
                resolved.append(name)
        return resolved

    def setup(self, names, settings):
        """Create and configure the named suites.

        Parameters
        ----------
        names : `list` [`str`]
            Suite names, or `ALL_SUITES`.
        settings : `types.SimpleNamespace`
            Global configuration; ``settings.suites`` holds one block per
            suite.

        Raises
        ------
        UnknownSuiteError
            If a name is not registered.
        jsonschema.ValidationError
            If a suite block does not match the suite's schema.
        """
        if self.suites:
            self.log.warning("Suites already set. Unsetting.")
            self.suites = {}
        for name in self.resolve(names):
            suite = available_suites[name]()
            block = settings.suites.get(name, {})
            validator = DefaultingValidator(suite.get_config_schema())
            config_dict = validator.validate(block)
            suite.setup(types.SimpleNamespace(**config_dict), settings)
            self.suites[name] = suite
        return self.suites
