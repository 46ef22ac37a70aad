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

__all__ = ["CONFIG_SCHEMA", "CACHE_DIR_ENV"]

import yaml

CACHE_DIR_ENV = "FUNDALC_CACHE_DIR"
"""Environment variable overriding ``cache_dir`` (`str`)."""

CONFIG_SCHEMA = yaml.safe_load(
    """
  $schema: http://json-schema.org/draft-07/schema#
  $id: https://github.com/lsst-ts/ts_fundalc/blob/main/python/lsst/ts/fundalc/config_schema.py  # noqa
  title: fundalc v1
  description: Schema for fundalc configuration files
  type: object
  additionalProperties: false
  properties:
    cache_dir:
      description: >-
        Directory holding enumeration cache files.
        The FUNDALC_CACHE_DIR environment variable takes precedence.
      type: string
      default: ~/.cache/fundalc
    use_cache:
      description: Read and write the enumeration cache.
      type: boolean
      default: true
    omega_window:
      description: >-
        Exponent bound for each free generator of Omega when Omega is
        infinite.
      type: integer
      minimum: 0
      default: 2
    reachability_slack:
      description: Extra length allowed in sigma-conjugation searches.
      type: integer
      minimum: 0
      default: 2
    bruhat_cost_guard:
      description: Longest element the subword Bruhat oracle accepts.
      type: integer
      minimum: 0
      default: 14
    random_seed:
      description: Seed for every sampled check.
      type: integer
      default: 0
    random_samples:
      description: Number of samples drawn by sampled checks.
      type: integer
      minimum: 0
      default: 200
    bruhat_pairs:
      description: Random pairs compared against the Bruhat oracle per datum.
      type: integer
      minimum: 0
      default: 1000
    jobs:
      description: Worker processes used by verification suites.
      type: integer
      minimum: 1
      default: 1
    suites:
      description: >-
        Configuration for each verification suite, keyed by suite name.
        Each block is validated by the schema of its suite.
      type: object
      default: {}
      additionalProperties:
        type: object
    """
)
