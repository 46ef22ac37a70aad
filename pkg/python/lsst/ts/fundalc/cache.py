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

__all__ = ["EnumerationCache"]

import hashlib
import json
import logging
import os
import pathlib
import tempfile

from . import __version__
from .errors import ElementSyntaxError
from .literals import format_element, parse_element


class EnumerationCache:
    """Write-once store of enumerated elements.

    Each enumeration is a JSON-lines file of canonical element literals,
    named by the SHA-256 of the datum label, sigma, the length bound, the
    Omega-window and the package version. Existing files are never
    rewritten; a file that cannot be read is ignored with a warning.

    Parameters
    ----------
    directory : `str` or `pathlib.Path`
        Cache directory, created on first write.
    version : `str`, optional
        Code version mixed into every key.
    """

    def __init__(self, directory, version=__version__):
        self.log = logging.getLogger(type(self).__name__)
        self.directory = pathlib.Path(directory)
        self.version = version

    def key(self, datum, sigma, max_len, window):
        text = f"{datum.label}|{sigma.matrix}|{max_len}|{window}|{self.version}"
        return hashlib.sha256(text.encode()).hexdigest()

    def path(self, datum, sigma, max_len, window):
        return self.directory / f"{self.key(datum, sigma, max_len, window)}.jsonl"

    def get_or_build(self, datum, sigma, max_len, window, build):
        """Return the cached elements, building and storing them on a miss.

        Parameters
        ----------
        datum : `BasedRootDatum`
        sigma : `DiagramAutomorphism`
        max_len : `int`
        window : `int`
        build : callable
            Returns the list of elements when the cache misses.

        Returns
        -------
        elements : `list` [`ExtAffWeylElement`]
        """
        path = self.path(datum, sigma, max_len, window)
        if path.exists():
            try:
                return self._read(path, datum)
            except (OSError, TypeError, ValueError, ElementSyntaxError):
                self.log.warning(f"Ignoring unreadable cache file {path}.")
                return build()
        elements = build()
        self._write(path, elements)
        return elements

    def _read(self, path, datum):
        with open(path) as f:
            elements = [parse_element(json.loads(line), datum) for line in f if line.strip()]
        self.log.debug(f"Read {len(elements)} elements from {path}.")
        return elements

    def _write(self, path, elements):
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile("w", dir=self.directory, suffix=".tmp", delete=False) as f:
                for x in elements:
                    f.write(json.dumps(format_element(x)) + "\n")
            if path.exists():
                os.unlink(f.name)
            else:
                os.replace(f.name, path)
        except OSError:
            self.log.warning(f"Could not write cache file {path}.")
            return
        self.log.debug(f"Wrote {len(elements)} elements to {path}.")
