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

__all__ = [
    "FundalcError",
    "CatalogueError",
    "DatumMismatchError",
    "ElementSyntaxError",
    "PreconditionError",
    "CostGuardError",
    "CertificateError",
    "ClassificationError",
    "UnknownSuiteError",
]


class FundalcError(RuntimeError):
    """Base class for errors raised by ts_fundalc."""


class CatalogueError(FundalcError):
    """Unknown catalogue key, or an invalid root datum description."""


class DatumMismatchError(FundalcError):
    """Objects built on different root data were combined."""


class ElementSyntaxError(FundalcError, ValueError):
    """An element literal could not be parsed.

    Parameters
    ----------
    message : `str`
        Description of the problem.
    literal : `str`
        The literal being parsed.
    position : `int`
        Offset into ``literal`` where the problem was detected.
    """

    def __init__(self, message, literal, position):
        super().__init__(f"{message} at position {position} in {literal!r}")
        self.literal = literal
        self.position = position


class PreconditionError(FundalcError, ValueError):
    """An operation was called outside its domain."""


class CostGuardError(FundalcError):
    """A brute-force computation exceeded its configured cost guard."""


class CertificateError(FundalcError):
    """A search that must succeed came back empty.

    This always points at a bug; the message names the element.
    """


class ClassificationError(FundalcError):
    """Two criteria that must agree gave different answers."""


class UnknownSuiteError(FundalcError, KeyError):
    """No verification suite is registered under the requested name."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""
