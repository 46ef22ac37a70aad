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

try:
    from .version import *
except ModuleNotFoundError:
    __version__ = "?"

from .errors import *
from .lattice import *
from .root_datum import *
from .affine_weyl import *
from .newton import *
from .alcove import *
from .enumeration import *
from .reduction import *
from .classifier import *
from .oracles import *
from .literals import *
from .validator import *
from .config_schema import *
from .cache import *
from .reports import *
from .plot import *
from .suites import *
from .model import *
from .runner import *
from .cli import *
