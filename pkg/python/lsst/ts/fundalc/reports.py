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
    "CLASSIFY_COLUMNS",
    "VERIFY_COLUMNS",
    "MINUSCULE_COLUMNS",
    "EVAL_COLUMNS",
    "TYPES_COLUMNS",
    "classify_records",
    "verify_records",
    "minuscule_records",
    "make_table",
    "write_report",
]

import json

from astropy.io import ascii
from astropy.table import Table

from .literals import format_element, format_vector, vdatum_to_dict

CLASSIFY_COLUMNS = (
    "literal",
    "length",
    "nu_dom",
    "kappa",
    "straight",
    "k_fundamental",
    "gl_fundamental",
    "witness",
)
VERIFY_COLUMNS = ("suite", "datum", "property", "checked", "failures", "counterexample")
MINUSCULE_COLUMNS = ("literal", "length", "straight_rep", "witness", "bruhat_ok", "conjugacy_ok")
EVAL_COLUMNS = ("literal", "length", "nu_dom", "kappa", "straight", "k_fundamental", "gl_fundamental")
TYPES_COLUMNS = ("key", "rank", "semisimple_rank", "roots", "weyl_order", "sigma_order")


def classify_records(rows, json_witness=False):
    """Report records for `ClassifyRow` objects.

    Parameters
    ----------
    rows : `list` [`ClassifyRow`]
    json_witness : `bool`, optional
        Give the witness as a dict instead of its vector.
    """
    records = []
    for row in rows:
        if json_witness:
            witness = vdatum_to_dict(row.witness)
        else:
            witness = "" if row.witness is None else format_vector(row.witness.v)
        records.append(
            {
                "literal": format_element(row.element),
                "length": row.length,
                "nu_dom": format_vector(row.nu_dom),
                "kappa": str(row.kappa),
                "straight": row.straight,
                "k_fundamental": row.k_fundamental,
                "gl_fundamental": row.gl_fundamental,
                "witness": witness,
            }
        )
    return records


def verify_records(results):
    return [{column: getattr(result, column) for column in VERIFY_COLUMNS} for result in results]


def minuscule_records(rows):
    return [
        {
            "literal": format_element(row.element),
            "length": row.element.length,
            "straight_rep": format_element(row.straight_rep),
            "witness": "" if row.witness is None else format_element(row.witness),
            "bruhat_ok": row.bruhat_ok,
            "conjugacy_ok": row.conjugacy_ok,
        }
        for row in rows
    ]


def make_table(records, columns):
    """Build an `astropy.table.Table` with the given column order."""
    if not records:
        return Table(names=columns, dtype=[str] * len(columns))
    return Table(rows=[[record[c] for c in columns] for record in records], names=columns)


def write_report(records, columns, stream, fmt="csv"):
    """Write records as CSV (fixed header, one row per record) or as a JSON
    list.

    Parameters
    ----------
    records : `list` [`dict`]
    columns : `tuple` [`str`]
        CSV header.
    stream : file-like
    fmt : `str`, optional
        ``"csv"`` or ``"json"``.
    """
    if fmt == "json":
        json.dump(records, stream, indent=2)
        stream.write("\n")
        return
    ascii.write(make_table(records, columns), stream, format="csv")
