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

import io
import json
import unittest

from lsst.ts import fundalc


class ReportsTestCase(unittest.TestCase):
    def setUp(self):
        self.sl2 = fundalc.build_root_datum("SL2")
        self.rows = fundalc.classify_report(self.sl2, max_len=1)

    def test_classify_csv(self):
        records = fundalc.classify_records(self.rows)
        assert [r["literal"] for r in records] == ["t[0]", "t[-1]*s1", "t[0]*s1"]
        assert records[0]["witness"] == "(0)"
        assert records[1]["witness"] == ""

        stream = io.StringIO()
        fundalc.write_report(records, fundalc.CLASSIFY_COLUMNS, stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(fundalc.CLASSIFY_COLUMNS)
        assert len(lines) == 4
        assert lines[2].startswith("t[-1]*s1,1,")

    def test_classify_json(self):
        records = fundalc.classify_records(self.rows, json_witness=True)
        stream = io.StringIO()
        fundalc.write_report(records, fundalc.CLASSIFY_COLUMNS, stream, fmt="json")
        data = json.loads(stream.getvalue())
        assert len(data) == 3
        assert data[0]["witness"] == {"v": ["0"], "zero": [0, 1], "plus": []}
        assert data[1]["witness"] is None
        assert data[2]["k_fundamental"] is True
        assert data[1]["k_fundamental"] is False

    def test_empty_table(self):
        stream = io.StringIO()
        fundalc.write_report([], fundalc.VERIFY_COLUMNS, stream)
        assert stream.getvalue().splitlines() == [",".join(fundalc.VERIFY_COLUMNS)]

    def test_minuscule_records(self):
        gl2 = fundalc.build_root_datum("GL2")
        records = fundalc.minuscule_records(fundalc.minuscule_report(gl2, mu=(1, 0)))
        assert len(records) == 4
        assert all(r["bruhat_ok"] and r["conjugacy_ok"] for r in records)
        assert {r["length"] for r in records} <= {0, 1, 2}
        table = fundalc.make_table(records, fundalc.MINUSCULE_COLUMNS)
        assert table.colnames == list(fundalc.MINUSCULE_COLUMNS)
        assert len(table) == 4


if __name__ == "__main__":
    unittest.main()
