# Tests the reporting of findings and run reports.
#
# Copyright (C) the GrAuthCode authors
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
#

from fractions import Fraction
import io
import json

import pytest

import grauthcode.reporting as rp


def _report():
    result = rp.rp_RunReport("ring-info", "0.1", [("p", "2"), ("r", "2")])
    result.addRow("order\t16", { "order": 16 })
    result.addFinding(rp.rp_Finding("cardinality", rp.rp_GAP,
                                    "|N| is 4, not 5", { "claimed": 5 }))
    return result


def test_fractionText():
    assert rp.rp_fractionText(Fraction(2, 4)) == "1/2"
    assert rp.rp_fractionText(1) == "1/1"

def test_table_render():
    report = _report()
    expected = ("# ring-info 0.1\n# fingerprint %s\n# p = 2\n# r = 2\n\n"
                "order\t16\n\nFindings:\n"
                "[gap] cardinality: |N| is 4, not 5\n" % report.fingerprint())
    assert report.render(rp.rp_TABLE) == expected

def test_table_render_without_a_header():
    report = rp.rp_RunReport("gray-table", "0.1", [("p", "2")],
                             tableHeader = False)
    report.addRow("0\t0:0")
    assert report.render(rp.rp_TABLE) == "0\t0:0\n"

def test_records_render():
    lines = _report().render(rp.rp_RECORDS).splitlines()
    assert len(lines) == 3
    run = json.loads(lines[0])
    assert run["record"] == "run"
    assert run["config"] == { "p": "2", "r": "2" }
    assert run["fingerprint"] == _report().fingerprint()
    row = json.loads(lines[1])
    assert row == { "record": "row", "text": "order\t16", "order": 16 }
    finding = json.loads(lines[2])
    assert finding["severity"] == rp.rp_GAP
    assert finding["claimed"] == 5

def test_records_serialize_fractions():
    report = rp.rp_RunReport("attack-probs", "0.1", [])
    report.addRow("pI", { "pI": Fraction(1, 4) })
    row = json.loads(report.render(rp.rp_RECORDS).splitlines()[1])
    assert row["pI"] == "1/4"

def test_fingerprint_depends_on_configuration_only():
    a = rp.rp_RunReport("ring-info", "0.1", [("p", "2")])
    b = rp.rp_RunReport("gray-table", "0.1", [("p", "2")])
    c = rp.rp_RunReport("ring-info", "0.1", [("p", "3")])
    assert a.fingerprint() == b.fingerprint()
    assert a.fingerprint() != c.fingerprint()

def test_isFatal():
    report = _report()
    assert not report.isFatal()
    report.addFinding(rp.rp_Finding("disjointness", rp.rp_FATAL, "overlap"))
    assert report.isFatal()
    assert report.countBySeverity(rp.rp_GAP) == 1

def test_reporter_verbosity():
    out = io.StringIO()
    r = rp.rp_Reporter(rp.QUIET, out)
    r.report("hidden")
    r.debug("hidden")
    r.warn("shown")
    assert out.getvalue() == "WARNING: shown\n"
    silent = io.StringIO()
    r = rp.rp_Reporter(rp.SILENT, silent)
    with pytest.raises(rp.rp_FatalError):
        r.die("stop")
    assert silent.getvalue() == ""
