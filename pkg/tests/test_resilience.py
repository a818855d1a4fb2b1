# Tests the checking of resilient maps.
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

import itertools

import pytest

import grauthcode.galoisring as gr
import grauthcode.resilience as rs


def _writeTable(path, ring, n, fn):
    lines = ["# x_0|...|value"]
    for x in itertools.product(ring.allElements(), repeat = n):
        fields = [gr.gr_elementText(v) for v in x] + \
                 [gr.gr_elementText(fn(x))]
        lines.append("|".join(fields))
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_default_linear_map_is_resilient(z4):
    f = rs.rs_parseMapDescriptor(rs.rs_defaultDescriptor(2), z4, 2)
    assert f.kind == rs.rs_LINEAR
    report = rs.rs_checkResilient(f, 1)
    assert report.passed
    assert report.checkedSets == 3
    assert report.failure is None

def test_fixing_every_coordinate_is_never_checked(z4):
    f = rs.rs_parseMapDescriptor("linear:1,1", z4, 2)
    report = rs.rs_checkResilient(f, 5)
    assert report.passed
    assert report.checkedSets == 3

def test_evaluate_linear_map(gr42):
    f = rs.rs_parseMapDescriptor("linear:1,xi^1", gr42, 2)
    x = gr42.x()
    assert f.coefficients() == (gr42.one(), x)
    assert rs.rs_evaluate(f, [gr42.one(), x]) == gr42.one() + x * x
    with pytest.raises(rs.rs_ResilienceError):
        f.evaluate([x])

def test_non_unit_coefficients_are_rejected(z4):
    with pytest.raises(rs.rs_ResilienceError):
        rs.rs_parseMapDescriptor("linear:1,2", z4, 2)

def test_bad_descriptors_are_rejected(z4):
    for txt in ["1,1", "affine:1,1", "linear:1", "linear:1,x"]:
        with pytest.raises(rs.rs_ResilienceError):
            rs.rs_parseMapDescriptor(txt, z4, 2)

def test_table_map_from_file(tmp_path, z4):
    path = _writeTable(tmp_path / "sum.tbl", z4, 2, lambda x: x[0] + x[1])
    f = rs.rs_parseMapDescriptor("table:" + path, z4, 2)
    assert f.kind == rs.rs_TABLE
    assert f.evaluate([z4.constant(3), z4.constant(2)]) == z4.one()
    assert rs.rs_checkResilient(f, 1).passed

def test_projection_isnt_resilient(tmp_path, z4):
    path = _writeTable(tmp_path / "proj.tbl", z4, 2, lambda x: x[0])
    f = rs.rs_tableMapFromFile(path, z4, 2)
    assert rs.rs_checkResilient(f, 0).passed
    report = rs.rs_checkResilient(f, 1)
    assert not report.passed
    assert report.failure == ((0,), (0,))

def test_constant_map_isnt_balanced(z4):
    table = dict(((a.coeffs, b.coeffs), z4.zero())
                    for a in z4.allElements() for b in z4.allElements())
    f = rs.rs_tableMap(z4, 2, table)
    report = rs.rs_checkResilient(f, 0)
    assert not report.passed
    assert report.failure == ((), ())

def test_incomplete_table_cant_be_evaluated(z4):
    f = rs.rs_tableMap(z4, 1, {})
    with pytest.raises(rs.rs_ResilienceError):
        f.evaluate([z4.one()])

def test_table_file_errors(tmp_path, z4):
    with pytest.raises(rs.rs_ResilienceError):
        rs.rs_tableMapFromFile(str(tmp_path / "missing.tbl"), z4, 1)
    short = tmp_path / "short.tbl"
    short.write_text("0|0|0\n")
    with pytest.raises(rs.rs_ResilienceError):
        rs.rs_tableMapFromFile(str(short), z4, 1)
    repeated = tmp_path / "repeated.tbl"
    repeated.write_text("1|1\n1|2\n")
    with pytest.raises(rs.rs_ResilienceError):
        rs.rs_tableMapFromFile(str(repeated), z4, 1)

def test_negative_order_is_rejected(z4):
    f = rs.rs_linearMap(z4, [z4.one()])
    with pytest.raises(rs.rs_ResilienceError):
        rs.rs_checkResilient(f, -1)

def test_cap_limits_the_check():
    ring = gr.gr_makeRing(2, 2, 2, cap = 16)
    f = rs.rs_linearMap(ring, [ring.one(), ring.one()])
    with pytest.raises(rs.rs_ResilienceError):
        rs.rs_checkResilient(f, 1)

@pytest.mark.parametrize(("fn", "expected"), [
    (lambda x: x[0] + x[1] + x[2], [True, True, True, True]),
    (lambda x: x[0] + x[1], [True, True, False, False]),
    (lambda x: x[0] + x[1] * x[1] * x[2], [True, False, False, False]),
    (lambda x: x[0], [True, False, False, False]),
    (lambda x: x[0] * x[1], [False, False, False, False]),
])
def test_resilience_is_monotonic(z4, fn, expected):
    elements = list(z4.allElements())
    table = dict((tuple(v.coeffs for v in x), fn(x))
                 for x in itertools.product(elements, repeat = 3))
    f = rs.rs_tableMap(z4, 3, table)
    passed = [rs.rs_checkResilient(f, t).passed for t in range(4)]
    assert passed == expected
    assert passed == sorted(passed, reverse = True)
