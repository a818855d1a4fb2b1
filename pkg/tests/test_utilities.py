# Tests the general utilities.
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

import pytest

import grauthcode.utilities as ut


def test_baseDigits_are_least_significant_first():
    assert ut.ut_baseDigits(37, 4, 3) == [1, 1, 2]
    assert ut.ut_baseDigits(0, 5, 2) == [0, 0]
    assert ut.ut_baseDigits(7, 2, 3) == [1, 1, 1]

def test_baseDigits_rejects_values_that_dont_fit():
    with pytest.raises(ValueError):
        ut.ut_baseDigits(8, 2, 3)
    with pytest.raises(ValueError):
        ut.ut_baseDigits(-1, 2, 3)

def test_fromBaseDigits_inverts_baseDigits():
    for value in range(125):
        assert ut.ut_fromBaseDigits(ut.ut_baseDigits(value, 5, 3), 5) == value

def test_isInt():
    assert ut.ut_isInt(3)
    assert ut.ut_isInt("-12")
    assert not ut.ut_isInt(True)
    assert not ut.ut_isInt("3.5")
    assert not ut.ut_isInt(None)

def test_parseInt_bounds():
    assert ut.ut_parseInt("7", 0, 10) == 7
    with pytest.raises(ValueError):
        ut.ut_parseInt("11", 0, 10)
    with pytest.raises(ValueError):
        ut.ut_parseInt("-1", 0)
    with pytest.raises(ValueError):
        ut.ut_parseInt("seven")

def test_sha256Hex_of_empty_text():
    assert ut.ut_sha256Hex("") == \
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"

def test_frame_carries_text_and_leaves_the_rest():
    data = ut.ut_buildFrame("0,1|2") + ut.ut_buildFrame("xi")
    (first, rest) = ut.ut_splitFrame(data)
    assert first == "0,1|2"
    assert ut.ut_splitFrame(rest) == ("xi", b"")

def test_frame_length_prefix_is_big_endian():
    assert ut.ut_buildFrame("ab") == b"\x00\x00\x00\x02ab"

def test_splitFrame_rejects_short_and_truncated_data():
    with pytest.raises(ValueError):
        ut.ut_splitFrame(b"\x00\x00")
    with pytest.raises(ValueError):
        ut.ut_splitFrame(b"\x00\x00\x00\x05abc")
    with pytest.raises(ValueError):
        ut.ut_splitFrame(b"\x00\x00\x00\x01\xff")

def test_updateMapByExecutingFile(tmp_path):
    path = tmp_path / "vars.cfg"
    path.write_text("a = 1\nb = [\"x\", \"y\"]\n")
    m = { "a": 0 }
    ut.ut_updateMapByExecutingFile(str(path), m)
    assert m["a"] == 1
    assert m["b"] == ["x", "y"]

def test_updateMapByExecutingFile_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("a = = 1\n")
    with pytest.raises(SyntaxError):
        ut.ut_updateMapByExecutingFile(str(bad), {})
    failing = tmp_path / "failing.cfg"
    failing.write_text("a = 1 / 0\n")
    with pytest.raises(SyntaxError):
        ut.ut_updateMapByExecutingFile(str(failing), {})
    with pytest.raises(IOError):
        ut.ut_updateMapByExecutingFile(str(tmp_path / "missing.cfg"), {})
