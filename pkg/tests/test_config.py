# Tests the reading of code configuration files.
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

import grauthcode.config as conf

from conftest import etcPath


def _writeConfig(tmp_path, txt, name = "test.cfg"):
    path = tmp_path / name
    path.write_text(txt)
    return str(path)


def test_p0_configuration():
    c = conf.conf_CodeConfiguration(etcPath("p0.cfg"))
    assert c.ringArguments() == (2, 2, 2, 1, 2 ** 20)
    args = c.codeArguments()
    assert args["t"] == 1
    assert args["eta"] is None and args["f"] is None
    assert c.seed == 0

def test_configurations_are_read_only():
    c = conf.conf_CodeConfiguration(etcPath("p0.cfg"))
    with pytest.raises(AttributeError):
        c.p = 3
    with pytest.raises(AttributeError):
        del c.n

def test_element_lists(tmp_path):
    path = _writeConfig(tmp_path, 'p = 2\nr = 2\nell = 2\nn = 1\n'
                        'eta = ["xi^1"]\nZ = "1, xi^2"\n')
    args = conf.conf_CodeConfiguration(path).codeArguments()
    assert args["eta"] == ["xi^1"]
    assert args["Z"] == ["1", "xi^2"]
    assert args["theta"] is None

def test_canonicalItems_mark_defaults():
    items = dict(conf.conf_CodeConfiguration(
                    etcPath("p0.cfg")).canonicalItems())
    assert items["p"] == "2"
    assert items["eta"] == "default"
    assert items["seed"] == "0"
    assert items["cap"] == str(2 ** 20)

def test_missing_variables_are_named(tmp_path):
    path = _writeConfig(tmp_path, "p = 2\nr = 2\n")
    with pytest.raises(ValueError) as info:
        conf.conf_CodeConfiguration(path)
    assert "ell, n" in str(info.value)

def test_unreadable_files_are_rejected(tmp_path):
    with pytest.raises(ValueError):
        conf.conf_CodeConfiguration(str(tmp_path / "missing.cfg"))
    path = _writeConfig(tmp_path, "p = = 2\n")
    with pytest.raises(ValueError):
        conf.conf_CodeConfiguration(path)

@pytest.mark.parametrize("body", [
    "p = 0\nr = 2\nell = 1\nn = 1\n",
    "p = 2\nr = 'two'\nell = 1\nn = 1\n",
    "p = 2\nr = 2\nell = 1\nn = 1\nseed = -1\n",
    "p = 2\nr = 2\nell = 1\nn = 1\nt = 0\n",
    "p = 2\nr = 2\nell = 1\nn = 1\neta = 3\n",
    "p = 2\nr = 2\nell = 1\nn = 1\nf = 7\n",
])
def test_invalid_values_are_rejected(tmp_path, body):
    with pytest.raises(ValueError):
        conf.conf_CodeConfiguration(_writeConfig(tmp_path, body))

def test_table_paths_are_relative_to_the_configuration(tmp_path):
    path = _writeConfig(tmp_path, "p = 2\nr = 2\nell = 1\nn = 1\n"
                        "f = 'table:f.tbl'\n")
    f = conf.conf_CodeConfiguration(path).codeArguments()["f"]
    assert f == "table:" + str(tmp_path / "f.tbl")
