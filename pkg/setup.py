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

from setuptools import setup

_pkgName = "grauthcode"
_version = "0.1"
_pkgDir = "%s-%s" % (_pkgName, _version)

setup(author = "the GrAuthCode authors",
    name = "GrAuthCode",
    version = _version,
    description = "Gray-map systematic authentication codes over Galois rings, with exhaustive verification, attack probabilities and a protocol simulator",
    license = "GPL version 3",
    platforms = "linux",
    python_requires = ">=3.8",
    install_requires = ["galois", "numpy"],
    extras_require = { "test": ["pytest"] },
    package_dir = { '': 'src' },
    packages = [_pkgName],
    scripts = ["src/%s" % s for s in ["gr-authcode"]],
    data_files = [("share/%s/etc" % _pkgDir, ["etc/p0.cfg", "etc/p1.cfg",
                    "etc/p0-explicit.cfg", "etc/z4.cfg", "etc/gr42.cfg"])])
