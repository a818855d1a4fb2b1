# Fixtures shared by the tests: the rings and code instances they're run
# against, built once per session.
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

import os.path

import pytest

import grauthcode.construction as cc
import grauthcode.galoisring as gr
import grauthcode.verifier as vf


# The directory containing the example configuration files.
etcDir = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                      os.pardir, "etc")

def etcPath(name):
    return os.path.join(etcDir, name)


@pytest.fixture(scope = "session")
def z4():
    return gr.gr_makeRing(2, 2, 1)

@pytest.fixture(scope = "session")
def gr42():
    return gr.gr_makeRing(2, 2, 2)

@pytest.fixture(scope = "session")
def z25():
    return gr.gr_makeRing(5, 2, 1)

@pytest.fixture(scope = "session")
def gr42OverZ4(z4, gr42):
    """
    The embedding of A = Z_4 in B = GR(4, 2).
    """
    return gr.gr_embedding(z4, gr42)

@pytest.fixture(scope = "session")
def p0():
    """
    The instance P0: p = 2, r = 2, ell = 2, n = 1, t = 1.
    """
    return cc.cc_buildCodeInstance(cc.cc_buildCodeParams(2, 2, 2, 1, t = 1))

@pytest.fixture(scope = "session")
def p1():
    """
    The instance P1: p = 5, r = 2, ell = 1, n = 1, t = 1, with a cap large
    enough to compute its substitution probability.
    """
    return cc.cc_buildCodeInstance(cc.cc_buildCodeParams(5, 2, 1, 1, t = 1,
                                                         cap = 2 ** 23))

@pytest.fixture(scope = "session")
def p0Verifier(p0):
    return vf.vf_Verifier(p0)

@pytest.fixture(scope = "session")
def p0Injectivity(p0Verifier):
    return p0Verifier.verifyInjectivity(vf.vf_EXHAUSTIVE)

@pytest.fixture(scope = "session")
def p0Attack(p0Verifier):
    return p0Verifier.attackProbabilities()
