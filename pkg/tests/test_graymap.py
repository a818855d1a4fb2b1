# Tests the Gray maps of Galois rings.
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

import grauthcode.galoisring as gr
import grauthcode.graymap as gm


def test_xiEnumeration(z4, gr42):
    assert [int(v) for v in gm.gm_xiEnumeration(z4)] == [0, 1]
    assert [int(v) for v in gm.gm_xiEnumeration(gr42)] == [0, 2, 3, 1]

def test_z4_is_the_classic_gray_map(z4):
    g = gm.gm_GrayMap(z4)
    assert g.length == 2
    images = [g.image(z4.constant(c)) for c in range(4)]
    assert images == [(0, 0), (0, 1), (1, 1), (1, 0)]

def test_vectorText(z4, gr42):
    g = gm.gm_GrayMap(gr42)
    assert g.length == 4
    assert g.vectorText(gr42.constant(2)) == "1,0:1,0:1,0:1,0"
    assert gm.gm_GrayMap(z4).vectorText(z4.constant(3)) == "1:0"

def test_zero_maps_to_the_zero_vector(gr42, z25):
    for ring in (gr42, z25):
        g = gm.gm_GrayMap(ring)
        assert not any(g.image(ring.zero()))

def test_properties_hold(z4, gr42, z25):
    for ring in (z4, gr42, z25):
        assert gm.gm_GrayMap(ring).checkProperties() == []

def test_addSocle_shifts_every_coordinate(gr42):
    g = gm.gm_GrayMap(gr42)
    a = gr42.element([1, 2])
    c = gr42.x()
    shifted = [int(v) for v in g.addSocle(a, c)]
    rc = gr.gr_residueInt(c)
    assert shifted == [v ^ rc for v in g.image(a)]

def test_addSocle_needs_a_teichmuller_element(gr42):
    g = gm.gm_GrayMap(gr42)
    with pytest.raises(gm.gm_GrayMapError):
        g.addSocle(gr42.one(), gr42.constant(2))

def test_coordinate_range(gr42):
    g = gm.gm_GrayMap(gr42)
    assert g.coordinate(gr42.constant(2), 3) == 1
    with pytest.raises(gm.gm_GrayMapError):
        g.coordinate(gr42.one(), 4)

def test_elements_of_other_rings_are_rejected(z4, gr42):
    g = gm.gm_GrayMap(gr42)
    with pytest.raises(gm.gm_GrayMapError):
        g.image(z4.one())

def test_image_is_injective_on_z25(z25):
    g = gm.gm_GrayMap(z25)
    assert g.length == 5
    assert len(set(img for (a, img) in g.table())) == 25

def test_properties_hold_on_gr_4_3():
    ring = gr.gr_makeRing(2, 2, 3)
    g = gm.gm_GrayMap(ring)
    assert g.q == 8
    assert g.length == 8
    assert g.checkProperties() == []
    assert len(set(img for (a, img) in g.table())) == 64
