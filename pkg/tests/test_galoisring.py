# Tests the arithmetic of Galois rings.
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


def test_makeRing_moduli(z4, gr42, z25):
    assert gr42.modulus == (1, 1, 1)
    assert z4.order == 4 and z4.d == 1
    assert z25.order == 25
    assert gr42.order == 16
    assert gr42.residueOrder == 4

def test_makeRing_errors():
    with pytest.raises(gr.gr_RingError):
        gr.gr_makeRing(4, 2, 1)
    with pytest.raises(gr.gr_RingError):
        gr.gr_makeRing(2, 0, 1)
    with pytest.raises(gr.gr_RingError):
        gr.gr_makeRing(2, 2, 2, cap = 15)

def test_arithmetic_in_z4(z4):
    three = z4.constant(3)
    assert three + three == z4.constant(2)
    assert gr.gr_ringArith(three, z4.one(), gr.gr_SUB) == z4.constant(2)
    assert -three == z4.one()

def test_arithmetic_in_gr42(gr42):
    x = gr42.x()
    assert x * x == gr42.element([3, 3])
    assert x ** 3 == gr42.one()
    assert gr.gr_ringArith(x, x, gr.gr_MUL) == gr42.element([3, 3])
    assert gr.gr_ringArith(x, 5, gr.gr_POW) == gr42.element([3, 3])
    assert gr.gr_ringArith(x, 0, gr.gr_POW) == gr42.one()
    with pytest.raises(gr.gr_RingError):
        gr.gr_ringArith(x, -1, gr.gr_POW)

def test_mismatched_rings_are_rejected(z4, z25):
    with pytest.raises(gr.gr_RingError):
        z4.one() + z25.one()

def test_teichmuller_sets(z4, gr42, z25):
    assert set(z4.teichmuller.elements()) == {z4.zero(), z4.one()}
    T = gr42.teichmuller
    assert T.xi == gr42.x()
    assert list(T.elements()) == [gr42.zero(), gr42.one(), gr42.x(),
                                  gr42.element([3, 3])]
    T25 = z25.teichmuller
    assert T25.xi == z25.constant(7)
    assert sorted(e.coeffs[0] for e in T25.elements()) == [0, 1, 7, 18, 24]

def test_teichmuller_elements_are_fixed_by_the_frobenius(gr42, z25):
    for ring in (gr42, z25):
        q = ring.residueOrder
        for e in ring.teichmuller.elements():
            assert e ** q == e
        assert len(ring.teichmuller.elements()) == q

def test_teichmuller_text_round_trip(gr42):
    T = gr42.teichmuller
    for e in T.elements():
        assert T.parse(T.text(e)) == e
    assert T.parse("xi^4") == gr42.x()
    with pytest.raises(gr.gr_RingError):
        T.parse("x^2")
    with pytest.raises(gr.gr_RingError):
        T.text(gr42.constant(2))

def test_padicDigits(z4, gr42):
    assert gr.gr_padicDigits(z4.constant(3)) == (z4.one(), z4.one())
    assert gr.gr_padicDigits(z4.constant(2)) == (z4.zero(), z4.one())
    assert gr.gr_padicDigits(gr42.zero()) == (gr42.zero(), gr42.zero())

def test_fromDigits(z4, gr42):
    assert gr.gr_fromDigits([z4.one(), z4.one()], z4) == z4.constant(3)
    x = gr42.x()
    assert gr.gr_fromDigits([x, x], gr42) == gr42.element([0, 3])
    assert gr.gr_fromDigits([], gr42) == gr42.zero()
    with pytest.raises(gr.gr_RingError):
        gr.gr_fromDigits([z4.constant(3)], z4)

def test_digits_round_trip_exhaustively(gr42, z25):
    for ring in (gr42, z25):
        assert gr.gr_checkDigits(ring) == []

def test_rho(z4, gr42):
    assert int(gr.gr_rho(z4.constant(3))) == 1
    assert int(gr.gr_rho(z4.constant(2))) == 0
    # x + 1 in F_4 has the integer representation 3
    assert gr.gr_residueInt(gr42.element([3, 3])) == 3

def test_embedding_is_a_homomorphism(gr42OverZ4, z4, gr42):
    emb = gr42OverZ4
    assert emb.embed(z4.zero()) == gr42.zero()
    assert emb.embed(z4.one()) == gr42.one()
    for a in z4.allElements():
        for b in z4.allElements():
            assert emb.embed(a + b) == emb.embed(a) + emb.embed(b)
            assert emb.embed(a * b) == emb.embed(a) * emb.embed(b)

def test_embedding_of_a_ring_in_itself_is_the_identity(gr42):
    emb = gr.gr_embedding(gr42, gr42)
    for a in gr42.allElements():
        assert emb.embed(a) == a
        assert emb.trace(a) == a

def test_embeddings_are_kept_by_their_target(z4, gr42, gr42OverZ4):
    assert gr.gr_embedding(z4, gr42) is gr42OverZ4
    fresh = gr.gr_makeRing(2, 2, 2)
    assert fresh == gr42
    emb = gr.gr_embedding(z4, fresh)
    assert emb is not gr42OverZ4
    assert emb is gr.gr_embedding(z4, fresh)

def test_incompatible_rings_cant_be_embedded(gr42, z25):
    with pytest.raises(gr.gr_RingError):
        gr.gr_embedding(gr42, z25)

def test_trace(gr42OverZ4, z4, gr42):
    assert gr.gr_traceBA(gr42.x(), z4) == z4.constant(3)
    assert gr42OverZ4.trace(gr42.one()) == z4.constant(2)
    assert gr.gr_checkTrace(gr42OverZ4) == []

def test_coprimeTeichmuller(z4, gr42, z25):
    assert gr.gr_coprimeTeichmuller(z4.teichmuller) == [z4.one()]
    assert gr.gr_coprimeTeichmuller(gr42.teichmuller) == \
        [gr42.x(), gr42.element([3, 3])]
    assert gr.gr_coprimeTeichmuller(z25.teichmuller) == \
        [z25.constant(7), z25.constant(18)]

def test_ring_axioms(z4, gr42, z25):
    for ring in (z4, gr42, z25):
        assert gr.gr_checkRingAxioms(ring) == []
        assert gr.gr_checkTeichmuller(ring) == []

def test_element_text_round_trip(gr42):
    for a in gr42.allElements():
        assert gr.gr_parseElement(gr.gr_elementText(a), gr42) == a
    assert gr.gr_elementText(gr42.element([3, 1])) == "3,1"
    with pytest.raises(gr.gr_RingError):
        gr.gr_parseElement("1", gr42)
    with pytest.raises(gr.gr_RingError):
        gr.gr_parseElement("4,0", gr42)

def test_residue_text_round_trip():
    for value in range(4):
        txt = gr.gr_residueText(value, 2, 2)
        assert gr.gr_parseResidue(txt, 2, 2) == value
    assert gr.gr_residueText(2, 2, 2) == "0,1"
    with pytest.raises(gr.gr_RingError):
        gr.gr_parseResidue("2,0", 2, 2)

def test_indices_enumerate_every_element(gr42):
    elements = list(gr42.allElements())
    assert len(set(elements)) == gr42.order
    for (i, a) in enumerate(elements):
        assert gr42.indexOf(a) == i
        assert gr42.elementAt(i) == a
