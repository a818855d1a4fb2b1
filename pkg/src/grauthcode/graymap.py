# Defines the generalized Gray map from a Galois ring GR(p^r, l) to vectors
# over its residue field F_q, q = p^l, of length q^(r - 1).
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

import numpy as np

import grauthcode.galoisring as gr
import grauthcode.utilities as ut


# Constants.

# The separator between the coordinates in the text form of a Gray vector.
gm_coordinateSeparator = ":"


# Classes.

class gm_GrayMapError(Exception):
    """
    The class of exception raised when an argument to a Gray map operation
    is invalid, or when one of the Gray map's properties fails to hold.
    """
    pass


class gm_GrayMap(object):
    """
    Represents the Gray map of a Galois ring A = GR(p^r, l). The image of

        a = a_0 + a_1 p + ... + a_{r-1} p^(r-1)

    has, at the coordinate whose base-q digits (least significant first)
    are k_0, ..., k_{r-2}, the value

        rho(a_{r-1}) + rho(a_0) xi_{k_0} + ... + rho(a_{r-2}) xi_{k_{r-2}}

    where xi_0, ..., xi_{q-1} is the enumeration 0, rho(xi), ...,
    rho(xi^(q-1)) of the residue field.

    The images of all of the ring's elements are computed when an instance
    is built, and are kept as tuples of the residue field elements'
    integer representations.
    """

    def __init__(self, ring):
        object.__init__(self)
        if ring.r < 1:
            raise gm_GrayMapError("%r has no Gray map" % ring)
        self.ring = ring
        self.field = ring.residueField
        self.q = ring.residueOrder
        self.length = self.q ** (ring.r - 1)
        self.xi = gm_xiEnumeration(ring)
        digits = [ut.ut_baseDigits(k, self.q, ring.r - 1)
                    for k in range(self.length)]
        self._gm_indexDigits = np.array(digits, dtype = np.int64).reshape(
                                    self.length, ring.r - 1)
        self._gm_images = {}
        for a in ring.allElements():
            self._gm_images[a.coeffs] = self._gm_compute(a)

    def _gm_compute(self, a):
        """
        Computes and returns the image of 'a' as a tuple of ints.
        """
        F = self.field
        residues = [gr.gr_residueInt(x) for x in gr.gr_padicDigits(a)]
        result = F(np.full(self.length, residues[-1], dtype = np.int64))
        for (i, res) in enumerate(residues[:-1]):
            if res:
                result = result + F(res) * self.xi[self._gm_indexDigits[:, i]]
        return tuple(int(c) for c in result)

    def image(self, a):
        """
        Returns the image of the element 'a' of our ring as a tuple of the
        integer representations of its coordinates.
        """
        if a.ring != self.ring:
            raise gm_GrayMapError("%r isn't an element of %r" %
                                  (a, self.ring))
        return self._gm_images[a.coeffs]

    def gray(self, a):
        """
        Returns the image of the element 'a' of our ring as a galois
        FieldArray of length q^(r - 1).
        """
        return self.field(list(self.image(a)))

    def coordinate(self, a, k):
        """
        Returns the integer representation of coordinate 'k' of the image of
        'a'.
        """
        if not (0 <= k < self.length):
            raise gm_GrayMapError("the coordinate %i is out of range: Gray "
                                  "vectors have %i coordinates" %
                                  (k, self.length))
        return self.image(a)[k]

    def addSocle(self, a, c):
        """
        Returns the image of a + c p^(r-1), which is the image of 'a' with
        rho(c) added to every coordinate, where 'c' is a Teichmuller
        element of our ring.

        Raises a gm_GrayMapError if 'c' isn't a Teichmuller element, or if
        the two ways of computing the image disagree.
        """
        ring = self.ring
        if not ring.teichmuller.contains(c):
            raise gm_GrayMapError("%r isn't a Teichmuller element of %r" %
                                  (c, ring))
        shifted = a + c * ring.socleGenerator()
        result = self.gray(shifted)
        expected = self.gray(a) + self.field(gr.gr_residueInt(c))
        if not np.array_equal(result, expected):
            raise gm_GrayMapError("the image of %r + %r p^(r-1) isn't that "
                                  "of %r shifted by rho(%r)" % (a, c, a, c))
        return result

    def vectorText(self, a):
        """
        Returns the canonical text form of the image of 'a'.
        """
        ring = self.ring
        return gm_coordinateSeparator.join(
            gr.gr_residueText(v, ring.p, ring.d) for v in self.image(a))

    def table(self):
        """
        Returns a list of (element, image) pairs for all of the elements of
        our ring, in the ring's index order.
        """
        return [(a, self.image(a)) for a in self.ring.allElements()]

    def checkProperties(self):
        """
        Checks that this Gray map is injective, sends 0 to the zero vector,
        shifts every coordinate by rho(c) on adding c p^(r-1) and has
        coordinates that are each onto the residue field.

        Returns a list of descriptions of the violations found, which is
        empty iff there are none.
        """
        result = []
        ring = self.ring
        images = [img for (a, img) in self.table()]
        if len(set(images)) != ring.order:
            result.append("the Gray map of %r isn't injective" % ring)
        if any(self.image(ring.zero())):
            result.append("the Gray map doesn't send 0 to the zero vector")
        for a in ring.allElements():
            for c in ring.teichmuller.elements():
                try:
                    self.addSocle(a, c)
                except gm_GrayMapError as ex:
                    result.append(str(ex))
                    break  # for
        coords = np.array(images, dtype = np.int64)
        for k in range(self.length):
            if len(np.unique(coords[:, k])) != self.q:
                result.append("coordinate %i of the Gray map isn't onto the "
                              "residue field" % k)
        return result


# Functions.

def gm_xiEnumeration(ring):
    """
    Returns the enumeration 0, rho(xi), rho(xi^2), ..., rho(xi^(q-1)) of
    the residue field of 'ring' as a galois FieldArray, where xi is the
    generator of the ring's Teichmuller set.

    Note: rho(xi^(q-1)) = 1.
    """
    T = ring.teichmuller
    q = ring.residueOrder
    entries = [0] + [gr.gr_residueInt(T.power(j)) for j in range(1, q)]
    result = ring.residueField(entries)
    assert len(set(int(v) for v in result)) == q
    return result
