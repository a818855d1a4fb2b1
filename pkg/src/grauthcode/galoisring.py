# Defines exact arithmetic in Galois rings GR(p^r, d) together with their
# residue fields, Teichmuller sets, p-adic digits, embeddings and traces.
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
import math

import galois
import numpy as np

import grauthcode.utilities as ut


# Constants.

# The default upper bound on the number of elements of any ring, and on the
# number of elementary operations that any exhaustive computation may take.
gr_defaultCap = 2 ** 20

# The separator between the coefficients in the text form of a ring or
# residue field element.
gr_coefficientSeparator = ","

# The prefix of the text form of a nonzero Teichmuller element: 'xi^j'
# denotes the j-th power of the ring's chosen generator.
gr_generatorPowerPrefix = "xi^"

# The arithmetic operations that gr_ringArith() understands.
gr_ADD = "add"
gr_SUB = "sub"
gr_MUL = "mul"
gr_NEG = "neg"
gr_POW = "pow"
gr_allArithOps = [gr_ADD, gr_SUB, gr_MUL, gr_NEG, gr_POW]

# The largest ring whose associativity and distributivity
# gr_checkRingAxioms() checks over every triple of elements.
gr_maxExhaustiveAxiomsOrder = 256


# Classes.

class gr_RingError(Exception):
    """
    The class of exception raised when a ring can't be built, or when
    elements of different rings are combined.
    """
    pass


class gr_RingParams(object):
    """
    Represents the Galois ring GR(p^r, d): the ring Z_{p^r}[x]/(F) for a
    monic basic irreducible polynomial F of degree d. Instances are
    immutable once built.

    Note: the modulus is given as its coefficients, constant term first.

    See gr_makeRing().
    """

    def __init__(self, p, r, d, modulus, cap = gr_defaultCap):
        object.__init__(self)
        if not galois.is_prime(p):
            raise gr_RingError("%i isn't a prime" % p)
        if r < 1 or d < 1:
            raise gr_RingError("the exponents r = %i and d = %i must both "
                               "be positive" % (r, d))
        self.p = p
        self.r = r
        self.d = d
        self.characteristic = p ** r
        self.order = self.characteristic ** d
        self.residueOrder = p ** d
        self.cap = cap
        if self.order > cap:
            raise gr_RingError("GR(%i^%i, %i) has %i elements, which "
                               "exceeds the cap of %i" %
                               (p, r, d, self.order, cap))
        if len(modulus) != d + 1:
            raise gr_RingError("a modulus of degree %i needs %i coefficients"
                               % (d, d + 1))
        self.modulus = tuple(c % self.characteristic for c in modulus)
        if self.modulus[d] != 1:
            raise gr_RingError("the modulus %s isn't monic" %
                               (self.modulus,))
        self._gr_key = (p, r, d, self.modulus)
        self.residueField = _gr_buildResidueField(p, d, self.modulus)
        self.teichmuller = gr_TeichmullerSet(self)
        self._gr_embeddingsInto = {}    # source key -> gr_Embedding

    def __eq__(self, other):
        return isinstance(other, gr_RingParams) and \
            self._gr_key == other._gr_key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._gr_key)

    def __repr__(self):
        return "GR(%i^%i, %i)" % (self.p, self.r, self.d)

    def key(self):
        """
        Returns a tuple that identifies this ring: two rings are equal iff
        their keys are.
        """
        return self._gr_key

    def element(self, coeffs):
        """
        Returns the element of this ring whose coefficients - constant term
        first - are the ints in 'coeffs' reduced modulo p^r. Fewer than d
        coefficients are padded with zeroes.
        """
        assert len(coeffs) <= self.d
        m = self.characteristic
        cs = [c % m for c in coeffs] + [0] * (self.d - len(coeffs))
        return gr_RingElement(self, tuple(cs))

    def constant(self, c):
        """
        Returns the element of this ring that is the image of the int 'c'.
        """
        return self.element([c])

    def zero(self):
        return self.constant(0)

    def one(self):
        return self.constant(1)

    def x(self):
        """
        Returns the class of the indeterminate x in this ring.
        """
        if self.d > 1:
            result = self.element([0, 1])
        else:
            result = self.constant(-self.modulus[0])
        return result

    def allElements(self):
        """
        Returns an iterator over all of this ring's elements in index order:
        lexicographic on their coefficients, constant term most significant.

        See indexOf().
        """
        for cs in itertools.product(range(self.characteristic),
                                    repeat = self.d):
            yield gr_RingElement(self, cs)

    def indexOf(self, a):
        """
        Returns the position of the element 'a' of this ring in the order
        in which allElements() generates them.
        """
        assert a.ring == self
        result = 0
        for c in a.coeffs:
            result = result * self.characteristic + c
        assert 0 <= result < self.order
        return result

    def elementAt(self, index):
        """
        Returns the element of this ring at position 'index' in the order in
        which allElements() generates them.
        """
        assert 0 <= index < self.order
        cs = ut.ut_baseDigits(index, self.characteristic, self.d)
        return gr_RingElement(self, tuple(reversed(cs)))

    def socleGenerator(self):
        """
        Returns p^(r - 1) as an element of this ring.
        """
        return self.constant(self.p ** (self.r - 1))


class gr_RingElement(object):
    """
    Represents an element of a Galois ring as its coefficients modulo p^r,
    constant term first.

    Note: instances should be obtained from their ring's methods (or from
    arithmetic on other instances) rather than constructed directly.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        assert ring is not None
        assert len(coeffs) == ring.d
        self.ring = ring
        self.coeffs = coeffs

    def __add__(self, other):
        return gr_ringArith(self, other, gr_ADD)

    def __sub__(self, other):
        return gr_ringArith(self, other, gr_SUB)

    def __mul__(self, other):
        return gr_ringArith(self, other, gr_MUL)

    def __neg__(self):
        return gr_ringArith(self, None, gr_NEG)

    def __pow__(self, e):
        return gr_ringArith(self, e, gr_POW)

    def __eq__(self, other):
        return (isinstance(other, gr_RingElement) and
                self.coeffs == other.coeffs and self.ring == other.ring)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ring.key(), self.coeffs))

    def __repr__(self):
        return "%r[%s]" % (self.ring, gr_elementText(self))

    def isZero(self):
        return not any(self.coeffs)

    def isUnit(self):
        """
        Returns True iff this element is invertible, which is the case iff
        its image in the residue field is nonzero.
        """
        return gr_residueInt(self) != 0

    def valuation(self):
        """
        Returns the largest v <= r such that this element is divisible by
        p^v.
        """
        p = self.ring.p
        result = 0
        while result < self.ring.r and \
                all(c % (p ** (result + 1)) == 0 for c in self.coeffs):
            result += 1
        return result


class gr_TeichmullerSet(object):
    """
    Represents the Teichmuller set of a Galois ring: zero together with the
    cyclic group of order p^d - 1 generated by the lift of a primitive
    element of the residue field.

    The nonzero elements are kept in power order xi^0, xi^1, ...
    """

    def __init__(self, ring):
        object.__init__(self)
        self.ring = ring
        self.size = ring.residueOrder
        field = ring.residueField
        g = int(field.primitive_element)
        self.xi = _gr_teichmullerLift(gr_residueLift(ring, g))
        powers = []
        cur = ring.one()
        for j in range(self.size - 1):
            powers.append(cur)
            cur = cur * self.xi
        if cur != ring.one():
            raise gr_RingError("the generator of the Teichmuller set of %r "
                               "doesn't have order %i" % (ring, self.size - 1))
        self.powers = tuple(powers)
        self._gr_exponents = {}
        self._gr_byResidue = {0: ring.zero()}
        for (j, e) in enumerate(powers):
            self._gr_exponents[e.coeffs] = j
            self._gr_byResidue[gr_residueInt(e)] = e
        if len(self._gr_byResidue) != self.size:
            raise gr_RingError("the Teichmuller set of %r doesn't map onto "
                               "its residue field" % ring)

    def elements(self):
        """
        Returns a tuple of this set's elements: zero followed by the powers
        of xi in power order.
        """
        return (self.ring.zero(),) + self.powers

    def contains(self, a):
        return a.ring == self.ring and \
            (a.isZero() or a.coeffs in self._gr_exponents)

    def power(self, j):
        """
        Returns xi^j.
        """
        return self.powers[j % (self.size - 1)]

    def exponent(self, a):
        """
        Returns the j in [0, p^d - 1) with xi^j = 'a', or None if 'a' is zero
        or isn't in this set.
        """
        return self._gr_exponents.get(a.coeffs)

    def liftResidue(self, residue):
        """
        Returns the unique element of this set whose image in the residue
        field is the one whose integer representation is 'residue'.
        """
        result = self._gr_byResidue.get(residue)
        assert result is not None
        return result

    def text(self, a):
        """
        Returns the text form of the element 'a' of this set: '0' or 'xi^j'.

        See parse().
        """
        if a.isZero():
            result = "0"
        else:
            j = self.exponent(a)
            if j is None:
                raise gr_RingError("%r isn't a Teichmuller element" % (a,))
            result = "%s%i" % (gr_generatorPowerPrefix, j)
        return result

    def parse(self, txt):
        """
        Returns the element of this set whose text form is 'txt': '0', '1'
        or 'xi^j' for an int j.

        Raises a gr_RingError if 'txt' isn't of that form.
        """
        txt = str(txt).strip()
        if txt == "0":
            result = self.ring.zero()
        elif txt == "1":
            result = self.ring.one()
        elif txt.startswith(gr_generatorPowerPrefix):
            try:
                j = ut.ut_parseInt(txt[len(gr_generatorPowerPrefix):], 0)
            except ValueError as ex:
                raise gr_RingError("'%s' isn't a power of xi: %s" % (txt, ex))
            result = self.power(j)
        else:
            raise gr_RingError("'%s' doesn't denote a Teichmuller element: "
                               "use 0, 1 or xi^j" % txt)
        return result


class gr_Embedding(object):
    """
    Represents the canonical embedding of a Galois ring A = GR(p^r, l) into
    a Galois ring B = GR(p^r, l*n), together with the trace from B down to
    A.

    The embedding sends the class of x in A to the first root of A's
    modulus found among B's Teichmuller elements.
    """

    def __init__(self, source, target):
        object.__init__(self)
        if source.p != target.p or source.r != target.r or \
                target.d % source.d != 0:
            raise gr_RingError("%r can't be embedded in %r" %
                               (source, target))
        self.source = source
        self.target = target
        self.degree = target.d // source.d
        self._gr_frobeniusPower = source.residueOrder
        if source == target:
            self._gr_image = target.x()
        else:
            self._gr_image = self._gr_findImageOfX()
        self._gr_images = {}
        self._gr_preimages = {}
        for a in source.allElements():
            b = self._gr_map(a)
            self._gr_images[a.coeffs] = b
            self._gr_preimages[b.coeffs] = a
        if len(self._gr_preimages) != source.order:
            raise gr_RingError("the map from %r to %r isn't injective" %
                               (source, target))
        self._gr_traces = {}  # memo: target coeffs -> source element

    def _gr_findImageOfX(self):
        """
        Returns the first Teichmuller element of our target ring that is a
        root of our source ring's modulus.
        """
        B = self.target
        for e in B.teichmuller.elements():
            value = B.zero()
            for c in reversed(self.source.modulus):
                value = value * e + B.constant(c)
            if value.isZero():
                return e
        raise gr_RingError("the modulus of %r has no root in %r" %
                           (self.source, B))

    def _gr_map(self, a):
        B = self.target
        result = B.zero()
        power = B.one()
        for c in a.coeffs:
            result = result + B.constant(c) * power
            power = power * self._gr_image
        return result

    def embed(self, a):
        """
        Returns the image of the element 'a' of our source ring in our
        target ring.
        """
        if a.ring != self.source:
            raise gr_RingError("%r isn't an element of %r" % (a, self.source))
        return self._gr_images[a.coeffs]

    def preimage(self, b):
        """
        Returns the element of our source ring that embeds as 'b', or None
        if there isn't one.
        """
        return self._gr_preimages.get(b.coeffs)

    def isInSource(self, b):
        """
        Returns True iff the element 'b' of our target ring is the image of
        an element of our source ring.
        """
        return b.coeffs in self._gr_preimages

    def frobenius(self, b):
        """
        Returns the image of 'b' under the generalized Frobenius automorphism
        of our target ring that fixes our source ring: each p-adic digit is
        raised to the power |residue field of the source|.
        """
        B = self.target
        T = B.teichmuller
        result = B.zero()
        scale = B.one()
        pElt = B.constant(B.p)
        for digit in gr_padicDigits(b):
            if not digit.isZero():
                j = T.exponent(digit)
                result = result + T.power(j * self._gr_frobeniusPower) * scale
            scale = scale * pElt
        return result

    def trace(self, b):
        """
        Returns the trace of the element 'b' of our target ring down to our
        source ring: the sum of the images of 'b' under the powers of
        frobenius().
        """
        if b.ring != self.target:
            raise gr_RingError("%r isn't an element of %r" % (b, self.target))
        result = self._gr_traces.get(b.coeffs)
        if result is None:
            total = self.target.zero()
            cur = b
            for i in range(self.degree):
                total = total + cur
                cur = self.frobenius(cur)
            result = self.preimage(total)
            if result is None:
                raise gr_RingError("the trace %r of %r isn't in %r" %
                                   (total, b, self.source))
            self._gr_traces[b.coeffs] = result
        assert result.ring == self.source
        return result


# Functions.

def _gr_buildResidueField(p, d, modulus):
    """
    Returns the galois field class of the residue field F_p[x]/(F mod p) of
    the ring with modulus 'modulus'.
    """
    try:
        if d == 1:
            result = galois.GF(p)
        else:
            poly = galois.Poly([c % p for c in reversed(modulus)],
                               field = galois.GF(p))
            result = galois.GF(p ** d, irreducible_poly = poly)
    except ValueError as ex:
        raise gr_RingError("the modulus %s isn't irreducible modulo %i: %s"
                           % (modulus, p, ex))
    assert result.order == p ** d
    return result

def _gr_teichmullerLift(a):
    """
    Returns the Teichmuller element with the same residue as the unit or
    zero 'a', found as the fixpoint of a -> a^(p^d).
    """
    q = a.ring.residueOrder
    result = a
    for i in range(a.ring.r + 1):
        nxt = result ** q
        if nxt == result:
            return result
        result = nxt
    raise gr_RingError("the Teichmuller lift of %r didn't converge" % (a,))

def _gr_henselLift(p, r, d, residueModulus, cap):
    """
    Returns the coefficients of the monic basic irreducible polynomial of
    degree 'd' over Z_{p^r} whose roots are the Teichmuller lifts of the
    roots of 'residueModulus', a monic irreducible polynomial over F_p.
    """
    naive = gr_RingParams(p, r, d, residueModulus, cap)
    tau = naive.teichmuller.liftResidue(gr_residueInt(naive.x()))
    conjugates = [tau ** (p ** i) for i in range(d)]
    poly = [naive.one()]
    for root in conjugates:
        shifted = [naive.zero()] + poly
        scaled = [root * c for c in poly] + [naive.zero()]
        poly = [s - m for (s, m) in zip(shifted, scaled)]
    result = []
    for c in poly:
        if any(c.coeffs[1:]):
            raise gr_RingError("the lift of %s has a non-constant "
                               "coefficient %r" % (residueModulus, c))
        result.append(c.coeffs[0])
    assert len(result) == d + 1
    assert all((a - b) % p == 0 for (a, b) in zip(result, residueModulus))
    return tuple(result)

def gr_makeRing(p, r, d, cap = gr_defaultCap):
    """
    Builds and returns the Galois ring GR(p^r, d): its modulus is the Hensel
    lift of the lexicographically first monic irreducible polynomial of
    degree 'd' over F_p.

    Raises a gr_RingError if 'p' isn't prime, if 'r' or 'd' isn't positive
    or if the ring would have more than 'cap' elements.
    """
    if not galois.is_prime(p):
        raise gr_RingError("%i isn't a prime" % p)
    if r < 1 or d < 1:
        raise gr_RingError("the exponents r = %i and d = %i must both be "
                           "positive" % (r, d))
    if (p ** r) ** d > cap:
        raise gr_RingError("GR(%i^%i, %i) has %i elements, which exceeds "
                           "the cap of %i" % (p, r, d, (p ** r) ** d, cap))
    f = galois.irreducible_poly(p, d, method = "min")
    residueModulus = tuple(int(c) for c in reversed(f.coeffs))
    modulus = _gr_henselLift(p, r, d, residueModulus, cap)
    result = gr_RingParams(p, r, d, modulus, cap)
    assert result.order == (p ** r) ** d
    return result

def gr_ringArith(a, b, op):
    """
    Returns the result of applying the arithmetic operation 'op' - one of
    the gr_allArithOps - to the ring elements 'a' and 'b' ('b' is ignored
    when 'op' is gr_NEG, and is a non-negative int exponent when it's
    gr_POW).

    Raises a gr_RingError if 'a' and 'b' aren't elements of the same ring.
    """
    assert op in gr_allArithOps
    ring = a.ring
    m = ring.characteristic
    if op == gr_NEG:
        return gr_RingElement(ring, tuple((-c) % m for c in a.coeffs))
    if op == gr_POW:
        return _gr_power(a, b)
    if b.ring != ring:
        raise gr_RingError("can't combine elements of %r and %r" %
                           (ring, b.ring))
    if op == gr_ADD:
        cs = tuple((x + y) % m for (x, y) in zip(a.coeffs, b.coeffs))
    elif op == gr_SUB:
        cs = tuple((x - y) % m for (x, y) in zip(a.coeffs, b.coeffs))
    else:
        cs = _gr_multiply(ring, a.coeffs, b.coeffs)
    return gr_RingElement(ring, cs)

def _gr_power(a, e):
    if not isinstance(e, int) or e < 0:
        raise gr_RingError("%r isn't a non-negative int exponent" % (e,))
    result = a.ring.one()
    base = a
    while e > 0:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result

def _gr_multiply(ring, xs, ys):
    d = ring.d
    m = ring.characteristic
    prod = [0] * (2 * d - 1)
    for (i, x) in enumerate(xs):
        if x:
            for (j, y) in enumerate(ys):
                prod[i + j] += x * y
    modulus = ring.modulus
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k] % m
        if c:
            for i in range(d):
                prod[k - d + i] -= c * modulus[i]
        prod[k] = 0
    return tuple(c % m for c in prod[:d])

def gr_residueInt(a):
    """
    Returns the integer representation in the residue field of the image of
    the ring element 'a': its coefficients modulo p read as base-p digits,
    constant term least significant.
    """
    p = a.ring.p
    return ut.ut_fromBaseDigits([c % p for c in a.coeffs], p)

def gr_rho(a):
    """
    Returns the image of the ring element 'a' in its ring's residue field.
    """
    return a.ring.residueField(gr_residueInt(a))

def gr_residueLift(ring, residue):
    """
    Returns the element of 'ring' whose coefficients are the base-p digits
    of the residue field element with integer representation 'residue'.
    (This is a lift, but not in general the Teichmuller one.)
    """
    return ring.element(ut.ut_baseDigits(int(residue), ring.p, ring.d))

def gr_padicDigits(a):
    """
    Returns a tuple of the r Teichmuller elements a_0, ..., a_{r-1} such
    that a = a_0 + a_1 p + ... + a_{r-1} p^(r-1).

    See gr_fromDigits().
    """
    ring = a.ring
    T = ring.teichmuller
    p = ring.p
    m = ring.characteristic
    result = []
    cur = a.coeffs
    for i in range(ring.r):
        digit = T.liftResidue(
            ut.ut_fromBaseDigits([c % p for c in cur], p))
        result.append(digit)
        diff = [(c - dc) % m for (c, dc) in zip(cur, digit.coeffs)]
        assert all(c % p == 0 for c in diff)
        cur = tuple(c // p for c in diff)
    assert len(result) == ring.r
    return tuple(result)

def gr_fromDigits(digits, ring):
    """
    Returns the element a_0 + a_1 p + ... of 'ring' whose p-adic digits are
    the Teichmuller elements in 'digits'.

    Raises a gr_RingError if there are more than r digits, or if any of
    them isn't a Teichmuller element of 'ring'.
    """
    if len(digits) > ring.r:
        raise gr_RingError("%r has only %i p-adic digits" % (ring, ring.r))
    T = ring.teichmuller
    result = ring.zero()
    scale = ring.one()
    pElt = ring.constant(ring.p)
    for digit in digits:
        if not T.contains(digit):
            raise gr_RingError("the digit %r isn't a Teichmuller element of "
                               "%r" % (digit, ring))
        result = result + digit * scale
        scale = scale * pElt
    return result

def gr_coprimeTeichmuller(T):
    """
    Returns a list of the elements of the Teichmuller set 'T' that generate
    its group of nonzero elements: the xi^j with j coprime to p^d - 1.
    """
    order = T.size - 1
    result = [T.power(j) for j in range(order)
                if math.gcd(j, order) == 1]
    assert result
    return result

def gr_embedding(A, B):
    """
    Returns the gr_Embedding of the ring 'A' into the ring 'B'.

    Note: B keeps the embeddings into it that this builds, so they last as
    long as B does.
    """
    memo = B._gr_embeddingsInto
    result = memo.get(A.key())
    if result is None:
        result = gr_Embedding(A, B)
        memo[A.key()] = result
    return result

def gr_embed(a, B):
    """
    Returns the image of the element 'a' of a ring A under the canonical
    embedding of A into the ring 'B'.
    """
    return gr_embedding(a.ring, B).embed(a)

def gr_traceBA(b, A):
    """
    Returns the trace of the element 'b' of a ring B down to the ring 'A'.

    Raises a gr_RingError if A can't be embedded in B.
    """
    return gr_embedding(A, b.ring).trace(b)

def gr_elementText(a):
    """
    Returns the canonical text form of the ring element 'a': its
    coefficients, constant term first, separated by commas.

    See gr_parseElement().
    """
    return gr_coefficientSeparator.join(str(c) for c in a.coeffs)

def gr_parseElement(txt, ring):
    """
    Returns the element of 'ring' whose canonical text form is 'txt'.

    Raises a gr_RingError if 'txt' isn't the text form of an element of
    'ring'.
    """
    parts = [s.strip() for s in txt.split(gr_coefficientSeparator)]
    if len(parts) != ring.d:
        raise gr_RingError("'%s' doesn't have the %i coefficients of an "
                           "element of %r" % (txt, ring.d, ring))
    try:
        cs = [ut.ut_parseInt(s, 0, ring.characteristic - 1) for s in parts]
    except ValueError as ex:
        raise gr_RingError("'%s' isn't an element of %r: %s" %
                           (txt, ring, ex))
    return ring.element(cs)

def gr_residueText(value, p, d):
    """
    Returns the canonical text form of the element of F_{p^d} whose integer
    representation is 'value': its d coefficients, constant term first,
    separated by commas.
    """
    return gr_coefficientSeparator.join(
        str(c) for c in ut.ut_baseDigits(int(value), p, d))

def gr_parseResidue(txt, p, d):
    """
    Returns the integer representation of the element of F_{p^d} whose
    canonical text form is 'txt'.

    Raises a gr_RingError if 'txt' isn't such a text form.

    See gr_residueText().
    """
    parts = [s.strip() for s in txt.split(gr_coefficientSeparator)]
    if len(parts) != d:
        raise gr_RingError("'%s' doesn't have the %i coefficients of an "
                           "element of F_%i" % (txt, d, p ** d))
    try:
        digits = [ut.ut_parseInt(s, 0, p - 1) for s in parts]
    except ValueError as ex:
        raise gr_RingError("'%s' isn't an element of F_%i: %s" %
                           (txt, p ** d, ex))
    return ut.ut_fromBaseDigits(digits, p)

def gr_operationTables(ring):
    """
    Returns a pair of numpy arrays (add, mul) such that add[i, j] (resp.
    mul[i, j]) is the index of the sum (resp. product) of the elements of
    'ring' with indices i and j.
    """
    elements = list(ring.allElements())
    size = len(elements)
    add = np.empty((size, size), dtype = np.int64)
    mul = np.empty((size, size), dtype = np.int64)
    for (i, a) in enumerate(elements):
        for (j, b) in enumerate(elements):
            add[i, j] = ring.indexOf(a + b)
            mul[i, j] = ring.indexOf(a * b)
    return (add, mul)

def gr_checkRingAxioms(ring):
    """
    Checks that the addition and multiplication of 'ring' make it a
    commutative ring with identity whose units are exactly the elements
    with a nonzero residue, returning a list of descriptions of the
    violations found (which is empty iff there are none).

    Associativity and distributivity are checked over every triple of
    elements iff the ring has at most gr_maxExhaustiveAxiomsOrder elements,
    and over every triple drawn from its first gr_maxExhaustiveAxiomsOrder
    elements otherwise.
    """
    result = []
    (add, mul) = gr_operationTables(ring)
    size = ring.order
    zero = ring.indexOf(ring.zero())
    one = ring.indexOf(ring.one())
    ids = np.arange(size)
    if not np.array_equal(add, add.T):
        result.append("addition isn't commutative")
    if not np.array_equal(mul, mul.T):
        result.append("multiplication isn't commutative")
    if not np.array_equal(add[zero], ids):
        result.append("0 isn't an additive identity")
    if not np.array_equal(mul[one], ids):
        result.append("1 isn't a multiplicative identity")
    if not np.all(np.any(add == zero, axis = 1)):
        result.append("some element has no additive inverse")
    sample = min(size, gr_maxExhaustiveAxiomsOrder)
    for a in range(sample):
        sub = slice(0, sample)
        if not np.array_equal(add[add[a, sub]][:, sub],
                              add[a][add[sub, sub]]):
            result.append("addition isn't associative at %r" %
                          (ring.elementAt(a),))
            break  # for
        if not np.array_equal(mul[mul[a, sub]][:, sub],
                              mul[a][mul[sub, sub]]):
            result.append("multiplication isn't associative at %r" %
                          (ring.elementAt(a),))
            break  # for
        lhs = mul[a][add[sub, sub]]
        rhs = add[mul[a, sub][:, None], mul[a, sub][None, :]]
        if not np.array_equal(lhs, rhs):
            result.append("multiplication doesn't distribute over addition "
                          "at %r" % (ring.elementAt(a),))
            break  # for
    hasInverse = np.any(mul == one, axis = 1)
    for (i, a) in enumerate(ring.allElements()):
        if bool(hasInverse[i]) != a.isUnit():
            result.append("whether %r is a unit doesn't match its residue" %
                          (a,))
            break  # for
    assert result is not None
    return result

def gr_checkDigits(ring):
    """
    Checks that every element of 'ring' is rebuilt from its p-adic digits
    and that its digits are Teichmuller elements, returning a list of
    descriptions of the violations found.
    """
    result = []
    T = ring.teichmuller
    for a in ring.allElements():
        digits = gr_padicDigits(a)
        if not all(T.contains(x) for x in digits):
            result.append("a digit of %r isn't a Teichmuller element" % (a,))
        elif gr_fromDigits(digits, ring) != a:
            result.append("%r isn't rebuilt from its digits" % (a,))
    return result

def gr_checkTeichmuller(ring):
    """
    Checks that the Teichmuller set of 'ring' is closed under
    multiplication, fixed by x -> x^(p^d) and in bijection with the residue
    field, returning a list of descriptions of the violations found.
    """
    result = []
    T = ring.teichmuller
    elements = T.elements()
    q = ring.residueOrder
    if len(set(gr_residueInt(e) for e in elements)) != q:
        result.append("the Teichmuller set isn't in bijection with the "
                      "residue field")
    for e in elements:
        if e ** q != e:
            result.append("%r isn't fixed by x -> x^%i" % (e, q))
    for (a, b) in itertools.product(elements, repeat = 2):
        if not T.contains(a * b):
            result.append("%r * %r isn't a Teichmuller element" % (a, b))
            break  # for
    return result

def gr_checkTrace(embedding):
    """
    Checks that the trace of 'embedding' is additive, linear over its
    source ring and onto it, returning a list of descriptions of the
    violations found.
    """
    result = []
    A = embedding.source
    B = embedding.target
    bs = list(B.allElements())
    traces = [embedding.trace(b) for b in bs]
    if len(set(traces)) != A.order:
        result.append("the trace from %r to %r isn't onto" % (B, A))
    for b in bs:
        for c in bs:
            if embedding.trace(b + c) != \
                    embedding.trace(b) + embedding.trace(c):
                result.append("the trace isn't additive at %r, %r" % (b, c))
                return result
    for a in A.allElements():
        ea = embedding.embed(a)
        for (b, tb) in zip(bs, traces):
            if embedding.trace(ea * b) != a * tb:
                result.append("the trace isn't %r-linear at %r, %r" %
                              (A, a, b))
                return result
    return result
