# Defines the construction of a code instance: the sets it's built from,
# its source states, the layout of its keys and its encoding rules.
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

import numpy as np

import grauthcode.config as conf
import grauthcode.galoisring as gr
import grauthcode.graymap as gm
import grauthcode.resilience as rs
import grauthcode.utilities as ut


# Constants.

# The separator between the fields of the text form of a source state.
cc_stateFieldSeparator = "|"


# Classes.

class cc_CodeError(Exception):
    """
    The class of exception raised when a code instance can't be built from
    the parameters it's given, or when an argument to one of its
    operations is invalid.
    """
    pass


class cc_SourceState(object):
    """
    Represents a source state s = (s0, s1, s2): s0 is an element of B, s1 a
    vector of n elements of B and s2 an element of L.

    Note: instances are immutable.
    """

    __slots__ = ("s0", "s1", "s2", "_cc_key")

    def __init__(self, s0, s1, s2):
        self.s0 = s0
        self.s1 = tuple(s1)
        self.s2 = s2
        self._cc_key = (s0.coeffs, tuple(v.coeffs for v in self.s1),
                        s2.coeffs)

    def __eq__(self, other):
        return isinstance(other, cc_SourceState) and \
            self._cc_key == other._cc_key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._cc_key)

    def __repr__(self):
        return "(%s)" % cc_stateText(self)

    def pair(self):
        """
        Returns the (s0, s1) pair of this state.
        """
        return (self.s0, self.s1)


class cc_CodeParams(object):
    """
    Represents the parameters of a code instance with every default
    materialized: the rings A = GR(p^r, ell) and B = GR(p^r, ell*n), the
    resilience order t, the sequences eta, theta and Z and the map f.

    Keys are laid out so that key k addresses coordinate k mod q^(r-1) of
    the Gray image of v_{s,w}(x), where

        k div q^(r-1) = alpha_b(x) q + alpha_a(w)

    with alpha_b enumerating B^n lexicographically (x_0 most significant,
    each element by its index in B) and alpha_a enumerating the socle
    p^(r-1)A as 0, xi^0 p^(r-1), ..., xi^(q-2) p^(r-1).

    Note: instances are immutable.

    See cc_buildCodeParams().
    """

    def __init__(self, A, B, embedding, n, t, eta, theta, Z, f, cap):
        object.__init__(self)
        self.A = A
        self.B = B
        self.embedding = embedding
        self.p = A.p
        self.r = A.r
        self.ell = A.d
        self.n = n
        self.m = n
        self.t = t
        self.q = A.residueOrder
        self.qm = B.residueOrder
        self.TA = A.teichmuller
        self.TB = B.teichmuller
        self.eta = tuple(eta)
        self.etaB = tuple(embedding.embed(e) for e in eta)
        self.theta = tuple(theta)
        self.Z = tuple(Z)
        self.f = f
        self.cap = cap

        self.socle = tuple([A.zero()] + [e * A.socleGenerator()
                                          for e in self.TA.powers])
        self._cc_socleIndex = dict((w.coeffs, i)
                                   for (i, w) in enumerate(self.socle))
        self.blockLength = self.q ** (self.r - 1)
        self.vectorCount = B.order ** n
        self.keyCount = self.vectorCount * self.q * self.blockLength
        self.grayMap = gm.gm_GrayMap(A)

    def zeroVector(self):
        return tuple([self.B.zero()] * self.n)

    def unitVector(self, j, c = None):
        """
        Returns the vector c e_j of B^n, where 'c' defaults to 1.
        """
        assert 0 <= j < self.n
        if c is None:
            c = self.B.one()
        result = [self.B.zero()] * self.n
        result[j] = c
        return tuple(result)

    def vectorIndex(self, x):
        """
        Returns alpha_b(x) for the vector 'x' of B^n.
        """
        result = 0
        for v in x:
            result = result * self.B.order + self.B.indexOf(v)
        return result

    def vectorAt(self, index):
        """
        Returns the vector x of B^n with alpha_b(x) = 'index'.
        """
        assert 0 <= index < self.vectorCount
        digits = ut.ut_baseDigits(index, self.B.order, self.n)
        return tuple(self.B.elementAt(i) for i in reversed(digits))

    def socleIndex(self, w):
        """
        Returns alpha_a(w) for the socle element 'w', or None if 'w' isn't in
        the socle.
        """
        return self._cc_socleIndex.get(w.coeffs)

    def keyCoords(self, k):
        """
        Returns the (x, w, offset) triple that the key 'k' addresses.

        Raises a cc_CodeError if 'k' is out of range.
        """
        if not (0 <= k < self.keyCount):
            raise cc_CodeError("the key %i isn't in [0, %i)" %
                               (k, self.keyCount))
        (block, offset) = divmod(k, self.blockLength)
        (xIndex, wIndex) = divmod(block, self.q)
        result = (self.vectorAt(xIndex), self.socle[wIndex], offset)
        return result

    def keyOf(self, x, w, offset):
        """
        Returns the key that addresses coordinate 'offset' of the block of
        the vector 'x' and the socle element 'w'.

        See keyCoords().
        """
        wIndex = self.socleIndex(w)
        if wIndex is None:
            raise cc_CodeError("%r isn't in the socle" % (w,))
        if not (0 <= offset < self.blockLength):
            raise cc_CodeError("the offset %i isn't in [0, %i)" %
                               (offset, self.blockLength))
        block = self.vectorIndex(x) * self.q + wIndex
        return block * self.blockLength + offset

    def evaluateF(self, x):
        return rs.rs_evaluate(self.f, x)

    def dot(self, u, x):
        """
        Returns the dot product of the vectors 'u' and 'x' of B^n.
        """
        result = self.B.zero()
        for (a, b) in zip(u, x):
            result = result + a * b
        return result

    def trace(self, b):
        return self.embedding.trace(b)

    def canonicalItems(self, seed):
        """
        Returns a list of (name, text) pairs describing these parameters
        with every default materialized, followed by the seed 'seed'.
        """
        TA = self.TA
        TB = self.TB
        result = [
            ("p", str(self.p)), ("r", str(self.r)), ("ell", str(self.ell)),
            ("n", str(self.n)), ("t", str(self.t)),
            ("modulusA", gr.gr_coefficientSeparator.join(
                str(c) for c in self.A.modulus)),
            ("modulusB", gr.gr_coefficientSeparator.join(
                str(c) for c in self.B.modulus)),
            ("xiA", gr.gr_elementText(TA.xi)),
            ("xiB", gr.gr_elementText(TB.xi)),
            ("eta", conf.conf_elementListText([TA.text(e)
                                                 for e in self.eta])),
            ("theta", conf.conf_elementListText([TB.text(e)
                                                   for e in self.theta])),
            ("Z", conf.conf_elementListText([TB.text(e) for e in self.Z])),
            ("f", self.f.descriptor),
            ("seed", str(seed)),
            ("cap", str(self.cap))]
        return result

    def description(self):
        """
        Returns a map of the arguments that cc_buildCodeParams() needs to
        rebuild these parameters.
        """
        result = {
            "p": self.p, "r": self.r, "ell": self.ell, "n": self.n,
            "t": self.t,
            "eta": [self.TA.text(e) for e in self.eta],
            "theta": [self.TB.text(e) for e in self.theta],
            "Z": [self.TB.text(e) for e in self.Z],
            "f": self.f.descriptor,
            "cap": self.cap
        }
        return result


class cc_ConstructionSets(object):
    """
    Represents the sets a code instance is built from: N, L, D_eta, the
    T_{theta zeta_k k} for each k, and their union with D_eta, T_{eta theta
    Z}. Every set is kept as a tuple in its canonical enumeration order.
    """

    def __init__(self, N, L, DEta, TThetaZeta, TEtaThetaZ):
        object.__init__(self)
        self.N = tuple(N)
        self.L = tuple(L)
        self.DEta = tuple(DEta)
        self.TThetaZeta = tuple(tuple(s) for s in TThetaZeta)
        self.TEtaThetaZ = tuple(TEtaThetaZ)


class cc_CodeInstance(object):
    """
    Represents a code instance: its parameters, its construction sets and
    its source space S = P x L, where the admissible pairs P are

        ({0} x (N - {0})) u T_{eta theta Z} u ((T(A) - eta - {0}) x {0})

    Note: instances are immutable.

    See cc_buildCodeInstance().
    """

    def __init__(self, params, sets):
        object.__init__(self)
        self.params = params
        self.sets = sets
        (self.pairFamilies, self.pairs) = _cc_buildPairs(params, sets)
        self.states = tuple(cc_SourceState(s0, s1, s2)
                            for (s0, s1) in self.pairs for s2 in sets.L)
        self._cc_stateIndex = dict((s, i)
                                   for (i, s) in enumerate(self.states))
        self.spares = tuple(c for c in params.TA.powers
                            if c not in params.eta)

    def stateIndex(self, s):
        """
        Returns the position of the state 's' in our source space, or None
        if it isn't in it.
        """
        return self._cc_stateIndex.get(s)

    def isSourceState(self, s):
        return s in self._cc_stateIndex


class cc_CardinalityCheck(object):
    """
    Represents the comparison of a claimed cardinality with the size of the
    corresponding enumerated set.
    """

    def __init__(self, name, formula, claimed, actual, detail = None):
        object.__init__(self)
        self.name = name
        self.formula = formula
        self.claimed = claimed
        self.actual = actual
        self.detail = detail

    def matches(self):
        return self.claimed == self.actual


# Functions.

def _cc_parseList(texts, T, name):
    """
    Returns the list of the elements of the Teichmuller set 'T' whose text
    forms are in 'texts'.
    """
    result = []
    for txt in texts:
        try:
            result.append(T.parse(txt))
        except gr.gr_RingError as ex:
            raise cc_CodeError("%s: %s" % (name, ex))
    return result

def cc_buildRings(p, r, ell, n, cap = gr.gr_defaultCap):
    """
    Builds and returns a triple (A, B, embedding) consisting of the rings
    A = GR(p^r, ell) and B = GR(p^r, ell*n) and the embedding of A in B.
    """
    if ell < 1 or n < 1:
        raise cc_CodeError("ell = %i and n = %i must both be positive" %
                           (ell, n))
    try:
        A = gr.gr_makeRing(p, r, ell, cap)
        B = gr.gr_makeRing(p, r, ell * n, cap)
        embedding = gr.gr_embedding(A, B)
    except gr.gr_RingError as ex:
        raise cc_CodeError(str(ex))
    return (A, B, embedding)

def cc_buildCodeParams(p, r, ell, n, t = None, eta = None, theta = None,
                       Z = None, f = None, cap = gr.gr_defaultCap):
    """
    Builds and returns the cc_CodeParams with the specified parameters:
    'eta', 'theta' and 'Z' are lists of Teichmuller element texts ('0',
    '1' or 'xi^j') and 'f' a map descriptor, each defaulting when None.

    Raises a cc_CodeError if the parameters don't satisfy the conditions
    that a code instance's parameters have to.
    """
    if r < 2:
        raise cc_CodeError("r = %i: a code instance needs r >= 2" % r)
    (A, B, embedding) = cc_buildRings(p, r, ell, n, cap)
    q = A.residueOrder
    qm = B.residueOrder
    TA = A.teichmuller
    TB = B.teichmuller
    if t is None:
        t = n
    if not (1 <= t <= n):
        raise cc_CodeError("t = %i isn't in [1, n] = [1, %i]" % (t, n))
    keyCount = (B.order ** n) * (q ** r)
    if keyCount > cap:
        raise cc_CodeError("the instance has %i keys, which exceeds the cap "
                           "of %i" % (keyCount, cap))

    etaSize = (r - 1) * n
    if eta is None:
        candidates = [e for e in TA.powers if e != A.one()]
        if len(candidates) < etaSize:
            raise cc_CodeError("eta needs %i elements of T(A) - {0, 1} but "
                               "there are only %i" %
                               (etaSize, len(candidates)))
        etaElts = candidates[:etaSize]
    else:
        etaElts = _cc_parseList(eta, TA, "eta")
    if len(etaElts) != etaSize:
        raise cc_CodeError("eta has %i elements but needs (r - 1)n = %i" %
                           (len(etaElts), etaSize))
    if len(set(etaElts)) != len(etaElts):
        raise cc_CodeError("the elements of eta aren't distinct")
    if any(e.isZero() or e == A.one() for e in etaElts):
        raise cc_CodeError("eta can't contain 0 or 1")
    etaB = [embedding.embed(e) for e in etaElts]

    zSize = qm - 1 - etaSize
    if Z is None:
        zElts = [e for e in TB.powers if e not in etaB]
    else:
        zElts = _cc_parseList(Z, TB, "Z")
    if len(zElts) != zSize:
        raise cc_CodeError("Z has %i elements but needs q^m - 1 - (r - 1)n "
                           "= %i" % (len(zElts), zSize))
    if len(set(zElts)) != len(zElts):
        raise cc_CodeError("the elements of Z aren't distinct")
    if any(e.isZero() for e in zElts):
        raise cc_CodeError("Z can't contain 0")
    if set(zElts) & set(etaB):
        raise cc_CodeError("Z and eta must be disjoint")

    generators = gr.gr_coprimeTeichmuller(TB)
    if theta is None:
        thetaElts = [TB.xi] * n
    else:
        thetaElts = _cc_parseList(theta, TB, "theta")
    if len(thetaElts) != n:
        raise cc_CodeError("theta has %i elements but needs n = %i" %
                           (len(thetaElts), n))
    for e in thetaElts:
        if e not in generators:
            raise cc_CodeError("theta's element %s doesn't generate T(B) - "
                               "{0}" % TB.text(e))

    if (r - 1) * (n + 1) >= qm - 1:
        raise cc_CodeError("(r - 1)(n + 1) = %i isn't less than q^m - 1 = "
                           "%i" % ((r - 1) * (n + 1), qm - 1))

    if f is None:
        f = rs.rs_defaultDescriptor(n)
    try:
        fMap = rs.rs_parseMapDescriptor(f, B, n, t)
    except rs.rs_ResilienceError as ex:
        raise cc_CodeError("f: %s" % ex)

    result = cc_CodeParams(A, B, embedding, n, t, etaElts, thetaElts, zElts,
                           fMap, cap)
    return result

def cc_buildXbt(params, b):
    """
    Returns the list of the vectors in X_{b,t} - before duplicates are
    removed - for the vector 'b' of Teichmuller elements of B:

        sum of b_j e_j over j <= t - 2, b_{t-1} e_{t-1}, ..., b_{n-1} e_{n-1}
    """
    n = params.n
    t = params.t
    zero = params.B.zero()
    head = [b[j] if j <= t - 2 else zero for j in range(n)]
    result = [tuple(head)]
    for j in range(t - 1, n):
        result.append(params.unitVector(j, b[j]))
    return result

def cc_buildN(params):
    """
    Returns the set N - the union of the X_{b,t} over b in T(B)^n - as a
    tuple in alpha_b order.
    """
    found = {}
    for b in itertools.product(params.TB.elements(), repeat = params.n):
        for v in cc_buildXbt(params, b):
            found[params.vectorIndex(v)] = v
    result = tuple(found[i] for i in sorted(found))
    return result

def cc_lElements(A):
    """
    Returns the elements r_0 + r_1 p + ... + r_{r-2} p^(r-2), with each r_i in
    T(A), as a tuple in the ring's index order.
    """
    T = A.teichmuller
    found = {}
    for digits in itertools.product(T.elements(), repeat = A.r - 1):
        a = gr.gr_fromDigits(list(digits), A)
        found[A.indexOf(a)] = a
    result = tuple(found[i] for i in sorted(found))
    return result

def cc_buildL(params):
    """
    Returns the set L as a tuple in A's index order.
    """
    return cc_lElements(params.A)

def cc_checkLDifferences(A):
    """
    Checks that the difference of any two elements of L is either 0 or not
    in p^(r-1)A, returning a list of descriptions of the violations.
    """
    result = []
    L = cc_lElements(A)
    for (u, v) in itertools.product(L, repeat = 2):
        d = u - v
        if not d.isZero() and d.valuation() >= A.r - 1:
            result.append("%s - %s is a nonzero element of p^(r-1)A" %
                          (gr.gr_elementText(u), gr.gr_elementText(v)))
    return result

def cc_buildDEta(params):
    """
    Returns D_eta: the pairs (eta_{(i-1)n+j}, p^i e_j) for 1 <= i <= r - 1
    and 0 <= j < n, with eta's elements embedded in B.
    """
    B = params.B
    n = params.n
    if len(params.etaB) < (params.r - 1) * n:
        raise cc_CodeError("eta has too few elements")
    result = []
    for i in range(1, params.r):
        for j in range(n):
            result.append((params.etaB[(i - 1) * n + j],
                           params.unitVector(j, B.constant(params.p ** i))))
    return tuple(result)

def cc_zetaRange(params):
    """
    Returns the number of indices k that the sets T_{theta zeta_k k} are
    built for: q^m - (r - 1)n - 1.
    """
    return params.qm - (params.r - 1) * params.n - 1

def cc_pExponent(params, k):
    """
    Returns the exponent 1 + (k mod (r - 1)) of p in T_{theta zeta k}.
    """
    return 1 + (k % (params.r - 1))

def cc_buildTThetaZetaK(params, zeta, k):
    """
    Returns T_{theta zeta k}: the pairs

        (theta_j^i, (zeta + theta_j^i p^(1 + (k mod (r-1)))) e_j)

    for 0 <= i <= q^m - 2 and 0 <= j < n, without duplicates.
    """
    TB = params.TB
    if not TB.contains(zeta) or zeta.isZero():
        raise cc_CodeError("zeta must be a nonzero Teichmuller element of B")
    if not (0 <= k < cc_zetaRange(params)):
        raise cc_CodeError("k = %i isn't in [0, %i]" %
                           (k, cc_zetaRange(params) - 1))
    pk = params.B.constant(params.p ** cc_pExponent(params, k))
    result = []
    seen = set()
    for i in range(params.qm - 1):
        for j in range(params.n):
            th = params.theta[j] ** i
            pair = (th, params.unitVector(j, zeta + th * pk))
            key = _cc_pairKey(pair)
            if key not in seen:
                seen.add(key)
                result.append(pair)
    return tuple(result)

def cc_buildTEtaThetaZ(params):
    """
    Returns T_{eta theta Z}: the union of D_eta and the T_{theta zeta_k k}
    for 0 <= k <= q^m - (r - 1)n - 2, without duplicates.
    """
    sets = [cc_buildDEta(params)]
    sets.extend(cc_buildTThetaZetaK(params, params.Z[k], k)
                for k in range(cc_zetaRange(params)))
    return _cc_union(sets)

def _cc_pairKey(pair):
    (s0, s1) = pair
    return (s0.coeffs, tuple(v.coeffs for v in s1))

def _cc_union(sets):
    result = []
    seen = set()
    for s in sets:
        for pair in s:
            key = _cc_pairKey(pair)
            if key not in seen:
                seen.add(key)
                result.append(pair)
    return tuple(result)

def cc_buildConstructionSets(params):
    """
    Builds and returns the cc_ConstructionSets of the instance with
    parameters 'params'.
    """
    TThetaZeta = [cc_buildTThetaZetaK(params, params.Z[k], k)
                    for k in range(cc_zetaRange(params))]
    DEta = cc_buildDEta(params)
    result = cc_ConstructionSets(cc_buildN(params), cc_buildL(params),
                                 DEta, TThetaZeta,
                                 _cc_union([DEta] + TThetaZeta))
    return result

def _cc_buildPairs(params, sets):
    """
    Returns a pair consisting of the list of the three families of
    admissible (s0, s1) pairs and their union.
    """
    B = params.B
    zero = params.zeroVector()
    first = tuple((B.zero(), v) for v in sets.N if v != zero)
    second = sets.TEtaThetaZ
    third = tuple((params.embedding.embed(c), zero)
                  for c in params.TA.powers if c not in params.eta)
    families = [first, second, third]
    return (families, _cc_union(families))

def cc_buildCodeInstance(params):
    """
    Builds and returns the cc_CodeInstance with parameters 'params'.
    """
    sets = cc_buildConstructionSets(params)
    return cc_CodeInstance(params, sets)

def cc_buildSourceSpace(params):
    """
    Returns the source space S of the instance with parameters 'params' as
    a tuple of cc_SourceStates in their canonical order.
    """
    return cc_buildCodeInstance(params).states

def cc_vSW(params, s, w, x):
    """
    Returns v_{s,w}(x) = Tr(s0 f(x) + s1 . x) + s2 + w.

    Raises a cc_CodeError if 'w' isn't in the socle p^(r-1)A.
    """
    if params.socleIndex(w) is None:
        raise cc_CodeError("%r isn't in the socle" % (w,))
    g = params.trace(s.s0 * params.evaluateF(x) + params.dot(s.s1, x))
    return g + s.s2 + w

def cc_encode(params, k, s):
    """
    Returns the tag e_k(s): coordinate 'offset' of the Gray image of
    v_{s,w}(x), where (x, w, offset) are the coordinates of the key 'k'.
    The tag is the integer representation of an element of F_q.
    """
    (x, w, offset) = params.keyCoords(k)
    return params.grayMap.coordinate(cc_vSW(params, s, w, x), offset)

def cc_uS(params, s):
    """
    Returns u_s as a numpy array of the |K| tags of the state 's', in key
    order.
    """
    result = np.empty(params.keyCount, dtype = np.int64)
    L = params.blockLength
    q = params.q
    for xIndex in range(params.vectorCount):
        x = params.vectorAt(xIndex)
        g = params.trace(s.s0 * params.evaluateF(x) + params.dot(s.s1, x))
        base = g + s.s2
        for (wIndex, w) in enumerate(params.socle):
            start = (xIndex * q + wIndex) * L
            result[start:start + L] = params.grayMap.image(base + w)
    return result

def cc_buildTagMatrix(instance):
    """
    Returns the |S| x |K| numpy array whose row i is u_s for the i-th
    source state s of 'instance'.
    """
    params = instance.params
    work = len(instance.states) * params.keyCount
    if work > params.cap:
        raise cc_CodeError("the tag matrix has %i entries, which exceeds the "
                           "cap of %i" % (work, params.cap))
    result = np.empty((len(instance.states), params.keyCount),
                      dtype = np.int64)
    for (i, s) in enumerate(instance.states):
        result[i] = cc_uS(params, s)
    return result

def cc_stateText(s):
    """
    Returns the canonical text form 's0|s1_0|...|s1_{n-1}|s2' of the source
    state 's'.
    """
    parts = [gr.gr_elementText(s.s0)]
    parts.extend(gr.gr_elementText(v) for v in s.s1)
    parts.append(gr.gr_elementText(s.s2))
    return cc_stateFieldSeparator.join(parts)

def cc_parseState(params, fields):
    """
    Returns the cc_SourceState whose text fields - s0, the n components of
    s1 and s2 - are in the list 'fields'.

    Raises a cc_CodeError if they aren't valid.
    """
    n = params.n
    if len(fields) != n + 2:
        raise cc_CodeError("a source state needs %i fields, not %i" %
                           (n + 2, len(fields)))
    try:
        s0 = gr.gr_parseElement(fields[0], params.B)
        s1 = [gr.gr_parseElement(txt, params.B) for txt in fields[1:n + 1]]
        s2 = gr.gr_parseElement(fields[n + 1], params.A)
    except gr.gr_RingError as ex:
        raise cc_CodeError(str(ex))
    return cc_SourceState(s0, s1, s2)

def cc_cardinalityChecks(instance):
    """
    Returns a list of cc_CardinalityChecks comparing the claimed sizes of
    the construction sets with the enumerated ones.
    """
    params = instance.params
    sets = instance.sets
    (n, t, q, qm, r) = (params.n, params.t, params.q, params.qm, params.r)
    result = []

    wrong = []
    for b in itertools.product(params.TB.elements(), repeat = n):
        size = len(set(params.vectorIndex(v) for v in cc_buildXbt(params, b)))
        if size != n - t + 1:
            wrong.append((b, size))
    detail = None
    if wrong:
        (b, size) = wrong[0]
        detail = "%i of the %i vectors b have |X_{b,t}| != n - t + 1; for " \
            "example b = (%s) gives %i" % (len(wrong), qm ** n,
            " | ".join(gr.gr_elementText(v) for v in b), size)
    result.append(cc_CardinalityCheck("X_{b,t}", "n - t + 1", n - t + 1,
        n - t + 1 if not wrong else wrong[0][1], detail))

    result.append(cc_CardinalityCheck("N", "q^(m(t-1)) + (n-(t-1)) q^m",
        qm ** (t - 1) + (n - (t - 1)) * qm, len(sets.N)))
    result.append(cc_CardinalityCheck("L", "q^(r-1)", q ** (r - 1),
        len(sets.L)))
    result.append(cc_CardinalityCheck("D_eta", "(r-1)n", (r - 1) * n,
        len(sets.DEta)))
    for (k, s) in enumerate(sets.TThetaZeta):
        result.append(cc_CardinalityCheck("T_{theta zeta_%i %i}" % (k, k),
            "(q^m - 1)n", (qm - 1) * n, len(s)))
    result.append(cc_CardinalityCheck("T_{eta theta Z}",
        "[(r-1) + ((q^m-1) - (r-1)n)(q^m-1)]n",
        ((r - 1) + ((qm - 1) - (r - 1) * n) * (qm - 1)) * n,
        len(sets.TEtaThetaZ)))
    result.append(cc_CardinalityCheck("Z", "q^m - 1 - (r-1)n",
        qm - 1 - (r - 1) * n, len(params.Z)))
    return result

def cc_disjointnessChecks(instance):
    """
    Returns a list of descriptions of the overlaps found between D_eta and
    each T_{theta zeta_k k}, and between the three families of admissible
    pairs.
    """
    result = []
    dKeys = set(_cc_pairKey(pair) for pair in instance.sets.DEta)
    for (k, s) in enumerate(instance.sets.TThetaZeta):
        common = dKeys & set(_cc_pairKey(pair) for pair in s)
        if common:
            result.append("D_eta and T_{theta zeta_%i %i} share %i pairs" %
                          (k, k, len(common)))
    families = [set(_cc_pairKey(pair) for pair in f)
                for f in instance.pairFamilies]
    for (i, j) in itertools.combinations(range(len(families)), 2):
        common = families[i] & families[j]
        if common:
            result.append("the pair families %i and %i share %i pairs" %
                          (i, j, len(common)))
    return result

def cc_spareConditions(params):
    """
    Returns a list of (reading, holds) pairs for the side condition on the
    spare element: (r - 1)(n + 1) < q^m - 1, and the same with p^m in place
    of q^m.
    """
    lhs = (params.r - 1) * (params.n + 1)
    result = [("(r-1)(n+1) < q^m - 1", lhs < params.qm - 1),
              ("(r-1)(n+1) < p^m - 1", lhs < params.p ** params.m - 1)]
    return result
