# Defines the verification of a code instance: that distinct keys have
# distinct encoding rules, checked both by constructing a distinguishing
# source state for each pair of keys and by comparing the keys' rows of the
# tag matrix, and the exact impersonation and substitution probabilities.
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

from fractions import Fraction
import multiprocessing

import numpy as np

import grauthcode.construction as cc
import grauthcode.galoisring as gr
import grauthcode.utilities as ut


# Constants.

# The cases that a pair of keys (k0, k1) falls into, according to whether
# they address the same vector x and the same socle element w.
vf_CASE_I = "I"         # same x, same w
vf_CASE_II = "II"       # different x, same w
vf_CASE_III = "III"     # same x, different w
vf_CASE_IV = "IV"       # different x, different w
vf_allCases = [vf_CASE_I, vf_CASE_II, vf_CASE_III, vf_CASE_IV]

# The label used when a witness had to be found by searching S.
vf_BRUTE_FORCE = "brute-force"

# The labels of the branches of the witness construction.
vf_allAssertionLabels = ["I", "II.0.0", "II.0.1.0.0", "II.0.1.0.1",
    "II.0.1.1.0.0", "II.0.1.1.0.1", "II.0.1.1.1", "II.1.0", "II.1.1.0.0",
    "II.1.1.0.1", "III.0", "III.1.0", "III.1.1", "IV.0", "IV.1",
    vf_BRUTE_FORCE]

# Verification modes.
vf_EXHAUSTIVE = "exhaustive"
vf_SAMPLED = "sampled"
vf_allModes = [vf_EXHAUSTIVE, vf_SAMPLED]

# The identifier of the random number generation algorithm used to sample
# pairs of keys.
vf_rngAlgorithm = "numpy.random.Generator(PCG64(SeedSequence(seed)))"

# The number of chunks that exhaustive verification's pairs are split into
# per worker process.
_vf_chunksPerJob = 4

# The maximum number of example pairs kept in a report per kind of result.
_vf_maxExamples = 10

# The reasons recorded when a witness construction needs the fallback.
_vf_NOT_IN_S = "the constructed state isn't a source state"
_vf_TAGS_EQUAL = "the constructed state doesn't distinguish the keys"
_vf_NO_THETA_T = "no theta and t with Tr(theta p^t delta) a nonzero socle " \
    "element"
_vf_NO_ZETA = "no zeta_k in Z with the needed exponent of p"
_vf_NO_T = "no t with Tr(p^t delta) a nonzero socle element"


# Classes.

class vf_VerificationError(Exception):
    """
    The class of exception raised when a verification can't be carried out,
    for example because it would exceed the cap.
    """
    pass

class vf_CollisionError(vf_VerificationError):
    """
    The class of exception raised when two distinct keys turn out to have
    the same encoding rule.
    """

    def __init__(self, msg, report = None):
        vf_VerificationError.__init__(self, msg)
        self.report = report


class vf_CasePartition(object):
    """
    Represents the case that a pair of distinct keys falls into, together
    with the (x, w, offset) coordinates of each of the keys.
    """

    def __init__(self, case, x, y, w0, w1, k00, k10):
        object.__init__(self)
        assert case in vf_allCases
        self.case = case
        self.x = x
        self.y = y
        self.w0 = w0
        self.w1 = w1
        self.k00 = k00
        self.k10 = k10


class vf_WitnessReport(object):
    """
    Represents the result of looking for a source state that distinguishes
    two keys: the label of the construction branch that produced it (or
    vf_BRUTE_FORCE), the branch that was tried first, the state itself and
    the two keys' tags for it.

    'note' describes why the branch that was tried didn't produce a
    witness, and is None if it did.
    """

    def __init__(self, k0, k1, partition, assertionUsed, branch, witness,
                 tags, note = None):
        object.__init__(self)
        assert witness is None or tags[0] != tags[1]
        self.k0 = k0
        self.k1 = k1
        self.partition = partition
        self.assertionUsed = assertionUsed
        self.branch = branch
        self.witness = witness
        self.tags = tags
        self.note = note

    def isConstructive(self):
        return self.witness is not None and \
            self.assertionUsed != vf_BRUTE_FORCE


class vf_InjectivityReport(object):
    """
    Represents the result of checking that distinct keys have distinct
    encoding rules, over a set of pairs of keys.

    Reports on disjoint sets of pairs can be merged: counts add up and
    examples are kept in merge order.
    """

    def __init__(self, mode):
        object.__init__(self)
        assert mode in vf_allModes
        self.mode = mode
        self.pairCount = 0
        self.caseCounts = dict((c, 0) for c in vf_allCases)
        self.caseFallbacks = dict((c, 0) for c in vf_allCases)
        self.labelCounts = dict((a, 0) for a in vf_allAssertionLabels)
        self.fallbacks = {}     # (branch, reason) -> [count, first pair]
        self.collisions = []
        self.collisionCount = 0
        self.oracleMismatches = []
        self.oracleMismatchCount = 0
        self.distinctRows = None
        self.seed = None

    def record(self, report, oracleDiffers):
        """
        Records the vf_WitnessReport 'report' on a pair of keys whose
        encoding rules the oracle found to differ iff 'oracleDiffers' is
        True.
        """
        pair = (report.k0, report.k1)
        case = report.partition.case
        self.pairCount += 1
        self.caseCounts[case] += 1
        found = report.witness is not None
        if found:
            self.labelCounts[report.assertionUsed] += 1
        if not report.isConstructive():
            self.caseFallbacks[case] += 1
            key = (report.branch, report.note)
            entry = self.fallbacks.get(key)
            if entry is None:
                self.fallbacks[key] = [1, pair]
            else:
                entry[0] += 1
        if found != oracleDiffers:
            self.oracleMismatchCount += 1
            if len(self.oracleMismatches) < _vf_maxExamples:
                self.oracleMismatches.append(pair)
        if not oracleDiffers:
            self.collisionCount += 1
            if len(self.collisions) < _vf_maxExamples:
                self.collisions.append(pair)

    def merge(self, other):
        """
        Adds the counts and examples of the report 'other' to ours.
        """
        assert other.mode == self.mode
        self.pairCount += other.pairCount
        for c in vf_allCases:
            self.caseCounts[c] += other.caseCounts[c]
            self.caseFallbacks[c] += other.caseFallbacks[c]
        for a in vf_allAssertionLabels:
            self.labelCounts[a] += other.labelCounts[a]
        for (key, (count, pair)) in other.fallbacks.items():
            entry = self.fallbacks.get(key)
            if entry is None:
                self.fallbacks[key] = [count, pair]
            else:
                entry[0] += count
        self.collisionCount += other.collisionCount
        self.collisions.extend(other.collisions)
        del self.collisions[_vf_maxExamples:]
        self.oracleMismatchCount += other.oracleMismatchCount
        self.oracleMismatches.extend(other.oracleMismatches)
        del self.oracleMismatches[_vf_maxExamples:]

    def constructiveCount(self):
        return self.pairCount - sum(self.caseFallbacks.values())

    def isCollisionFree(self):
        return self.collisionCount == 0

    def summary(self):
        """
        Returns a one-line summary of this report.
        """
        return "%i collisions / %i pairs" % (self.collisionCount,
                                             self.pairCount)


class vf_AttackReport(object):
    """
    Represents the exact impersonation and substitution probabilities of a
    code instance, together with the messages that attain them and the
    key counts of the best impersonation state's tags.
    """

    def __init__(self, pI, impersonation, histogram, pS, substitution):
        object.__init__(self)
        self.pI = pI
        self.impersonation = impersonation      # (state index, tag)
        self.histogram = histogram              # key count per tag
        self.pS = pS
        self.substitution = substitution
            # ((state index, tag), (state index, tag)), or None


class vf_Verifier(object):
    """
    Verifies properties of a code instance. The oracle against which
    witness constructions are checked compares the keys' encoding rules
    state by state, using the instance's tag matrix once it's been built:
    it's only built for exhaustive verification and the attack
    probabilities.
    """

    def __init__(self, instance):
        object.__init__(self)
        self.instance = instance
        self.params = instance.params
        self._vf_tagMatrix = None
        zero = self.params.zeroVector()
        self._vf_firstN = [v for v in instance.sets.N if v != zero][0]
        emb = self.params.embedding
        self._vf_spares = [emb.embed(c) for c in instance.spares]
        spareSet = set(self._vf_spares)
        TB = self.params.TB
        self._vf_thetaOrder = [e for e in TB.powers if e in spareSet] + \
                              [e for e in TB.powers if e not in spareSet]

    # Helpers.

    def _vf_tr(self, b):
        return self.params.trace(b)

    def _vf_phi(self, a):
        return self.params.grayMap.image(a)

    def _vf_projL(self, a):
        """
        Returns the element of L with the same p-adic digits as 'a' except
        for the last, which is zero.
        """
        digits = gr.gr_padicDigits(a)
        return gr.gr_fromDigits(list(digits[:-1]), self.params.A)

    def _vf_isNonzeroSocle(self, a):
        return (not a.isZero()) and a.valuation() >= self.params.r - 1

    def _vf_state(self, s0, s1, s2):
        return cc.cc_SourceState(s0, s1, s2)

    def _vf_tags(self, k0, k1, s):
        return (cc.cc_encode(self.params, k0, s),
                cc.cc_encode(self.params, k1, s))

    def buildTagMatrix(self):
        """
        Returns the |S| x |K| tag matrix of our instance, building it the
        first time it's needed.

        Raises a vf_VerificationError if the matrix exceeds the cap.
        """
        if self._vf_tagMatrix is None:
            try:
                self._vf_tagMatrix = cc.cc_buildTagMatrix(self.instance)
            except cc.cc_CodeError as ex:
                raise vf_VerificationError(str(ex))
        return self._vf_tagMatrix

    tagMatrix = property(buildTagMatrix)

    def firstDistinguishingState(self, k0, k1):
        """
        Returns the index in S of the first source state whose tags under
        the keys 'k0' and 'k1' differ, or None if there isn't one.
        """
        M = self._vf_tagMatrix
        if M is not None:
            differing = np.flatnonzero(M[:, k0] != M[:, k1])
            result = int(differing[0]) if len(differing) else None
        else:
            result = None
            for (i, s) in enumerate(self.instance.states):
                (t0, t1) = self._vf_tags(k0, k1, s)
                if t0 != t1:
                    result = i
                    break  # for
        return result

    def rowsDiffer(self, k0, k1):
        """
        Returns True iff the encoding rules of the keys 'k0' and 'k1'
        differ.
        """
        return self.firstDistinguishingState(k0, k1) is not None

    # Case classification.

    def classifyCase(self, k0, k1):
        """
        Returns the vf_CasePartition of the distinct keys 'k0' and 'k1'.
        """
        if k0 == k1:
            raise vf_VerificationError("the keys must be distinct, but both "
                                       "are %i" % k0)
        try:
            (x, w0, o0) = self.params.keyCoords(k0)
            (y, w1, o1) = self.params.keyCoords(k1)
        except cc.cc_CodeError as ex:
            raise vf_VerificationError(str(ex))
        if x == y:
            case = vf_CASE_I if w0 == w1 else vf_CASE_III
        else:
            case = vf_CASE_II if w0 == w1 else vf_CASE_IV
        return vf_CasePartition(case, x, y, w0, w1, o0, o1)

    # Witness construction.

    def constructWitness(self, k0, k1):
        """
        Returns a vf_WitnessReport describing a source state whose tags
        under the keys 'k0' and 'k1' differ. The state is built by the
        branch of the case analysis that the pair of keys falls into, and
        if that doesn't produce a state that distinguishes the keys then S
        is searched for one.

        Raises a vf_CollisionError if there's no such state in S.
        """
        part = self.classifyCase(k0, k1)
        (label, candidates, reason) = self._vf_recipe(part)
        for s in candidates:
            if not self.instance.isSourceState(s):
                reason = reason or _vf_NOT_IN_S
                continue  # for
            tags = self._vf_tags(k0, k1, s)
            if tags[0] != tags[1]:
                return vf_WitnessReport(k0, k1, part, label, label, s, tags)
            reason = _vf_TAGS_EQUAL
        if reason is None:
            reason = _vf_TAGS_EQUAL
        i = self.firstDistinguishingState(k0, k1)
        if i is None:
            report = vf_WitnessReport(k0, k1, part, vf_BRUTE_FORCE, label,
                                      None, None, reason)
            raise vf_CollisionError("the keys %i and %i have the same "
                                    "encoding rule" % (k0, k1), report)
        s = self.instance.states[i]
        tags = self._vf_tags(k0, k1, s)
        assert tags[0] != tags[1]
        return vf_WitnessReport(k0, k1, part, vf_BRUTE_FORCE, label, s, tags,
                                reason)

    def _vf_recipe(self, part):
        """
        Returns a triple (label, candidates, reason): the label of the
        branch of the case analysis that 'part' falls into, a list of the
        source states that branch constructs - in the order they should be
        tried - and None, or a description of why the branch can't
        construct any in place of None.
        """
        if part.case == vf_CASE_I:
            result = self._vf_caseI(part)
        elif part.case == vf_CASE_II:
            result = self._vf_caseII(part)
        elif part.case == vf_CASE_III:
            result = self._vf_caseIII(part)
        else:
            result = self._vf_caseIV(part)
        return result

    def _vf_caseI(self, part):
        params = self.params
        (A, B) = (params.A, params.B)
        s1 = self._vf_firstN
        g = self._vf_tr(params.dot(s1, part.x))
        d0 = ut.ut_baseDigits(part.k00, params.q, params.r - 1)
        d1 = ut.ut_baseDigits(part.k10, params.q, params.r - 1)
        pos = [i for i in range(params.r - 1) if d0[i] != d1[i]][0]
        target = A.constant(params.p ** pos)
        s = self._vf_state(B.zero(), s1, self._vf_projL(target - g))
        return (vf_CASE_I, [s], None)

    def _vf_caseIII(self, part):
        params = self.params
        (A, B) = (params.A, params.B)
        s1 = self._vf_firstN
        if part.k00 == part.k10:
            return ("III.0", [self._vf_state(B.zero(), s1, A.zero())], None)
        g = self._vf_tr(params.dot(s1, part.x))
        if self._vf_phi(g + part.w0)[part.k00] == \
                self._vf_phi(g + part.w1)[part.k10]:
            s = self._vf_state(B.zero(), s1, self._vf_projL(-g))
            result = ("III.1.0", [s], None)
        else:
            result = ("III.1.1", [self._vf_state(B.zero(), s1, A.zero())],
                      None)
        return result

    def _vf_caseIV(self, part):
        params = self.params
        zeroV = params.zeroVector()
        hx = self._vf_tr(params.evaluateF(part.x))
        hy = self._vf_tr(params.evaluateF(part.y))
        zero = params.A.zero()
        if self._vf_phi(hx)[part.k00] == self._vf_phi(hy)[part.k10]:
            s = self._vf_state(self._vf_spares[0], zeroV, zero)
            result = ("IV.0", [s], None)
        else:
            result = ("IV.1", [self._vf_state(c, zeroV, zero)
                                 for c in self._vf_spares], None)
        return result

    def _vf_caseII(self, part):
        params = self.params
        (A, B) = (params.A, params.B)
        (x, y) = (part.x, part.y)
        j = [i for i in range(params.n) if x[i] != y[i]][0]
        delta = x[j] - y[j]
        same = (part.k00 == part.k10)
        plan = "II.0" if same else "II.1"

        if delta.valuation() >= params.r - 1:
            theta = self._vf_firstTheta(delta, B.one())
            if theta is None:
                return (plan + ".0", [], _vf_NO_THETA_T)
            s1 = params.unitVector(j, theta)
            if same:
                return ("II.0.0", [self._vf_state(B.zero(), s1, A.zero())],
                        None)
            s2 = self._vf_projL(-self._vf_tr(theta * x[j]))
            return ("II.1.0", [self._vf_state(B.zero(), s1, s2)], None)

        found = self._vf_findThetaT(delta)
        if found is None:
            return (plan + ".1", [], _vf_NO_THETA_T)
        (theta, t) = found
        if self._vf_tr(x[j]) != self._vf_tr(y[j]):
            return self._vf_distinctTraces(part, j, delta)

        zeta = self._vf_zetaFor(t)
        if zeta is None:
            return (plan + ".1.0", [], _vf_NO_ZETA)
        c = zeta + theta * B.constant(params.p ** t)
        s1 = params.unitVector(j, c)
        fx = params.evaluateF(x)
        fy = params.evaluateF(y)
        gx = self._vf_tr(theta * fx)
        gy = self._vf_tr(theta * fy)
        bare = self._vf_state(theta, params.zeroVector(), A.zero())
        if same:
            if self._vf_phi(gx)[part.k00] == self._vf_phi(gy)[part.k10]:
                s2 = self._vf_projL(-self._vf_tr(c * x[j]))
                result = ("II.0.1.0.0", [self._vf_state(theta, s1, s2)],
                          None)
            else:
                result = ("II.0.1.0.1", [bare], None)
        else:
            if self._vf_phi(gx) == self._vf_phi(gy):
                first = self._vf_projL(-gx - self._vf_tr(c * x[j]))
                s2s = [first] + [l for l in self.instance.sets.L
                                   if l != first]
                result = ("II.1.1.0.0",
                          [self._vf_state(theta, s1, l) for l in s2s], None)
            else:
                result = ("II.1.1.0.1", [bare], None)
        return result

    def _vf_distinctTraces(self, part, j, delta):
        """
        Returns the recipe for a pair of keys in case II whose vectors' j-th
        components have distinct traces.
        """
        params = self.params
        (A, B) = (params.A, params.B)
        x = part.x
        hx = self._vf_tr(params.evaluateF(part.x))
        hy = self._vf_tr(params.evaluateF(part.y))
        if self._vf_phi(hx)[part.k00] != self._vf_phi(hy)[part.k10]:
            s = self._vf_state(self._vf_spares[0], params.zeroVector(),
                               A.zero())
            return ("II.0.1.1.1", [s], None)
        trDelta = self._vf_tr(delta)
        t0 = None
        for t in range(params.r):
            if self._vf_isNonzeroSocle(A.constant(params.p ** t) * trDelta):
                t0 = t
                break  # for
        if t0 is None:
            return ("II.0.1.1.0", [], _vf_NO_T)
        if t0 == 0:
            if part.k00 == part.k10:
                s2 = A.zero()
            else:
                s2 = self._vf_projL(-self._vf_tr(x[j]))
            s = self._vf_state(B.zero(), params.unitVector(j), s2)
            return ("II.0.1.1.0.0", [s], None)
        pt = B.constant(params.p ** t0)
        s0 = params.etaB[(t0 - 1) * params.n + j]
        s1 = params.unitVector(j, pt)
        first = self._vf_projL(-self._vf_tr(pt * x[j]))
        s2s = [first] + [l for l in self.instance.sets.L if l != first]
        return ("II.0.1.1.0.1", [self._vf_state(s0, s1, l) for l in s2s],
                None)

    def _vf_firstTheta(self, delta, scale):
        """
        Returns the first Teichmuller element theta of B, in our preferred
        order, such that Tr(theta 'scale' 'delta') is a nonzero socle
        element, or None if there isn't one.
        """
        for theta in self._vf_thetaOrder:
            if self._vf_isNonzeroSocle(self._vf_tr(theta * scale * delta)):
                return theta
        return None

    def _vf_findThetaT(self, delta):
        """
        Returns the first pair (theta, t) with 1 <= t <= r - 1 such that
        Tr(theta p^t 'delta') is a nonzero socle element, or None if there
        isn't one.
        """
        B = self.params.B
        for t in range(1, self.params.r):
            theta = self._vf_firstTheta(delta, B.constant(self.params.p ** t))
            if theta is not None:
                return (theta, t)
        return None

    def _vf_zetaFor(self, t):
        """
        Returns the element zeta_k of Z for the first k whose exponent of p
        is 't', preferring those that are in T(A), or None if there isn't
        one.
        """
        params = self.params
        ks = [k for k in range(cc.cc_zetaRange(params))
                if cc.cc_pExponent(params, k) == t]
        inA = [k for k in ks if params.embedding.isInSource(params.Z[k])]
        if inA:
            result = params.Z[inA[0]]
        elif ks:
            result = params.Z[ks[0]]
        else:
            result = None
        return result

    # Injectivity.

    def checkPairs(self, pairs, mode = vf_EXHAUSTIVE):
        """
        Returns a vf_InjectivityReport on the pairs of distinct keys in
        'pairs'.
        """
        if mode == vf_EXHAUSTIVE:
            self.buildTagMatrix()
        result = vf_InjectivityReport(mode)
        for (k0, k1) in pairs:
            oracleDiffers = self.rowsDiffer(k0, k1)
            try:
                report = self.constructWitness(k0, k1)
            except vf_CollisionError as ex:
                report = ex.report
            result.record(report, oracleDiffers)
        return result

    def verifyInjectivity(self, mode = vf_EXHAUSTIVE, count = None,
                          seed = 0, jobs = 1):
        """
        Checks that distinct keys have distinct encoding rules, over every
        pair of keys (if 'mode' is vf_EXHAUSTIVE) or over 'count' pairs
        drawn using the seed 'seed' (if 'mode' is vf_SAMPLED), using 'jobs'
        worker processes.

        Returns a vf_InjectivityReport.
        """
        params = self.params
        K = params.keyCount
        if jobs < 1:
            raise vf_VerificationError("the number of jobs must be "
                                       "positive, not %i" % jobs)
        if mode == vf_EXHAUSTIVE:
            if K * K > params.cap:
                raise vf_VerificationError("checking all pairs of the %i "
                    "keys exceeds the cap of %i" % (K, params.cap))
            self.buildTagMatrix()
            chunks = _vf_exhaustiveChunks(K, jobs * _vf_chunksPerJob)
        elif mode == vf_SAMPLED:
            if count is None or count < 1:
                raise vf_VerificationError("sampled verification needs a "
                                           "positive count")
            pairs = vf_samplePairs(K, count, seed)
            size = max(1, -(-len(pairs) // (jobs * _vf_chunksPerJob)))
            chunks = [("pairs", pairs[i:i + size])
                        for i in range(0, len(pairs), size)]
        else:
            raise vf_VerificationError("'%s' isn't a verification mode" %
                                       mode)

        if jobs == 1:
            partials = [_vf_runChunk(self, chunk, mode) for chunk in chunks]
        else:
            args = [(chunk, mode) for chunk in chunks]
            with multiprocessing.Pool(jobs, initializer = _vf_initWorker,
                    initargs = (params.description(),)) as pool:
                partials = pool.map(_vf_runWorkerChunk, args)

        result = vf_InjectivityReport(mode)
        for partial in partials:
            result.merge(partial)
        if mode == vf_EXHAUSTIVE:
            result.distinctRows = int(np.unique(self.tagMatrix,
                                                axis = 1).shape[1])
            assert result.pairCount == K * (K - 1) // 2
        else:
            result.seed = seed
        return result

    # Attack probabilities.

    def _vf_tagCounts(self):
        """
        Returns the |S| x q numpy array whose entry (i, t) is the number of
        keys under which the i-th source state has tag t.
        """
        q = self.params.q
        M = self.tagMatrix
        result = np.stack([np.bincount(row, minlength = q) for row in M])
        return result

    def _vf_impersonation(self):
        params = self.params
        K = params.keyCount
        S = len(self.instance.states)
        if K * S > params.cap:
            raise vf_VerificationError("computing p_I takes %i steps, which "
                                       "exceeds the cap of %i" %
                                       (K * S, params.cap))
        counts = self._vf_tagCounts()
        flat = int(np.argmax(counts))
        (i, t) = divmod(flat, params.q)
        result = (Fraction(int(counts[i, t]), K), (i, t), counts)
        assert Fraction(1, params.q) <= result[0] <= 1
        return result

    def probImpersonation(self):
        """
        Returns the exact impersonation probability: the maximum over
        messages (s, t) of the fraction of keys under which s has tag t.
        """
        return self._vf_impersonation()[0]

    def _vf_substitution(self, counts):
        params = self.params
        q = params.q
        K = params.keyCount
        M = self.tagMatrix
        S = len(self.instance.states)
        if K * S * S > params.cap:
            raise vf_VerificationError("computing p_S takes %i steps, which "
                                       "exceeds the cap of %i" %
                                       (K * S * S, params.cap))
        offsets = (np.arange(S, dtype = np.int64) * q * q)[:, None]
        (bestNum, bestDen, best) = (-1, 1, None)
        for i in range(S):
            codes = M[i][None, :] * q + M + offsets
            joint = np.bincount(codes.ravel(), minlength = S * q * q)
            joint = joint.reshape(S, q, q)
            joint[i] = -1
            for t in range(q):
                den = int(counts[i, t])
                if den == 0:
                    continue  # for
                col = joint[:, t, :]
                flat = int(np.argmax(col))
                num = int(col.flat[flat])
                if num * bestDen > bestNum * den:
                    (bestNum, bestDen) = (num, den)
                    best = ((i, t), divmod(flat, q))
        if best is None:
            result = (Fraction(0), None)
        else:
            result = (Fraction(bestNum, bestDen), best)
        assert 0 <= result[0] <= 1
        return result

    def probSubstitution(self):
        """
        Returns the exact substitution probability: the maximum over
        messages (s, t) sent under at least one key, and messages (s', t')
        with s' != s, of the fraction of the keys under which s has tag t
        under which s' has tag t'.
        """
        return self._vf_substitution(self._vf_tagCounts())[0]

    def attackProbabilities(self):
        """
        Returns a vf_AttackReport on our instance.
        """
        (pI, impersonation, counts) = self._vf_impersonation()
        (pS, substitution) = self._vf_substitution(counts)
        histogram = [int(c) for c in counts[impersonation[0]]]
        return vf_AttackReport(pI, impersonation, histogram, pS,
                               substitution)


# Functions.

def vf_buildVerifier(instance):
    return vf_Verifier(instance)

def vf_samplePairs(keyCount, count, seed):
    """
    Returns a list of 'count' pairs of distinct keys less than 'keyCount',
    drawn by a generator seeded with 'seed'.
    """
    if keyCount < 2:
        raise vf_VerificationError("there must be at least two keys to "
                                   "sample pairs of")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    result = []
    while len(result) < count:
        (k0, k1) = (int(k) for k in rng.integers(0, keyCount, size = 2))
        if k0 != k1:
            result.append((k0, k1))
    return result

def _vf_exhaustiveChunks(keyCount, chunkCount):
    """
    Returns a list of chunks that together cover every pair (k0, k1) with
    k0 < k1 < 'keyCount': each chunk is a range of k0 values.
    """
    chunkCount = max(1, min(chunkCount, keyCount))
    size = -(-keyCount // chunkCount)
    result = [("firstKeys", (start, min(start + size, keyCount)))
                for start in range(0, keyCount, size)]
    return result

def _vf_chunkPairs(chunk, keyCount):
    (kind, value) = chunk
    if kind == "firstKeys":
        (start, end) = value
        for k0 in range(start, end):
            for k1 in range(k0 + 1, keyCount):
                yield (k0, k1)
    else:
        for pair in value:
            yield pair

def _vf_runChunk(verifier, chunk, mode):
    pairs = _vf_chunkPairs(chunk, verifier.params.keyCount)
    return verifier.checkPairs(pairs, mode)

_vf_workerVerifier = None   # the verifier of a worker process

def _vf_initWorker(description):
    """
    Initializes a worker process by building the verifier of the instance
    whose parameters are described by 'description'.
    """
    global _vf_workerVerifier
    params = cc.cc_buildCodeParams(**description)
    _vf_workerVerifier = vf_Verifier(cc.cc_buildCodeInstance(params))

def _vf_runWorkerChunk(args):
    (chunk, mode) = args
    assert _vf_workerVerifier is not None
    return _vf_runChunk(_vf_workerVerifier, chunk, mode)
