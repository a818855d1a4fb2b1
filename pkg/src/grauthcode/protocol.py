# Defines the simulation of the transmitter/receiver protocol of a code
# instance over a channel that an adversary can read and overwrite, and the
# Monte Carlo estimates of the adversary's success.
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
import math
import multiprocessing

import numpy as np

import grauthcode.construction as cc
import grauthcode.galoisring as gr
import grauthcode.utilities as ut
import grauthcode.verifier as vf


# Constants.

# The receiver's verdicts.
ps_ACCEPT = "accept"
ps_REJECT = "reject"

# The kinds of adversary.
ps_IMPERSONATION = "impersonation"
ps_SUBSTITUTION = "substitution"
ps_allAdversaries = [ps_IMPERSONATION, ps_SUBSTITUTION]

# The identifier of the random number generation algorithm used by
# simulations: each trial has its own generator, seeded with the pair
# (seed, trial index).
ps_rngAlgorithm = "numpy.random.Generator(PCG64(SeedSequence([seed, trial])))"

# The number of standard errors within which a simulated frequency is
# expected to be of the exact probability.
ps_sigmaCount = 3

# The maximum number of keys drawn in a single trial while looking for one
# that's consistent with the observed message.
_ps_maxKeyDraws = 1000000

# The number of chunks of trials given to each worker process.
_ps_chunksPerJob = 4


# Classes.

class ps_ProtocolError(Exception):
    """
    The class of exception raised when a message is malformed or a
    simulation can't be run.
    """
    pass


class ps_Message(object):
    """
    Represents a message (s, t): a source state and its tag.

    Note: instances are immutable.
    """

    def __init__(self, source, tag):
        object.__init__(self)
        self.source = source
        self.tag = int(tag)

    def __eq__(self, other):
        return isinstance(other, ps_Message) and \
            self.source == other.source and self.tag == other.tag

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.source, self.tag))

    def __repr__(self):
        return "ps_Message(%r, %i)" % (self.source, self.tag)


class ps_Channel(object):
    """
    Represents a public channel carrying frames from a transmitter to a
    receiver. An adversary, if there is one, sees each frame as it's sent
    and returns the frame that's delivered in its place.
    """

    def __init__(self, adversary = None):
        object.__init__(self)
        self._ps_adversary = adversary
        self._ps_frames = []

    def send(self, frame):
        assert frame is not None
        if self._ps_adversary is not None:
            frame = self._ps_adversary(frame)
        self._ps_frames.append(frame)

    def inject(self, frame):
        """
        Puts 'frame' on this channel without a transmitter having sent
        anything.
        """
        self._ps_frames.append(frame)

    def deliver(self):
        """
        Returns the oldest frame on this channel and removes it.

        Raises a ps_ProtocolError if there isn't one.
        """
        if not self._ps_frames:
            raise ps_ProtocolError("there's no frame on the channel to "
                                   "deliver")
        return self._ps_frames.pop(0)

    def isEmpty(self):
        return not self._ps_frames


class ps_SimConfig(object):
    """
    Represents the configuration of a simulation: the number of trials, the
    seed and the kind of adversary. Keys are drawn uniformly from K.
    """

    def __init__(self, trials, seed, adversary = ps_IMPERSONATION):
        object.__init__(self)
        if not isinstance(trials, int) or trials < 1:
            raise ps_ProtocolError("a simulation needs at least one trial, "
                                   "not %s" % trials)
        if not isinstance(seed, int) or seed < 0:
            raise ps_ProtocolError("the seed %s must be a non-negative "
                                   "integer" % seed)
        if adversary not in ps_allAdversaries:
            raise ps_ProtocolError("'%s' isn't a kind of adversary: use one "
                "of %s" % (adversary, ", ".join(ps_allAdversaries)))
        self.trials = trials
        self.seed = seed
        self.adversary = adversary
        self.keyDraw = "uniform"


class ps_SimReport(object):
    """
    Represents the result of a simulation: how often the adversary's forged
    message was accepted, compared with the exact success probability.
    """

    def __init__(self, config, successes, exact, observed, forged):
        object.__init__(self)
        self.adversary = config.adversary
        self.trials = config.trials
        self.seed = config.seed
        self.rngAlgorithm = ps_rngAlgorithm
        self.successes = successes
        self.frequency = Fraction(successes, config.trials)
        self.exact = exact
        self.observed = observed        # ps_Message, or None
        self.forged = forged            # ps_Message
        p = float(exact)
        self.standardError = math.sqrt(p * (1.0 - p) / config.trials)
        self.deviation = abs(float(self.frequency) - p)

    def isWithinTolerance(self):
        """
        Returns True iff our frequency is within ps_sigmaCount standard
        errors of the exact probability.
        """
        if self.standardError == 0.0:
            result = self.frequency == self.exact
        else:
            result = self.deviation <= ps_sigmaCount * self.standardError
        return result


# Functions.

def ps_transmit(params, k, s):
    """
    Returns the message that the transmitter sends for the source state 's'
    under the key 'k'.
    """
    return ps_Message(s, cc.cc_encode(params, k, s))

def ps_receive(params, k, m):
    """
    Returns ps_ACCEPT if the message 'm' is authentic under the key 'k',
    and ps_REJECT otherwise.

    Raises a ps_ProtocolError if 'm' is malformed.
    """
    _ps_checkMessage(params, m)
    if cc.cc_encode(params, k, m.source) == m.tag:
        result = ps_ACCEPT
    else:
        result = ps_REJECT
    return result

def _ps_checkMessage(params, m):
    if not isinstance(m, ps_Message):
        raise ps_ProtocolError("%r isn't a message" % (m,))
    s = m.source
    if s.s0.ring != params.B or len(s.s1) != params.n or \
            any(v.ring != params.B for v in s.s1) or s.s2.ring != params.A:
        raise ps_ProtocolError("the source state of %r isn't one of the "
                               "instance's" % (m,))
    if not (0 <= m.tag < params.q):
        raise ps_ProtocolError("the tag %i isn't in F_%i" %
                               (m.tag, params.q))

def ps_messageText(params, m):
    """
    Returns the text form 's0|s1_0|...|s1_{n-1}|s2|tag' of the message 'm'.
    """
    return cc.cc_stateFieldSeparator.join([cc.cc_stateText(m.source),
        gr.gr_residueText(m.tag, params.p, params.ell)])

def ps_encodeMessage(params, m):
    """
    Returns the frame carrying the message 'm'.
    """
    return ut.ut_buildFrame(ps_messageText(params, m))

def ps_decodeMessage(params, frame):
    """
    Returns the message carried by the bytes 'frame'.

    Raises a ps_ProtocolError if 'frame' isn't exactly one frame carrying a
    well-formed message.
    """
    try:
        (txt, rest) = ut.ut_splitFrame(frame)
    except ValueError as ex:
        raise ps_ProtocolError("malformed frame: %s" % ex)
    if rest:
        raise ps_ProtocolError("the frame is followed by %i extra bytes" %
                               len(rest))
    fields = txt.split(cc.cc_stateFieldSeparator)
    if len(fields) != params.n + 3:
        raise ps_ProtocolError("a message needs %i fields, not %i" %
                               (params.n + 3, len(fields)))
    try:
        s = cc.cc_parseState(params, fields[:-1])
        tag = gr.gr_parseResidue(fields[-1], params.p, params.ell)
    except (cc.cc_CodeError, gr.gr_RingError) as ex:
        raise ps_ProtocolError("malformed message '%s': %s" % (txt, ex))
    return ps_Message(s, tag)

def ps_trialGenerator(seed, trial):
    """
    Returns the random number generator used by the trial with index
    'trial' of a simulation seeded with 'seed'.
    """
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence([seed, trial])))

def _ps_drawKey(params, rng):
    return int(rng.integers(0, params.keyCount))

def _ps_drawConsistentKey(params, rng, observed):
    """
    Returns a key drawn uniformly from the keys under which the source
    state of the message 'observed' has its tag, by drawing uniform keys
    until one is.
    """
    for i in range(_ps_maxKeyDraws):
        k = _ps_drawKey(params, rng)
        if cc.cc_encode(params, k, observed.source) == observed.tag:
            return k
    raise ps_ProtocolError("no key consistent with %r was drawn in %i "
                           "attempts" % (observed, _ps_maxKeyDraws))

def ps_runTrial(instance, config, trial, observed, forged):
    """
    Runs the trial with index 'trial' of the simulation configured by
    'config', returning True iff the receiver accepts the adversary's
    message 'forged'. 'observed' is the legitimate message the transmitter
    sends, or None if the adversary is impersonating.
    """
    params = instance.params
    rng = ps_trialGenerator(config.seed, trial)
    forgedFrame = ps_encodeMessage(params, forged)
    if observed is None:
        k = _ps_drawKey(params, rng)
        channel = ps_Channel()
        channel.inject(forgedFrame)
    else:
        k = _ps_drawConsistentKey(params, rng, observed)
        channel = ps_Channel(adversary = lambda frame: forgedFrame)
        m = ps_transmit(params, k, observed.source)
        assert m == observed
        channel.send(ps_encodeMessage(params, m))
    received = ps_decodeMessage(params, channel.deliver())
    return ps_receive(params, k, received) == ps_ACCEPT

def _ps_strategyPlan(config, attack):
    """
    Returns a pair (observed, forged) of the (state index, tag) pairs of
    the messages that the adversary configured by 'config' relies on,
    using the vf_AttackReport 'attack': 'observed' is None for an
    impersonation.
    """
    if config.adversary == ps_IMPERSONATION:
        result = (None, attack.impersonation)
    else:
        if attack.substitution is None:
            raise ps_ProtocolError("the instance has no substitution to "
                                   "simulate")
        result = attack.substitution
    return result

def _ps_planMessages(instance, plan):
    states = instance.states
    (observed, forged) = plan
    if observed is not None:
        observed = ps_Message(states[observed[0]], observed[1])
    return (observed, ps_Message(states[forged[0]], forged[1]))

def ps_adversaryStrategy(instance, config, attack):
    """
    Returns a pair (observed, forged) of the messages that the adversary
    configured by 'config' relies on, using the vf_AttackReport 'attack'
    on 'instance': 'observed' is None for an impersonation.
    """
    return _ps_planMessages(instance, _ps_strategyPlan(config, attack))

def ps_runAttack(instance, config, attack = None, jobs = 1):
    """
    Runs the simulation configured by the ps_SimConfig 'config' against
    'instance' using 'jobs' worker processes, returning a ps_SimReport.
    'attack' is the instance's vf_AttackReport, which is computed if it's
    None.

    Note: every trial has its own generator, so the report doesn't depend
    on 'jobs'.
    """
    if jobs < 1:
        raise ps_ProtocolError("the number of jobs must be positive, not %i"
                               % jobs)
    if attack is None:
        attack = vf.vf_Verifier(instance).attackProbabilities()
    plan = _ps_strategyPlan(config, attack)
    (observed, forged) = _ps_planMessages(instance, plan)
    if config.adversary == ps_IMPERSONATION:
        exact = attack.pI
    else:
        exact = attack.pS
    if jobs == 1:
        successes = _ps_countSuccesses(instance, config,
                                       range(config.trials), plan)
    else:
        size = max(1, -(-config.trials // (jobs * _ps_chunksPerJob)))
        args = [(config, range(start, min(start + size, config.trials)),
                 plan) for start in range(0, config.trials, size)]
        with multiprocessing.Pool(jobs, initializer = _ps_initWorker,
                initargs = (instance.params.description(),)) as pool:
            successes = sum(pool.map(_ps_runWorkerChunk, args))
    return ps_SimReport(config, successes, exact, observed, forged)

def _ps_countSuccesses(instance, config, trials, plan):
    """
    Returns the number of the trials with indices in 'trials' in which the
    adversary following 'plan' succeeds.
    """
    (observed, forged) = _ps_planMessages(instance, plan)
    result = 0
    for trial in trials:
        if ps_runTrial(instance, config, trial, observed, forged):
            result += 1
    return result

_ps_workerInstance = None   # the code instance of a worker process

def _ps_initWorker(description):
    global _ps_workerInstance
    params = cc.cc_buildCodeParams(**description)
    _ps_workerInstance = cc.cc_buildCodeInstance(params)

def _ps_runWorkerChunk(args):
    (config, trials, plan) = args
    assert _ps_workerInstance is not None
    return _ps_countSuccesses(_ps_workerInstance, config, trials, plan)
