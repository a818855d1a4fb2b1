# Tests the simulation of the authentication protocol.
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

import grauthcode.construction as cc
import grauthcode.protocol as ps
import grauthcode.utilities as ut


def test_honest_messages_are_accepted(p0):
    params = p0.params
    for k in range(params.keyCount):
        for s in p0.states:
            m = ps.ps_transmit(params, k, s)
            assert ps.ps_receive(params, k, m) == ps.ps_ACCEPT

def test_tampered_tags_are_rejected(p0):
    params = p0.params
    s = p0.states[5]
    m = ps.ps_transmit(params, 37, s)
    for t in range(params.q):
        if t != m.tag:
            forged = ps.ps_Message(s, t)
            assert ps.ps_receive(params, 37, forged) == ps.ps_REJECT

def test_malformed_messages_are_rejected(p0, z25):
    params = p0.params
    s = p0.states[0]
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_receive(params, 0, ps.ps_Message(s, params.q))
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_receive(params, 0, (s, 0))
    alien = cc.cc_SourceState(z25.one(), [z25.zero()], z25.zero())
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_receive(params, 0, ps.ps_Message(alien, 0))

def test_frames_carry_messages(p0):
    params = p0.params
    for k in range(params.keyCount):
        for s in p0.states:
            m = ps.ps_transmit(params, k, s)
            frame = ps.ps_encodeMessage(params, m)
            assert ps.ps_decodeMessage(params, frame) == m
    m = ps.ps_transmit(params, 37, p0.states[30])
    assert len(ps.ps_messageText(params, m).split("|")) == params.n + 3

@pytest.mark.parametrize("txt", [
    "0,0|1,0|0,0",
    "0,0|1,0|0,0|1,0|0,0",
    "0,0|1,0|0,0|2,0",
    "0,0|1,5|0,0|1,0",
])
def test_malformed_frames_are_rejected(p0, txt):
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_decodeMessage(p0.params, ut.ut_buildFrame(txt))

def test_truncated_and_padded_frames_are_rejected(p0):
    params = p0.params
    frame = ps.ps_encodeMessage(params,
                                ps.ps_transmit(params, 0, p0.states[0]))
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_decodeMessage(params, frame[:-1])
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_decodeMessage(params, frame + b"\x00")

def test_channel():
    channel = ps.ps_Channel(adversary = lambda frame: frame + b"!")
    assert channel.isEmpty()
    channel.send(b"a")
    channel.inject(b"b")
    assert channel.deliver() == b"a!"
    assert channel.deliver() == b"b"
    with pytest.raises(ps.ps_ProtocolError):
        channel.deliver()

@pytest.mark.parametrize("args", [(0, 1), (10, -1), (10, 1, "replay"),
                                  (1.5, 1)])
def test_invalid_simulation_configurations(args):
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_SimConfig(*args)

def test_trial_generators_are_reproducible():
    a = ps.ps_trialGenerator(5, 3).integers(0, 1000, size = 8)
    b = ps.ps_trialGenerator(5, 3).integers(0, 1000, size = 8)
    c = ps.ps_trialGenerator(5, 4).integers(0, 1000, size = 8)
    assert list(a) == list(b)
    assert list(a) != list(c)

def test_impersonation_matches_its_probability(p0, p0Attack):
    config = ps.ps_SimConfig(2000, 11, ps.ps_IMPERSONATION)
    report = ps.ps_runAttack(p0, config, p0Attack)
    assert report.observed is None
    assert report.exact == p0Attack.pI
    assert report.isWithinTolerance()
    again = ps.ps_runAttack(p0, config, p0Attack)
    assert again.successes == report.successes

def test_substitution_matches_its_probability(p0, p0Attack):
    config = ps.ps_SimConfig(500, 11, ps.ps_SUBSTITUTION)
    report = ps.ps_runAttack(p0, config, p0Attack)
    assert report.observed is not None
    assert report.observed.source != report.forged.source
    assert report.exact == p0Attack.pS
    assert report.isWithinTolerance()

def test_simulations_dont_depend_on_the_number_of_jobs(p0, p0Attack):
    for adversary in ps.ps_allAdversaries:
        config = ps.ps_SimConfig(120, 4, adversary)
        one = ps.ps_runAttack(p0, config, p0Attack)
        two = ps.ps_runAttack(p0, config, p0Attack, jobs = 2)
        assert one.successes == two.successes
        assert one.forged == two.forged
        assert one.observed == two.observed
    with pytest.raises(ps.ps_ProtocolError):
        ps.ps_runAttack(p0, config, p0Attack, jobs = 0)

def test_runTrial_with_an_honest_forgery_always_succeeds(p0, p0Attack):
    config = ps.ps_SimConfig(20, 1, ps.ps_SUBSTITUTION)
    (observed, forged) = ps.ps_adversaryStrategy(p0, config, p0Attack)
    for trial in range(20):
        assert ps.ps_runTrial(p0, config, trial, observed, observed)
