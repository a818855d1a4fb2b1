# Defines the functions and classes used to report on a run: the messages
# written as it proceeds, the findings it makes and the report that it
# finally outputs.
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

import sys

from fractions import Fraction
import json

import grauthcode.utilities as ut


# Constants.

# Verbosity levels (for error/message reporting).
SILENT = 0              # only report errors via a non-zero exit code
QUIET = 1               # only report errors
NORMAL_VERBOSITY = 2    # report errors and messages
VERBOSE = 3             # report errors, messages and debugging info

rp_allVerbosityLevels = range(VERBOSE + 1)

# Finding severities.
rp_INFO = "info"        # a fact worth recording, e.g. an audited count
rp_GAP = "gap"          # a stated claim that our computation contradicts
rp_FATAL = "fatal"      # a violated invariant: the run fails
rp_allSeverities = [rp_INFO, rp_GAP, rp_FATAL]

# Report formats.
rp_TABLE = "table"      # human-readable lines
rp_RECORDS = "records"  # one JSON object per line
rp_allFormats = [rp_TABLE, rp_RECORDS]

# The prefix of the header lines of a table-format report.
rp_headerPrefix = "#"

# The verbosity-related command line options.
_rp_verbosityOptions = "[-QSV] [--quiet|--silent|--verbose]"

# A description of the verbosity-related command line options.
_rp_verbosityOptionsDescription = """
    --silent or -S prevents anything but the report from being
        output, including error messages (so the only way to
        detect errors would be from examining the exit code)
    --quiet or -Q prevents anything except the report and error
        messages from being output
    --verbose or -V causes extra information (such as how long
        each step took) to be output

If more than one of the '-S', '-Q' or '-V' options - or the
equivalent long options - is specified then the last one is the
one that is used. The report is always written to standard output
(or to the file given with --out); all other messages are written
to standard error, so the report of a run is the same whatever
verbosity it was run with."""


# Functions.

def rp_verbosityOptions():
    """
    Returns a string consisting of the verbosity-related command line
    options, as might appear in the first line of the description of a
    program that accepted such options.
    """
    result = _rp_verbosityOptions
    assert result is not None
    return result

def rp_verbosityOptionsDescription():
    """
    Returns a description of the verbosity-related command line options.
    """
    result = _rp_verbosityOptionsDescription
    assert result is not None
    return result

def rp_fractionText(value):
    """
    Returns the canonical text form 'a/b' of the rational 'value'.
    """
    value = Fraction(value)
    result = "%i/%i" % (value.numerator, value.denominator)
    return result

def _rp_jsonValue(value):
    """
    Returns a version of 'value' that json can serialize.
    """
    if isinstance(value, Fraction):
        result = rp_fractionText(value)
    elif isinstance(value, (list, tuple)):
        result = [_rp_jsonValue(v) for v in value]
    elif isinstance(value, dict):
        result = dict((str(k), _rp_jsonValue(v)) for (k, v) in value.items())
    elif isinstance(value, (bool, int, float, str)) or value is None:
        result = value
    else:
        # numpy scalars among others
        try:
            result = int(value)
        except (TypeError, ValueError):
            result = str(value)
    return result

def _rp_toRecordLine(record):
    return json.dumps(_rp_jsonValue(record), sort_keys = True)


# Classes.

class rp_FatalError(Exception):
    """
    The class of exception raised when a run hits an error that causes it to
    terminate immediately.
    """
    pass


class rp_Reporter(object):
    """
    Writes the messages describing the progress of a run to standard error,
    subject to a verbosity level.
    """

    def __init__(self, verbosity = NORMAL_VERBOSITY, out = None):
        object.__init__(self)
        assert verbosity in rp_allVerbosityLevels
        self._rp_verbosity = verbosity
        self._rp_out = out

    def _rp_stream(self):
        result = self._rp_out
        if result is None:
            result = sys.stderr
        return result

    def report(self, msg):
        """
        Writes 'msg' as an informational message.
        """
        assert msg is not None
        if self._rp_verbosity > QUIET:
            print(msg, file = self._rp_stream())

    def warn(self, msg):
        """
        Writes 'msg' as a warning.
        """
        assert msg is not None
        if self._rp_verbosity > SILENT:
            print("WARNING: " + msg, file = self._rp_stream())

    def fail(self, msg):
        """
        Writes 'msg' as an error message and then returns: we don't exit.
        """
        assert msg is not None
        if self._rp_verbosity > SILENT:
            print(msg, file = self._rp_stream())

    def debug(self, msg):
        """
        Writes 'msg' as debugging information.
        """
        assert msg is not None
        if self._rp_verbosity >= VERBOSE:
            print("DEBUG: " + msg, file = self._rp_stream())

    def die(self, msg):
        """
        Writes 'msg' as an error message and then raises an rp_FatalError.
        """
        assert msg is not None
        self.fail("\n%s\n" % msg)
        raise rp_FatalError(msg)

    def timing(self, name, seconds):
        """
        Writes how long the step named 'name' took as debugging information.
        """
        self.debug("timing: %s took %.3fs" % (name, seconds))


class rp_Finding(object):
    """
    Represents a single finding made during a run: a 'kind' naming what was
    checked, a severity (one of rp_allSeverities), a one-line message and a
    map of named values.
    """

    def __init__(self, kind, severity, message, fields = None):
        object.__init__(self)
        assert kind
        assert severity in rp_allSeverities
        assert message is not None
        self.kind = kind
        self.severity = severity
        self.message = message
        self.fields = dict(fields or {})

    def isFatal(self):
        return self.severity == rp_FATAL

    def record(self):
        """
        Returns this finding as a map suitable for a records-format report.
        """
        result = dict(self.fields)
        result.update({ "record": "finding", "kind": self.kind,
                        "severity": self.severity,
                        "message": self.message })
        return result

    def line(self):
        """
        Returns this finding as a line of a table-format report.
        """
        return "[%s] %s: %s" % (self.severity, self.kind, self.message)


class rp_RunReport(object):
    """
    Represents the report output by a run: what was run on which
    configuration, the rows making up the run's results and the findings
    made along the way.

    A table-format report starts with a header giving the subcommand, our
    fingerprint and every configuration item, unless 'tableHeader' is
    False.

    Note: reports don't include timings, so that two runs with the same
    arguments and configuration produce byte-identical reports.
    """

    def __init__(self, subcommand, toolVersion, configItems,
                 tableHeader = True):
        object.__init__(self)
        assert subcommand
        assert configItems is not None
        self.subcommand = subcommand
        self.toolVersion = toolVersion
        self.configItems = list(configItems)
        self.tableHeader = tableHeader
        self.rows = []
        self.findings = []

    def fingerprint(self):
        """
        Returns the SHA-256 fingerprint of our configuration items.
        """
        txt = "\n".join("%s=%s" % (n, v) for (n, v) in self.configItems)
        return ut.ut_sha256Hex(txt)

    def addRow(self, txt, fields = None):
        """
        Adds a row of results to this report: 'txt' is its table form and
        the map 'fields' - if any - its values in a records-format report.
        """
        assert txt is not None
        self.rows.append((txt, dict(fields or {})))

    def addFinding(self, finding):
        assert finding is not None
        self.findings.append(finding)

    def addFindings(self, findings):
        for f in findings:
            self.addFinding(f)

    def isFatal(self):
        """
        Returns True iff any of our findings is fatal.
        """
        return any(f.isFatal() for f in self.findings)

    def countBySeverity(self, severity):
        return len([f for f in self.findings if f.severity == severity])

    def render(self, format):
        """
        Returns the text of this report in the format 'format', which must
        be one of rp_allFormats.
        """
        assert format in rp_allFormats
        if format == rp_TABLE:
            lines = []
            if self.tableHeader:
                lines.extend(self._rp_headerLines())
            lines.extend(txt for (txt, fields) in self.rows)
            if self.findings:
                lines.append("")
                lines.append("Findings:")
                lines.extend(f.line() for f in self.findings)
        else:
            lines = [_rp_toRecordLine({ "record": "run",
                "subcommand": self.subcommand, "version": self.toolVersion,
                "fingerprint": self.fingerprint(),
                "config": dict(self.configItems) })]
            for (txt, fields) in self.rows:
                rec = dict(fields)
                rec.update({ "record": "row", "text": txt })
                lines.append(_rp_toRecordLine(rec))
            lines.extend(_rp_toRecordLine(f.record()) for f in self.findings)
        result = "\n".join(lines) + "\n"
        assert result is not None
        return result

    def _rp_headerLines(self):
        result = ["%s %s %s" % (rp_headerPrefix, self.subcommand,
                                self.toolVersion),
                  "%s fingerprint %s" % (rp_headerPrefix, self.fingerprint())]
        result.extend("%s %s = %s" % (rp_headerPrefix, n, v)
                      for (n, v) in self.configItems)
        result.append("")
        return result
