# Defines the programs that make up the gr-authcode command: one per
# subcommand, each building what it needs from a configuration file and
# writing a report.
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
import sys
import time

import grauthcode.config as conf
import grauthcode.construction as cc
import grauthcode.galoisring as gr
import grauthcode.graymap as gm
import grauthcode.protocol as ps
import grauthcode.reporting as rp
import grauthcode.resilience as rs
import grauthcode.utilities as ut
import grauthcode.verifier as vf

from grauthcode.reporting import SILENT, QUIET, NORMAL_VERBOSITY, VERBOSE


# Constants.

# The name of the command.
cli_commandName = "gr-authcode"

# Exit codes.
cli_SUCCESS = 0
cli_USAGE_ERROR = 1
cli_VERIFICATION_FAILURE = 2

# The default number of trials run by the simulate subcommand.
cli_defaultTrials = 100000

# The separator between the fields of a row of a table-format report.
_cli_fieldSeparator = "\t"

# The separator between the tags in a row of an exported tag matrix.
_cli_tagSeparator = " "

# The exceptions that indicate that a configuration describes no valid
# instance.
_cli_configErrors = (ValueError, gr.gr_RingError, cc.cc_CodeError,
                     rs.rs_ResilienceError, ps.ps_ProtocolError)


# Functions.

def _cli_row(*fields):
    return _cli_fieldSeparator.join(str(f) for f in fields)

def _cli_vectorText(v):
    return " | ".join(gr.gr_elementText(x) for x in v)

def _cli_pairText(pair):
    (s0, s1) = pair
    return "%s ; %s" % (gr.gr_elementText(s0), _cli_vectorText(s1))

def _cli_ringItems(config, A, B):
    """
    Returns the canonical configuration items of a run that only builds the
    rings A and B described by 'config'.
    """
    result = config.canonicalItems()
    result.extend([
        ("modulusA", gr.gr_coefficientSeparator.join(str(c)
                                                     for c in A.modulus)),
        ("modulusB", gr.gr_coefficientSeparator.join(str(c)
                                                     for c in B.modulus)),
        ("xiA", gr.gr_elementText(A.teichmuller.xi)),
        ("xiB", gr.gr_elementText(B.teichmuller.xi))])
    return result

def _cli_violationFindings(kind, violations):
    return [rp.rp_Finding(kind, rp.rp_FATAL, v) for v in violations]

def main(argv):
    """
    Runs the subcommand named by the first of the command line arguments
    'argv' (which do NOT include the command's name) with the rest of
    them, returning the exit code.
    """
    assert argv is not None
    if not argv or argv[0] not in cli_programClasses:
        if argv and argv[0] not in ("-h", "-?", "--help"):
            print("\nUnknown subcommand: %s." % argv[0], file = sys.stderr)
        print(_cli_commandUsage(), file = sys.stderr)
        result = cli_USAGE_ERROR
    else:
        program = cli_programClasses[argv[0]]()
        result = program.run(argv[1:])
    return result

def _cli_commandUsage():
    lines = ["", "usage: %s SUBCOMMAND [OPTION ...]" % cli_commandName, "",
             "where SUBCOMMAND is one of:", ""]
    for name in cli_allSubcommands:
        lines.append("    %-20s %s" % (name, cli_programClasses[name].summary))
    lines.extend(["", "Run '%s SUBCOMMAND --help' for a subcommand's "
                  "options." % cli_commandName])
    return "\n".join(lines)


# Classes.

class cli_AbstractCodeProgram(ut.ut_AbstractProgram):
    """
    An abstract base class for classes that represent the subcommands of
    the gr-authcode command. Every subcommand reads a configuration file,
    builds a report and writes it to standard output or to a file.
    """

    # The name of the subcommand, and a one-line summary of what it does.
    subcommand = None
    summary = None

    def __init__(self):
        ut.ut_AbstractProgram.__init__(self, "%s %s" % (cli_commandName,
                                                        self.subcommand))

    def _usageMessage(self, progName, shortHelpOpts, longHelpOpts,
                     helpOptionsDesc):
        assert progName
        result = """
usage: %(progName)s %(shortHelpOpts)s %(longHelpOpts)s %(verbosityOpts)s -c PATH [-o PATH] [-f FORMAT] %(otherOpts)s

%(mainUsage)s
The configuration file is the one with pathname PATH given with the -c or
--config option. It's required.

If the -o or --out option is specified then the report is written to the
file with pathname PATH instead of to standard output. The -f or --format
option selects the report's format: 'table' (the default) for
human-readable lines or 'records' for one JSON object per line. Both
start with the run's fingerprint and its configuration, every default
filled in: the table's header lines start with '#'.
%(otherOptionsDesc)s
%(helpOptionsDesc)s
The other options are:
%(verbosityOptsDesc)s

The exit code is 0 on success, 1 if the arguments or the configuration are
invalid and 2 if the report contains a fatal finding.
""" % { "progName": progName, "shortHelpOpts": shortHelpOpts,
        "longHelpOpts": longHelpOpts,
        "verbosityOpts": rp.rp_verbosityOptions(),
        "mainUsage": self._cli_mainUsageDescription(),
        "helpOptionsDesc": helpOptionsDesc,
        "verbosityOptsDesc": rp.rp_verbosityOptionsDescription(),
        "otherOpts": self._cli_otherOptionsUsage(),
        "otherOptionsDesc": self._cli_otherOptionsDescription() }
        assert result is not None
        return result

    def _shortOptions(self):
        result = "VSQc:o:f:" + self._cli_otherShortOptions()
        assert result is not None
        return result

    def _longOptionsList(self):
        result = ["verbose", "silent", "quiet", "config=", "out=", "format="]
        result.extend(self._cli_otherLongOptionsList())
        assert result is not None
        return result

    def _buildInitialArgumentsMap(self):
        result = { "verbosity": NORMAL_VERBOSITY, "config": None,
                   "out": None, "format": rp.rp_TABLE }
        self._cli_addOtherInitialArguments(result)
        assert result is not None
        return result

    def _processOption(self, opt, val, argsMap):
        assert opt
        # 'val' may be None
        assert argsMap is not None
        result = True
        verbosity = None
        if opt in ("-V", "--verbose"):
            verbosity = VERBOSE
        elif opt in ("-Q", "--quiet"):
            verbosity = QUIET
        elif opt in ("-S", "--silent"):
            verbosity = SILENT
        elif opt in ("-c", "--config"):
            argsMap["config"] = val
        elif opt in ("-o", "--out"):
            argsMap["out"] = val
        elif opt in ("-f", "--format"):
            if val in rp.rp_allFormats:
                argsMap["format"] = val
            else:
                self._fail("'%s' isn't a report format: use one of %s" %
                           (val, ", ".join(rp.rp_allFormats)))
                result = False
        else:
            result = self._cli_processOtherOption(opt, val, argsMap)
        if verbosity is not None:
            argsMap["verbosity"] = verbosity
        return result

    def _processNonOptionArguments(self, args, argsMap):
        assert args is not None
        assert argsMap is not None
        result = True
        if len(args) != 0:
            self._fail("Too many arguments")
            result = False
        return result

    def _checkArgumentCombinations(self, argsMap):
        result = True
        if argsMap["config"] is None:
            self._fail("No configuration file was specified")
            result = False
        return result

    def _execute(self, argsMap):
        """
        Executes this program using the information from the arguments map
        'argsMap' built by processing all of our arguments.
        """
        assert argsMap is not None
        reporter = rp.rp_Reporter(argsMap["verbosity"])
        try:
            config = conf.conf_CodeConfiguration(argsMap["config"])
            report = self._cli_run(config, reporter, argsMap)
        except _cli_configErrors as ex:
            reporter.fail("\n%s." % ex)
            return cli_USAGE_ERROR
        except vf.vf_CollisionError as ex:
            reporter.fail("\n%s." % ex)
            return cli_VERIFICATION_FAILURE
        except vf.vf_VerificationError as ex:
            reporter.fail("\n%s." % ex)
            return cli_USAGE_ERROR
        except rp.rp_FatalError:
            return cli_VERIFICATION_FAILURE
        except Exception:
            reporter.fail("\nUnexpected error: %s" %
                          ut.ut_exceptionDescription())
            return cli_VERIFICATION_FAILURE

        txt = report.render(argsMap["format"])
        out = argsMap["out"]
        try:
            if out is None:
                sys.stdout.write(txt)
                sys.stdout.flush()
            else:
                with open(out, 'w') as f:
                    f.write(txt)
        except IOError as ex:
            reporter.fail("\nThe report couldn't be written: %s." % ex)
            return cli_VERIFICATION_FAILURE
        for sev in rp.rp_allSeverities:
            reporter.debug("%i %s findings" %
                           (report.countBySeverity(sev), sev))
        if report.isFatal():
            reporter.fail("The report contains %i fatal findings." %
                          report.countBySeverity(rp.rp_FATAL))
            result = cli_VERIFICATION_FAILURE
        else:
            gaps = report.countBySeverity(rp.rp_GAP)
            if gaps:
                reporter.warn("The report contains %i gap findings." % gaps)
            result = cli_SUCCESS
        return result

    def _cli_buildInstance(self, config, reporter):
        """
        Builds and returns the code instance described by 'config'.
        """
        start = time.perf_counter()
        params = cc.cc_buildCodeParams(**config.codeArguments())
        instance = cc.cc_buildCodeInstance(params)
        reporter.timing("building the instance", time.perf_counter() - start)
        return instance

    def _cli_newReport(self, items, tableHeader = True):
        return rp.rp_RunReport(self.subcommand, conf.toolVersion, items,
                               tableHeader)

    def _cli_seed(self, config, argsMap):
        seed = argsMap.get("seed")
        if seed is None:
            seed = int(config.seed)
        return seed


    def _cli_mainUsageDescription(self):
        """
        Returns a paragraph describing what this program does, without going
        in to what the various options do.
        """
        raise NotImplementedError

    def _cli_run(self, config, reporter, argsMap):
        """
        Does whatever this subcommand does, using the configuration 'config',
        the rp_Reporter 'reporter' and the arguments map 'argsMap', and
        returns the resulting rp_RunReport.
        """
        raise NotImplementedError


    def _cli_otherOptionsUsage(self):
        return ""

    def _cli_otherOptionsDescription(self):
        return ""

    def _cli_otherShortOptions(self):
        return ""

    def _cli_otherLongOptionsList(self):
        return []

    def _cli_addOtherInitialArguments(self, argsMap):
        pass

    def _cli_processOtherOption(self, opt, val, argsMap):
        """
        Processes the other option 'opt' and its associated value 'val' by
        updating 'argsMap' appropriately and returning True if successful,
        or reports failure and returns False if 'opt' isn't one of our
        other options or it and/or 'val' are somehow incorrect.

        This version always reports 'opt' as being an unknown option.
        """
        return self._handleUnknownOption(opt)

    def _cli_parseIntOption(self, opt, val, argsMap, name, minValue):
        """
        Sets argsMap['name'] to the int value 'val' of the option 'opt',
        returning True iff it's at least 'minValue'.
        """
        try:
            argsMap[name] = ut.ut_parseInt(val, minValue)
            result = True
        except ValueError as ex:
            self._fail("Invalid value for %s: %s" % (opt, ex))
            result = False
        return result


class cli_RingInfoProgram(cli_AbstractCodeProgram):
    """
    Describes the rings A and B and audits their properties.
    """

    subcommand = "ring-info"
    summary = "describe the rings A and B and check their properties"

    def _cli_mainUsageDescription(self):
        return """Describes the Galois rings A = GR(p^r, ell) and B = GR(p^r, ell n) of
the configuration: their moduli, Teichmuller sets and residue fields.
When a ring has at most %i elements its axioms, p-adic digits and
Teichmuller set are checked exhaustively, as are the trace from B to A
and the differences of the elements of L.""" % gr.gr_maxExhaustiveAxiomsOrder

    def _cli_run(self, config, reporter, argsMap):
        (p, r, ell, n, cap) = config.ringArguments()
        (A, B, emb) = cc.cc_buildRings(p, r, ell, n, cap)
        report = self._cli_newReport(_cli_ringItems(config, A, B))
        for (name, ring) in [("A", A), ("B", B)]:
            T = ring.teichmuller
            report.addRow(_cli_row(name, "GR(%i^%i, %i)" % (ring.p, ring.r,
                ring.d), "order %i" % ring.order), { "ring": name,
                "p": ring.p, "r": ring.r, "d": ring.d, "order": ring.order })
            report.addRow(_cli_row(name, "modulus", gr.gr_coefficientSeparator.
                join(str(c) for c in ring.modulus)))
            report.addRow(_cli_row(name, "xi", gr.gr_elementText(T.xi)))
            for e in T.elements():
                report.addRow(_cli_row(name, "T", T.text(e),
                                       gr.gr_elementText(e)))
        self._cli_audit(report, reporter, A, B, emb)
        return report

    def _cli_audit(self, report, reporter, A, B, emb):
        start = time.perf_counter()
        limit = gr.gr_maxExhaustiveAxiomsOrder
        checks = []
        for (name, ring) in [("A", A), ("B", B)]:
            if ring.order <= limit:
                checks.extend([
                    ("ring-axioms-%s" % name, gr.gr_checkRingAxioms(ring)),
                    ("digits-%s" % name, gr.gr_checkDigits(ring)),
                    ("teichmuller-%s" % name, gr.gr_checkTeichmuller(ring))])
            else:
                report.addFinding(rp.rp_Finding("audit-skipped", rp.rp_INFO,
                    "%s has %i elements, more than %i: its properties "
                    "weren't checked" % (name, ring.order, limit)))
        if B.order <= limit:
            checks.append(("trace", gr.gr_checkTrace(emb)))
        checks.append(("l-differences", cc.cc_checkLDifferences(A)))
        for (kind, violations) in checks:
            report.addRow(_cli_row("check", kind, "passed" if not violations
                else "%i violations" % len(violations)),
                { "check": kind, "violations": len(violations) })
            report.addFindings(_cli_violationFindings(kind, violations))
        reporter.timing("auditing the rings", time.perf_counter() - start)


class cli_GrayTableProgram(cli_AbstractCodeProgram):
    """
    Writes the Gray map table of A.
    """

    subcommand = "gray-table"
    summary = "write the Gray map table of A"

    def _cli_mainUsageDescription(self):
        return """Writes the image under the Gray map of every element of the ring
A = GR(p^r, ell) of the configuration, in the ring's index order: one
line per element, giving the element and its image (coordinates
separated by ':'). The Gray map's properties are checked too, and any
violation is a fatal finding. The table-format report has no header."""

    def _cli_run(self, config, reporter, argsMap):
        (p, r, ell, n, cap) = config.ringArguments()
        (A, B, emb) = cc.cc_buildRings(p, r, ell, n, cap)
        report = self._cli_newReport(_cli_ringItems(config, A, B),
                                     tableHeader = False)
        grayMap = gm.gm_GrayMap(A)
        for (a, img) in grayMap.table():
            vec = grayMap.vectorText(a)
            report.addRow(_cli_row(gr.gr_elementText(a), vec),
                          { "element": gr.gr_elementText(a), "gray": vec })
        report.addFindings(_cli_violationFindings("gray-map",
                                                  grayMap.checkProperties()))
        return report


class cli_BuildCodeProgram(cli_AbstractCodeProgram):
    """
    Builds a code instance and writes its construction sets.
    """

    subcommand = "build-code"
    summary = "build the code instance and audit its sets"

    def _cli_mainUsageDescription(self):
        return """Builds the code instance of the configuration and writes its parameters,
with every default filled in, and its construction sets N, L, D_eta,
T_{eta theta Z} and the source space's pairs in canonical order, followed
by the claimed and enumerated size of each set. A size that doesn't
match its claim is reported as a gap, and overlapping sets that should be
disjoint as a fatal finding."""

    def _cli_otherOptionsUsage(self):
        return "[--tag-matrix PATH]"

    def _cli_otherOptionsDescription(self):
        return """
If the --tag-matrix option is specified then the instance's full tag
matrix is written to the file with pathname PATH: one line per source
state, in order, consisting of the state followed by its tags under
every key, in key order."""

    def _cli_otherLongOptionsList(self):
        return ["tag-matrix="]

    def _cli_addOtherInitialArguments(self, argsMap):
        argsMap["tagMatrix"] = None

    def _cli_processOtherOption(self, opt, val, argsMap):
        if opt == "--tag-matrix":
            argsMap["tagMatrix"] = val
            result = True
        else:
            result = self._handleUnknownOption(opt)
        return result

    def _cli_run(self, config, reporter, argsMap):
        instance = self._cli_buildInstance(config, reporter)
        params = instance.params
        sets = instance.sets
        report = self._cli_newReport(params.canonicalItems(
                                        self._cli_seed(config, argsMap)))
        for (name, value) in params.canonicalItems(
                                        self._cli_seed(config, argsMap)):
            report.addRow(_cli_row("param", name, value))
        for (i, v) in enumerate(sets.N):
            report.addRow(_cli_row("N", i, _cli_vectorText(v)))
        for (i, a) in enumerate(sets.L):
            report.addRow(_cli_row("L", i, gr.gr_elementText(a)))
        for (i, pair) in enumerate(sets.DEta):
            report.addRow(_cli_row("D_eta", i, _cli_pairText(pair)))
        for (i, pair) in enumerate(sets.TEtaThetaZ):
            report.addRow(_cli_row("T_eta_theta_Z", i, _cli_pairText(pair)))
        for (i, pair) in enumerate(instance.pairs):
            report.addRow(_cli_row("P", i, _cli_pairText(pair)))

        for check in cc.cc_cardinalityChecks(instance):
            report.addRow(_cli_row("|%s|" % check.name, check.claimed,
                check.actual, check.formula), { "set": check.name,
                "claimed": check.claimed, "actual": check.actual })
            if not check.matches() or check.detail is not None:
                msg = "|%s| = %s is claimed but the enumerated set has %i " \
                    "elements" % (check.name, check.formula, check.actual)
                if check.detail is not None:
                    msg = "%s: %s" % (msg, check.detail)
                report.addFinding(rp.rp_Finding("cardinality", rp.rp_GAP,
                    msg, { "set": check.name, "claimed": check.claimed,
                           "actual": check.actual }))
        report.addRow(_cli_row("|P|", len(instance.pairs)))
        report.addRow(_cli_row("|S|", len(instance.states)))
        report.addRow(_cli_row("|K|", params.keyCount))
        report.addFindings(_cli_violationFindings("disjointness",
                                cc.cc_disjointnessChecks(instance)))
        report.addFindings(_cli_violationFindings("l-differences",
                                cc.cc_checkLDifferences(params.A)))
        for (reading, holds) in cc.cc_spareConditions(params):
            sev = rp.rp_INFO if holds else rp.rp_GAP
            report.addFinding(rp.rp_Finding("spare-condition", sev,
                "%s %s" % (reading, "holds" if holds else "doesn't hold"),
                { "condition": reading, "holds": holds }))

        if argsMap["tagMatrix"] is not None:
            self._cli_writeTagMatrix(instance, argsMap["tagMatrix"], reporter)
        return report

    def _cli_writeTagMatrix(self, instance, path, reporter):
        params = instance.params
        start = time.perf_counter()
        M = cc.cc_buildTagMatrix(instance)
        try:
            with open(path, 'w') as f:
                for (s, row) in zip(instance.states, M):
                    tags = _cli_tagSeparator.join(gr.gr_residueText(t,
                                    params.p, params.ell) for t in row)
                    f.write("%s%s%s\n" % (cc.cc_stateText(s),
                                          _cli_fieldSeparator, tags))
        except IOError as ex:
            reporter.die("The tag matrix couldn't be written to '%s': %s" %
                         (path, ex))
        reporter.timing("writing the tag matrix", time.perf_counter() - start)
        reporter.report("Wrote the %i x %i tag matrix to '%s'." %
                        (M.shape[0], M.shape[1], path))


class cli_CheckResilienceProgram(cli_AbstractCodeProgram):
    """
    Checks that the map f of a configuration is t-resilient.
    """

    subcommand = "check-resilience"
    summary = "check that the map f is t-resilient"

    def _cli_mainUsageDescription(self):
        return """Checks by enumerating B^n that the map f of the configuration is
t-resilient. If it isn't then that's a fatal finding."""

    def _cli_otherOptionsUsage(self):
        return "[--t N]"

    def _cli_otherOptionsDescription(self):
        return """
The --t option gives the resilience order N to check, which defaults to
the configuration's t."""

    def _cli_otherLongOptionsList(self):
        return ["t="]

    def _cli_addOtherInitialArguments(self, argsMap):
        argsMap["t"] = None

    def _cli_processOtherOption(self, opt, val, argsMap):
        if opt == "--t":
            result = self._cli_parseIntOption(opt, val, argsMap, "t", 0)
        else:
            result = self._handleUnknownOption(opt)
        return result

    def _cli_run(self, config, reporter, argsMap):
        args = config.codeArguments()
        (A, B, emb) = cc.cc_buildRings(args["p"], args["r"], args["ell"],
                                       args["n"], args["cap"])
        n = args["n"]
        t = argsMap["t"]
        if t is None:
            t = args["t"] if args["t"] is not None else n
        descriptor = args["f"] or rs.rs_defaultDescriptor(n)
        f = rs.rs_parseMapDescriptor(descriptor, B, n, t)
        items = config.canonicalItems() + [("checkedT", str(t))]
        report = self._cli_newReport(items)

        start = time.perf_counter()
        result = rs.rs_checkResilient(f, t)
        reporter.timing("checking resilience", time.perf_counter() - start)
        report.addRow(_cli_row("f", f.descriptor))
        report.addRow(_cli_row("t", t))
        report.addRow(_cli_row("sets checked", result.checkedSets))
        report.addRow(_cli_row("result", "resilient" if result.passed
                               else "not resilient"),
                      { "passed": result.passed })
        report.addFinding(rp.rp_Finding("resilience-definition", rp.rp_INFO,
                                        result.definition))
        if not result.passed:
            (J, fixed) = result.failure
            report.addFinding(rp.rp_Finding("resilience", rp.rp_FATAL,
                "f isn't %i-resilient: fixing the coordinates %s to the "
                "elements with indices %s leaves it unbalanced" %
                (t, list(J), list(fixed)),
                { "coordinates": list(J), "fixed": list(fixed) }))
        return report


class cli_VerifyInjectivityProgram(cli_AbstractCodeProgram):
    """
    Checks that distinct keys have distinct encoding rules.
    """

    subcommand = "verify-injectivity"
    summary = "check that distinct keys have distinct encoding rules"

    def _cli_mainUsageDescription(self):
        return """Checks that distinct keys of the code instance of the configuration have
distinct encoding rules: for each pair of keys a distinguishing source
state is constructed by the case analysis (or found by searching the
source space when the construction doesn't produce one) and the keys'
rows of the tag matrix are compared. A pair whose rows are equal, or for
which the two checks disagree, is a fatal finding; every branch of the
case analysis that needed the search is reported as a gap."""

    def _cli_otherShortOptions(self):
        return "m:n:s:j:"

    def _cli_otherLongOptionsList(self):
        return ["mode=", "count=", "seed=", "jobs="]

    def _cli_otherOptionsUsage(self):
        return "[-m MODE] [-n COUNT] [-s SEED] [-j JOBS]"

    def _cli_otherOptionsDescription(self):
        return """
The -m or --mode option is either 'exhaustive' (the default), which
checks every pair of keys, or 'sampled', which checks COUNT pairs given
by the -n or --count option, drawn using the seed SEED given by the -s or
--seed option (which defaults to the configuration's seed). The -j or
--jobs option gives the number JOBS of worker processes to use
(default 1); the report doesn't depend on it."""

    def _cli_addOtherInitialArguments(self, argsMap):
        argsMap["mode"] = vf.vf_EXHAUSTIVE
        argsMap["count"] = None
        argsMap["seed"] = None
        argsMap["jobs"] = 1

    def _cli_processOtherOption(self, opt, val, argsMap):
        if opt in ("-m", "--mode"):
            result = val in vf.vf_allModes
            if result:
                argsMap["mode"] = val
            else:
                self._fail("'%s' isn't a verification mode: use one of %s" %
                           (val, ", ".join(vf.vf_allModes)))
        elif opt in ("-n", "--count"):
            result = self._cli_parseIntOption(opt, val, argsMap, "count", 1)
        elif opt in ("-s", "--seed"):
            result = self._cli_parseIntOption(opt, val, argsMap, "seed", 0)
        elif opt in ("-j", "--jobs"):
            result = self._cli_parseIntOption(opt, val, argsMap, "jobs", 1)
        else:
            result = self._handleUnknownOption(opt)
        return result

    def _checkArgumentCombinations(self, argsMap):
        result = cli_AbstractCodeProgram._checkArgumentCombinations(self,
                                                                    argsMap)
        if result and argsMap["mode"] == vf.vf_SAMPLED and \
                argsMap["count"] is None:
            self._fail("Sampled verification needs a count")
            result = False
        return result

    def _cli_run(self, config, reporter, argsMap):
        instance = self._cli_buildInstance(config, reporter)
        params = instance.params
        seed = self._cli_seed(config, argsMap)
        items = params.canonicalItems(seed) + [("mode", argsMap["mode"])]
        if argsMap["mode"] == vf.vf_SAMPLED:
            items.extend([("count", str(argsMap["count"])),
                          ("rng", vf.vf_rngAlgorithm)])
        report = self._cli_newReport(items)

        verifier = vf.vf_Verifier(instance)
        reporter.report("Checking the keys of an instance with %i keys and "
                        "%i source states ..." % (params.keyCount,
                                                  len(instance.states)))
        start = time.perf_counter()
        result = verifier.verifyInjectivity(argsMap["mode"],
            argsMap["count"], seed, argsMap["jobs"])
        reporter.timing("checking the pairs of keys",
                        time.perf_counter() - start)

        report.addRow(result.summary(), { "collisions":
            result.collisionCount, "pairs": result.pairCount })
        percent = 100.0 * result.constructiveCount() / max(result.pairCount, 1)
        report.addRow(_cli_row("constructive", result.constructiveCount(),
            "%.2f%%" % percent), { "constructive": result.constructiveCount()})
        for case in vf.vf_allCases:
            total = result.caseCounts[case]
            fallback = result.caseFallbacks[case]
            report.addRow(_cli_row("case", case, total, total - fallback,
                fallback), { "case": case, "pairs": total,
                "constructive": total - fallback, "fallback": fallback })
        for label in vf.vf_allAssertionLabels:
            count = result.labelCounts[label]
            if count:
                report.addRow(_cli_row("branch", label, count),
                              { "branch": label, "pairs": count })
        if result.distinctRows is not None:
            report.addRow(_cli_row("distinct rows", result.distinctRows),
                          { "distinctRows": result.distinctRows })

        for ((branch, reason), (count, pair)) in sorted(
                result.fallbacks.items()):
            report.addFinding(rp.rp_Finding("proof-gap", rp.rp_GAP,
                "branch %s: %s (%i pairs, first (%i, %i))" %
                (branch, reason, count, pair[0], pair[1]),
                { "branch": branch, "reason": reason, "count": count,
                  "example": list(pair) }))
        if result.collisionCount:
            report.addFinding(rp.rp_Finding("collision", rp.rp_FATAL,
                "%i pairs of keys have the same encoding rule, for example "
                "%s" % (result.collisionCount, result.collisions),
                { "count": result.collisionCount,
                  "examples": [list(c) for c in result.collisions] }))
        if result.oracleMismatchCount:
            report.addFinding(rp.rp_Finding("oracle-mismatch", rp.rp_FATAL,
                "the constructed witnesses and the encoding rules disagree on "
                "%i pairs, for example %s" % (result.oracleMismatchCount,
                result.oracleMismatches),
                { "count": result.oracleMismatchCount,
                  "examples": [list(c) for c in result.oracleMismatches] }))
        return report


class cli_AttackProbsProgram(cli_AbstractCodeProgram):
    """
    Computes the exact impersonation and substitution probabilities.
    """

    subcommand = "attack-probs"
    summary = "compute the exact attack probabilities"

    def _cli_mainUsageDescription(self):
        return """Computes the exact impersonation and substitution probabilities p_I and
p_S of the code instance of the configuration, as fractions, together
with the messages that attain them. They're computed in a single process."""

    def _cli_run(self, config, reporter, argsMap):
        instance = self._cli_buildInstance(config, reporter)
        params = instance.params
        report = self._cli_newReport(params.canonicalItems(
                                        self._cli_seed(config, argsMap)))
        start = time.perf_counter()
        attack = vf.vf_Verifier(instance).attackProbabilities()
        reporter.timing("computing the probabilities",
                        time.perf_counter() - start)
        states = instance.states

        def tagText(t):
            return gr.gr_residueText(t, params.p, params.ell)

        (i, t) = attack.impersonation
        report.addRow(_cli_row("p_I", rp.rp_fractionText(attack.pI)),
                      { "pI": attack.pI })
        report.addRow(_cli_row("p_I message", cc.cc_stateText(states[i]),
            tagText(t)), { "state": i, "tag": t })
        report.addRow(_cli_row("p_I histogram", " ".join(str(c)
            for c in attack.histogram)), { "histogram": attack.histogram })
        report.addRow(_cli_row("p_S", rp.rp_fractionText(attack.pS)),
                      { "pS": attack.pS })
        if attack.substitution is not None:
            ((i, t), (j, t2)) = attack.substitution
            report.addRow(_cli_row("p_S observed", cc.cc_stateText(states[i]),
                tagText(t)), { "state": i, "tag": t })
            report.addRow(_cli_row("p_S substituted",
                cc.cc_stateText(states[j]), tagText(t2)),
                { "state": j, "tag": t2 })
        if not (Fraction(1, params.q) <= attack.pI <= 1):
            report.addFinding(rp.rp_Finding("p_I-bounds", rp.rp_FATAL,
                "p_I = %s isn't in [1/%i, 1]" %
                (rp.rp_fractionText(attack.pI), params.q)))
        return report


class cli_SimulateProgram(cli_AbstractCodeProgram):
    """
    Simulates an adversary attacking the protocol.
    """

    subcommand = "simulate"
    summary = "simulate impersonation or substitution attacks"

    def _cli_mainUsageDescription(self):
        return """Simulates an adversary attacking the transmitter/receiver protocol of
the code instance of the configuration, and compares how often the
receiver accepts the adversary's message with the exact probability of
that happening. A frequency more than %i standard errors above the exact
probability is a fatal finding, and one more than %i below it a gap.""" % \
        (ps.ps_sigmaCount, ps.ps_sigmaCount)

    def _cli_otherLongOptionsList(self):
        return ["trials=", "seed=", "adversary=", "jobs="]

    def _cli_otherOptionsUsage(self):
        return "[--trials N] [--seed SEED] [--adversary KIND] [--jobs JOBS]"

    def _cli_otherOptionsDescription(self):
        return """
The --trials option gives the number of trials N to run (default %i),
the --seed option the seed SEED (default the configuration's seed) and
the --adversary option the kind of adversary: 'impersonation' (the
default) or 'substitution'. The --jobs option gives the number JOBS of
worker processes that run the trials (default 1); the report doesn't
depend on it.""" % cli_defaultTrials

    def _cli_addOtherInitialArguments(self, argsMap):
        argsMap["trials"] = cli_defaultTrials
        argsMap["seed"] = None
        argsMap["adversary"] = ps.ps_IMPERSONATION
        argsMap["jobs"] = 1

    def _cli_processOtherOption(self, opt, val, argsMap):
        if opt == "--trials":
            result = self._cli_parseIntOption(opt, val, argsMap, "trials", 1)
        elif opt == "--seed":
            result = self._cli_parseIntOption(opt, val, argsMap, "seed", 0)
        elif opt == "--jobs":
            result = self._cli_parseIntOption(opt, val, argsMap, "jobs", 1)
        elif opt == "--adversary":
            result = val in ps.ps_allAdversaries
            if result:
                argsMap["adversary"] = val
            else:
                self._fail("'%s' isn't a kind of adversary: use one of %s" %
                           (val, ", ".join(ps.ps_allAdversaries)))
        else:
            result = self._handleUnknownOption(opt)
        return result

    def _cli_run(self, config, reporter, argsMap):
        instance = self._cli_buildInstance(config, reporter)
        params = instance.params
        seed = self._cli_seed(config, argsMap)
        sim = ps.ps_SimConfig(argsMap["trials"], seed, argsMap["adversary"])
        items = params.canonicalItems(seed) + [
            ("adversary", sim.adversary), ("trials", str(sim.trials)),
            ("keyDraw", sim.keyDraw), ("rng", ps.ps_rngAlgorithm)]
        report = self._cli_newReport(items)

        start = time.perf_counter()
        result = ps.ps_runAttack(instance, sim, jobs = argsMap["jobs"])
        reporter.timing("running the trials", time.perf_counter() - start)
        report.addRow(_cli_row("adversary", result.adversary))
        if result.observed is not None:
            report.addRow(_cli_row("observed", ps.ps_messageText(params,
                                                          result.observed)))
        report.addRow(_cli_row("forged", ps.ps_messageText(params,
                                                           result.forged)))
        report.addRow(_cli_row("successes", result.successes, result.trials),
            { "successes": result.successes, "trials": result.trials })
        report.addRow(_cli_row("frequency",
            rp.rp_fractionText(result.frequency),
            "%.6f" % float(result.frequency)),
            { "frequency": result.frequency })
        report.addRow(_cli_row("exact", rp.rp_fractionText(result.exact),
            "%.6f" % float(result.exact)), { "exact": result.exact })
        report.addRow(_cli_row("standard error",
            "%.6f" % result.standardError))
        within = result.isWithinTolerance()
        report.addRow(_cli_row("within %i sigma" % ps.ps_sigmaCount,
                               "yes" if within else "no"),
                      { "within": within })
        if not within:
            above = result.frequency > result.exact
            report.addFinding(rp.rp_Finding("simulation",
                rp.rp_FATAL if above else rp.rp_GAP,
                "the frequency %.6f is more than %i standard errors %s the "
                "exact probability %.6f" % (float(result.frequency),
                ps.ps_sigmaCount, "above" if above else "below",
                float(result.exact))))
        return report


# The subcommands, in the order they're listed in, and the classes of the
# programs that run them.
cli_allSubcommands = ["ring-info", "gray-table", "build-code",
                      "check-resilience", "verify-injectivity", "attack-probs",
                      "simulate"]
cli_programClasses = dict((cls.subcommand, cls) for cls in [
    cli_RingInfoProgram, cli_GrayTableProgram, cli_BuildCodeProgram,
    cli_CheckResilienceProgram, cli_VerifyInjectivityProgram,
    cli_AttackProbsProgram, cli_SimulateProgram])
