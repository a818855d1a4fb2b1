# Defines functions and classes of general utility.
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
import traceback

import getopt
import hashlib
import struct


# Constants.

# The struct format of the length prefix at the start of every frame built
# by ut_buildFrame(): an unsigned 32-bit big-endian byte count.
_ut_frameLengthFormat = ">I"
_ut_frameLengthSize = struct.calcsize(_ut_frameLengthFormat)

# The encoding used for the text carried in frames.
_ut_frameEncoding = "utf-8"


# Functions.

def ut_exceptionDescription():
    """
    Returns a string containing a description of the current exception.
    """
    (type, value, trace) = sys.exc_info()
    if type is not None:
        result = "an exception of class %s was raised: %s\n%s" % \
            (type.__name__, value, traceback.format_exc())
    else:
        assert value is None
        assert trace is None
        result = "no exception has been raised"
    assert result is not None
    return result

def ut_updateMapByExecutingFile(path, m):
    """
    Updates the map 'm' by executing the Python source file with pathname
    'path'. Each assignment in the source file of a value 'val' to a global
    variable named 'name' updates 'm' with a mapping from 'name' to 'val'.

    Raises a SyntaxError iff there's one or more syntax errors in the source
    file (or executing it fails), and raises an IOError if 'path' isn't the
    pathname of an existing readable file.
    """
    assert path is not None
    assert m is not None
    with open(path, 'r') as r:
        content = r.read()
    content += "\n"  # in case it's missing from the file
    code = compile(content, path, 'exec')
    try:
        exec(code, m)
    except SyntaxError as ex:
        raise ex
    except Exception as ex:
        raise SyntaxError(ex)

def ut_isInt(value):
    """
    Returns True iff 'value' is an int or a valid textual representation of
    an int. (bool values are not considered to be ints.)
    """
    if isinstance(value, bool):
        result = False
    else:
        try:
            int(value)
            result = isinstance(value, int) or isinstance(value, str)
        except (TypeError, ValueError):
            result = False
    return result

def ut_parseInt(txt, minValue = None, maxValue = None):
    """
    Parses and returns the int value that 'txt' represents, raising a
    ValueError if it doesn't represent one or if

    - 'minValue' is not None and the int value is less than 'minValue', or
    - 'maxValue' is not None and the int value is greater than 'maxValue'.
    """
    assert txt is not None
    if not ut_isInt(txt):
        raise ValueError("'%s' is not an integer value" % txt)
    result = int(txt)
    if minValue is not None and result < minValue:
        raise ValueError("'%i' is less than the minimum value '%i'" %
                         (result, minValue))
    if maxValue is not None and result > maxValue:
        raise ValueError("'%i' is greater than the maximum value '%i'" %
                         (result, maxValue))
    return result

def ut_baseDigits(value, base, count):
    """
    Returns a list of the 'count' base-'base' digits of the non-negative
    int 'value', least significant digit first.

    Raises a ValueError if 'value' needs more than 'count' digits.
    """
    assert base >= 2
    assert count >= 0
    if value < 0 or value >= base ** count:
        raise ValueError("%i doesn't have %i base-%i digits" %
                         (value, count, base))
    result = []
    for i in range(count):
        (value, digit) = divmod(value, base)
        result.append(digit)
    assert len(result) == count
    return result

def ut_fromBaseDigits(digits, base):
    """
    Returns the int whose base-'base' digits - least significant first - are
    the ones in 'digits'.

    See ut_baseDigits().
    """
    assert digits is not None
    assert base >= 2
    result = 0
    for d in reversed(digits):
        assert 0 <= d < base
        result = result * base + d
    assert result >= 0
    return result

def ut_sha256Hex(txt):
    """
    Returns the hexadecimal SHA-256 digest of the UTF-8 encoding of 'txt'.
    """
    assert txt is not None
    result = hashlib.sha256(txt.encode("utf-8")).hexdigest()
    assert result
    return result

def ut_buildFrame(txt):
    """
    Returns the bytes of a frame carrying the text 'txt': the length of the
    encoded text as a 4-byte big-endian int, followed by the encoded text.

    See ut_splitFrame().
    """
    assert txt is not None
    payload = txt.encode(_ut_frameEncoding)
    result = struct.pack(_ut_frameLengthFormat, len(payload)) + payload
    assert len(result) == _ut_frameLengthSize + len(payload)
    return result

def ut_splitFrame(data):
    """
    Returns a pair consisting of the text carried by the frame at the start
    of the bytes 'data' and the bytes that follow that frame.

    Raises a ValueError if 'data' doesn't start with a complete frame.

    See ut_buildFrame().
    """
    assert data is not None
    if len(data) < _ut_frameLengthSize:
        raise ValueError("a frame needs at least %i bytes but only %i are "
                         "present" % (_ut_frameLengthSize, len(data)))
    (size,) = struct.unpack(_ut_frameLengthFormat,
                            data[:_ut_frameLengthSize])
    end = _ut_frameLengthSize + size
    if len(data) < end:
        raise ValueError("the frame is truncated: %i payload bytes were "
                         "expected but only %i are present" %
                         (size, len(data) - _ut_frameLengthSize))
    try:
        txt = data[_ut_frameLengthSize:end].decode(_ut_frameEncoding)
    except UnicodeDecodeError as ex:
        raise ValueError("the frame's payload isn't valid text: %s" % ex)
    result = (txt, data[end:])
    assert result[0] is not None
    return result


# Classes.

class ut_AbstractProgram(object):
    """
    An abstract base class for classes that represent entire programs (or
    subcommands of a program).
    """

    def __init__(self, name):
        object.__init__(self)
        assert name
        self._ut_programBasename = name

    def run(self, argv):
        """
        Causes this program to process its arguments 'argv' (which do NOT
        include the program's name) and then execute.

        Returns the exit code that this program should exit with: 1 if
        the arguments are invalid, and our _execute() method's result
        otherwise.
        """
        assert argv is not None
        args = None
        shortHelpOpts = self._shortHelpOptions()
        longHelpOpts = self._longHelpOptionsList()
        shortHelpOptNames = ["-%s" % s for s in
                                shortHelpOpts.replace(":", "")]
        longHelpOptNames = ["--%s" % s.rstrip("=") for s in longHelpOpts]

        shortOpts = shortHelpOpts + self._shortOptions()
        longOpts = longHelpOpts + self._longOptionsList()

        argsMap = self._buildInitialArgumentsMap()
        isValid = True
        try:
            opts, args = getopt.getopt(argv, shortOpts, longOpts)
            for opt, val in opts:
                if opt in shortHelpOptNames or opt in longHelpOptNames:
                    isValid = False
                    break  # for
                else:
                    isValid = self._processOption(opt, val, argsMap)
                    if not isValid:
                        break  # for
        except getopt.GetoptError as ex:
            isValid = False
            self._fail("Invalid option: %s" % ex.msg)

        if args is not None and isValid:
            isValid = self._processNonOptionArguments(args, argsMap)
        if isValid:
            isValid = self._checkArgumentCombinations(argsMap)

        if not isValid:
            short = ""
            if shortHelpOptNames:
                short = "[" + "|".join(shortHelpOptNames) + "]"
            long = ""
            if longHelpOptNames:
                long = "[" + "|".join(longHelpOptNames) + "]"
            helpDesc = self._buildHelpOptionsDescription(shortHelpOptNames,
                                                         longHelpOptNames)
            msg = self._usageMessage(self._basename(), short, long, helpDesc)
            print(msg, file = sys.stderr)
            result = 1
        else:
            result = self._execute(argsMap)
        assert result >= 0
        return result

    def _buildHelpOptionsDescription(self, shortHelpOpts, longHelpOpts):
        """
        Builds and returns a paragraph describing what happens if one or
        more of this program's (short or long) help options is specified.
        """
        assert shortHelpOpts is not None
        assert longHelpOpts is not None
        result = ""
        allOpts = shortHelpOpts + longHelpOpts
        if allOpts:
            if len(allOpts) > 1:
                fmt = "If any of the help options %s or %s are"
                optsPart = fmt % (", ".join(allOpts[:-1]), allOpts[-1])
            else:
                optsPart = "If the help option %s is" % allOpts[0]
            result = """
%s specified then
this usage message will be output and the program will exit.
""" % optsPart
        assert result is not None
        return result

    def _basename(self):
        """
        Returns the basename of this program.
        """
        result = self._ut_programBasename
        assert result is not None
        return result

    def _fail(self, msg):
        """
        Outputs 'msg' as a message describing why this program failed.
        """
        print("\n%s." % msg, file = sys.stderr)

    def _handleUnknownOption(self, opt):
        """
        Handles the option 'opt' when it's one that our _processOption()
        method doesn't know about. Returns the boolean value that
        _processOption() should return.
        """
        assert opt is not None
        self._fail("Unknown option: %s" % opt)
        return False

    def _shortHelpOptions(self):
        """
        Returns a string consisting of the short (one-letter) options that
        indicate that, instead of executing, this program should print out a
        usage message and then exit.
        """
        return "h?"

    def _longHelpOptionsList(self):
        """
        Returns a list of the names of the long options that indicate that,
        instead of executing, this program should print out a usage message
        and then exit.
        """
        return ["help"]

    def _usageMessage(self, progName, shortHelpOpts, longHelpOpts,
                     helpOptionsDesc):
        """
        Returns the message describing how to use this program, where
        'progName' is the name to be used for this program in the message.
        """
        raise NotImplementedError

    def _shortOptions(self):
        """
        Returns a string consisting of all of the short (one-letter) options
        for this program in the format expected by getopt.getopt(), NOT
        including the help options.
        """
        return ""

    def _longOptionsList(self):
        """
        Returns a list of the names of all of the long options for this
        program in the format expected by getopt.getopt(), NOT including
        the help options.
        """
        return []

    def _buildInitialArgumentsMap(self):
        """
        Builds and returns the initial version of the map that will contain
        all of the information parsed out of our command line arguments.
        This is where the values to use by default are set.
        """
        raise NotImplementedError

    def _processOption(self, opt, val, argsMap):
        """
        Processes the option 'opt' with associated value 'val' (which will be
        None iff the option has no associated value) by updating the
        arguments map 'argsMap' appropriately.

        Returns True iff the option and its value are valid. If False is
        returned then it is expected that _fail() has been called at least
        once to report why.
        """
        raise NotImplementedError

    def _processNonOptionArguments(self, args, argsMap):
        """
        Processes all of our command line arguments 'args' that are not
        options or part of options, returning True iff they're all valid.
        """
        raise NotImplementedError

    def _checkArgumentCombinations(self, argsMap):
        """
        Checks that the combination of all of the arguments in 'argsMap'
        is valid, returning True iff it is.

        Note: this method isn't called until all of the option and non-
        option arguments have been processed.
        """
        assert argsMap is not None
        return True

    def _execute(self, argsMap):
        """
        Executes this program using the information from the arguments map
        'argsMap' built by processing all of our arguments.

        Returns the exit code that this program should return: it should be
        0 iff execution was successful.
        """
        raise NotImplementedError
