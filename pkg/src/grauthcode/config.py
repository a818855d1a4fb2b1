# Defines the class that represents the configuration of a code instance,
# as read from a configuration file.
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

import os.path

import grauthcode.galoisring as gr
import grauthcode.utilities as ut


# Constants.

# The version of this tool, as recorded in every report.
toolVersion = "0.1"

# The separator between the items of a list-valued configuration variable
# whose value is given as a single string.
_listSeparator = ","

# The names of configuration variables whose values can be set in a
# configuration file.
_requiredConfigVarNames = ["p", "r", "ell", "n"]
_optionalConfigVarNames = ["t", "eta", "theta", "Z", "f", "seed", "cap"]

# The names of the configuration variables whose values are lists of
# Teichmuller elements.
_elementListVarNames = ["eta", "theta", "Z"]

# The name of the field used in a conf_CodeConfiguration instance to
# determine whether the instance has finished being initialized or not.
_conf_isInitializedField = '_conf_isInitialized'


# Functions.

def _conf_elementList(value):
    """
    Returns the list of the texts of the Teichmuller elements that 'value'
    - a list or a comma-separated string - lists, or None if 'value' is
    None.
    """
    if value is None:
        result = None
    elif isinstance(value, str):
        result = [s.strip() for s in value.split(_listSeparator)
                    if s.strip()]
    else:
        result = [str(v).strip() for v in value]
    return result

def conf_elementListText(texts):
    """
    Returns the canonical text form of the list of element texts 'texts'.
    """
    assert texts is not None
    return ", ".join(texts)


# Classes.

class conf_CodeConfiguration(object):
    """
    Represents the configuration of a code instance: the ring parameters, the
    optional choices of eta, theta, Z and f, and the seed and cap used by
    the computations on the instance.

    A configuration file is a Python source file that assigns values to the
    variables p, r, ell and n, and optionally to t, eta, theta, Z, f, seed
    and cap.

    Note: instances are read-only.
    """

    def __init__(self, path):
        initVar = _conf_isInitializedField
        self.__dict__[initVar] = False
        try:
            self.pathname = path
            self._setPropertiesFromConfigurationFile(path)
        finally:
            self.__dict__[initVar] = True
        self.checkConfiguration()

    def __setattr__(self, name, value):
        isInit = getattr(self, _conf_isInitializedField)
        if isInit:
            raise AttributeError("can't set configuration information: " +
                                 "it's read-only")
        else:
            self.__dict__[name] = value

    def __delattr__(self, name):
        raise AttributeError("can't delete configuration information: "
                             "it's read-only")

    def _setPropertiesFromConfigurationFile(self, path):
        """
        Sets properties on this configuration object from the values of the
        variables set in the configuration file with pathname 'path'.

        Raises a ValueError if the file can't be read or executed, or if it
        doesn't set all of the required variables.
        """
        m = self._buildInitialConfigurationMap()
        p = os.path.expanduser(path)
        try:
            ut.ut_updateMapByExecutingFile(p, m)
        except IOError as ex:
            raise ValueError("the configuration file '%s' couldn't be "
                             "read: %s" % (path, ex))
        except SyntaxError as ex:
            raise ValueError("the configuration file '%s' couldn't be "
                             "executed: %s" % (path, ex))
        missingRequiredVarNames = []
        for name in _requiredConfigVarNames:
            try:
                setattr(self, name, m[name])
            except KeyError:
                missingRequiredVarNames.append(name)
        for name in _optionalConfigVarNames:
            setattr(self, name, m[name])
        if missingRequiredVarNames:
            raise ValueError("The following required configuration "
                "variables were not set in the configuration file '%s': %s"
                % (path, ", ".join(missingRequiredVarNames)))

    def _buildInitialConfigurationMap(self):
        """
        Builds and returns the map that contains the initial configuration
        information, before the configuration file is processed.
        """
        result = {
            # Set the default values of optional variables here.
            "t": None,          # really use n
            "eta": None,
            "theta": None,
            "Z": None,
            "f": None,          # really use the all-ones linear map
            "seed": 0,
            "cap": gr.gr_defaultCap
        }
        assert result is not None
        return result

    def checkConfiguration(self):
        """
        Performs various checks to help ensure that this configuration is a
        valid one.
        """
        for name in _requiredConfigVarNames:
            self._checkIsPositiveInt(getattr(self, name),
                "the configuration variable '%s' must be a positive integer, "
                "but its value is '%s'" % (name, getattr(self, name)))
        self._checkIsPositiveInt(self.cap, "the cap '%s' must be a positive "
            "integer" % self.cap)
        self._checkIsNonnegativeInt(self.seed, "the seed '%s' must be a "
            "non-negative integer" % self.seed)
        if self.t is not None:
            self._checkIsPositiveInt(self.t, "the resilience order t '%s' "
                "must be a positive integer" % self.t)
        for name in _elementListVarNames:
            value = getattr(self, name)
            self._check(value is None or isinstance(value, (str, list, tuple)),
                "the configuration variable '%s' must be a list or a "
                "comma-separated string of Teichmuller elements" % name)
        self._check(self.f is None or isinstance(self.f, str),
            "the map descriptor f must be a string like 'linear:1,xi^2' or "
            "'table:PATH'")

    def codeArguments(self):
        """
        Returns a map from the names of the arguments that
        construction.cc_buildCodeParams() takes to their values in this
        configuration.
        """
        result = {
            "p": int(self.p), "r": int(self.r), "ell": int(self.ell),
            "n": int(self.n),
            "t": None if self.t is None else int(self.t),
            "eta": _conf_elementList(self.eta),
            "theta": _conf_elementList(self.theta),
            "Z": _conf_elementList(self.Z),
            "f": self._conf_mapDescriptor(),
            "cap": int(self.cap)
        }
        assert result is not None
        return result

    def _conf_mapDescriptor(self):
        """
        Returns our map descriptor, with any table's pathname made relative
        to our configuration file's directory.
        """
        result = self.f
        if result is not None and result.startswith("table:"):
            path = result[len("table:"):].strip()
            if not os.path.isabs(path):
                base = os.path.dirname(os.path.abspath(self.pathname))
                path = os.path.join(base, path)
            result = "table:" + path
        return result

    def canonicalItems(self):
        """
        Returns a list of (name, text) pairs, one for each configuration
        variable, in a fixed order. Variables that weren't set are given
        the text 'default'.

        See construction.cc_CodeParams.canonicalItems() for the version with
        every default materialized.
        """
        result = []
        args = self.codeArguments()
        for name in _requiredConfigVarNames + _optionalConfigVarNames:
            if name == "seed":
                value = str(self.seed)
            else:
                value = args[name]
                if value is None:
                    value = "default"
                elif name in _elementListVarNames:
                    value = conf_elementListText(value)
                else:
                    value = str(value)
            result.append((name, value))
        assert len(result) == len(_requiredConfigVarNames) + \
            len(_optionalConfigVarNames)
        return result

    def ringArguments(self):
        """
        Returns the (p, r, ell, n, cap) tuple of this configuration's ring
        parameters.
        """
        return (int(self.p), int(self.r), int(self.ell), int(self.n),
                int(self.cap))

    def _check(self, condValue, msg):
        """
        Checks that 'condValue' is True, raising an exception with message
        'msg' if it isn't.
        """
        if not condValue:
            raise ValueError(msg)

    def _checkIsInt(self, value, msg):
        """
        Checks that 'value' can be converted to an int, raising an exception
        with message 'msg' if it can't.
        """
        self._check(ut.ut_isInt(value), msg)

    def _checkIsNonnegativeInt(self, value, msg):
        self._checkIsInt(value, msg)
        self._check(int(value) >= 0, msg)

    def _checkIsPositiveInt(self, value, msg):
        self._checkIsInt(value, msg)
        self._check(int(value) > 0, msg)
