# Defines the maps f: B^n -> B used to build code instances, and the check
# that such a map is t-resilient.
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

import grauthcode.galoisring as gr
import grauthcode.utilities as ut


# Constants.

# The kinds of map, and the prefixes of their descriptors.
rs_LINEAR = "linear"
rs_TABLE = "table"
rs_allKinds = [rs_LINEAR, rs_TABLE]
_rs_kindSeparator = ":"

# The separator between the coefficients in a linear map's descriptor.
_rs_coefficientSeparator = ","

# The separator between the fields of a line of a table map's file, and the
# prefix of a comment line in one.
_rs_tableFieldSeparator = "|"
_rs_tableCommentPrefix = "#"

# How resilience is defined: the definition that rs_checkResilient() checks.
rs_resilienceDefinition = ("f is t-resilient iff fixing any set J of "
    "coordinates with |J| <= t and |J| < n leaves f balanced: every value "
    "of B is taken equally often over the free coordinates")


# Classes.

class rs_ResilienceError(Exception):
    """
    The class of exception raised when a map descriptor is invalid or a map
    can't be evaluated.
    """
    pass


class rs_ResilientMap(object):
    """
    Represents a map f: B^n -> B that is claimed to be t-resilient, either
    linear (with unit coefficients) or given by a table of its values.

    Note: instances are immutable.
    """

    def __init__(self, ring, n, kind, descriptor, coeffs = None,
                 table = None, claimedT = None):
        object.__init__(self)
        assert kind in rs_allKinds
        assert n >= 1
        self.ring = ring
        self.n = n
        self.kind = kind
        self.descriptor = descriptor
        self.claimedT = claimedT
        if kind == rs_LINEAR:
            assert coeffs is not None and len(coeffs) == n
            self._rs_coeffs = tuple(coeffs)
            self._rs_table = None
        else:
            assert table is not None
            self._rs_coeffs = None
            self._rs_table = dict(table)

    def coefficients(self):
        """
        Returns our coefficients if we're a linear map, and None otherwise.
        """
        return self._rs_coeffs

    def evaluate(self, x):
        """
        Returns f('x'), where 'x' is a sequence of n elements of B.

        Raises an rs_ResilienceError if we're a table map with no entry for
        'x'.
        """
        if len(x) != self.n:
            raise rs_ResilienceError("f takes %i arguments, not %i" %
                                     (self.n, len(x)))
        if self.kind == rs_LINEAR:
            result = self.ring.zero()
            for (c, v) in zip(self._rs_coeffs, x):
                result = result + c * v
        else:
            result = self._rs_table.get(tuple(v.coeffs for v in x))
            if result is None:
                raise rs_ResilienceError("the table of f has no entry for "
                    "(%s)" % " | ".join(gr.gr_elementText(v) for v in x))
        return result


class rs_ResilienceReport(object):
    """
    Represents the result of checking whether a map is t-resilient.
    """

    def __init__(self, t, passed, checkedSets, failure = None):
        object.__init__(self)
        self.t = t
        self.passed = passed
        self.checkedSets = checkedSets
        self.failure = failure          # (J, fixed values) or None
        self.definition = rs_resilienceDefinition


# Functions.

def rs_parseMapDescriptor(txt, ring, n, claimedT = None):
    """
    Builds and returns the rs_ResilientMap on ring^n that the descriptor
    'txt' describes, where 'txt' is either

        linear:c_0,...,c_{n-1}

    where each c_j is an int or 'xi^j' and must be a unit, or

        table:PATH

    where PATH is the pathname of a file each of whose non-comment lines is
    'x_0|...|x_{n-1}|value' with every element in canonical text form.
    """
    if _rs_kindSeparator not in txt:
        raise rs_ResilienceError("the map descriptor '%s' doesn't start "
            "with one of the kinds %s" % (txt, ", ".join(rs_allKinds)))
    (kind, rest) = txt.split(_rs_kindSeparator, 1)
    kind = kind.strip()
    if kind == rs_LINEAR:
        coeffs = [_rs_parseCoefficient(s, ring)
                    for s in rest.split(_rs_coefficientSeparator)]
        result = rs_linearMap(ring, coeffs, claimedT, txt)
        if result.n != n:
            raise rs_ResilienceError("the linear map '%s' has %i "
                "coefficients but n = %i" % (txt, result.n, n))
    elif kind == rs_TABLE:
        result = rs_tableMapFromFile(rest.strip(), ring, n, claimedT, txt)
    else:
        raise rs_ResilienceError("'%s' isn't a kind of map: use one of %s" %
                                 (kind, ", ".join(rs_allKinds)))
    assert result is not None
    return result

def rs_defaultDescriptor(n):
    """
    Returns the descriptor of the linear map x_0 + ... + x_{n-1}.
    """
    return "%s%s%s" % (rs_LINEAR, _rs_kindSeparator,
                       _rs_coefficientSeparator.join(["1"] * n))

def _rs_parseCoefficient(txt, ring):
    txt = txt.strip()
    if txt.startswith(gr.gr_generatorPowerPrefix):
        try:
            result = ring.teichmuller.parse(txt)
        except gr.gr_RingError as ex:
            raise rs_ResilienceError(str(ex))
    else:
        try:
            result = ring.constant(ut.ut_parseInt(txt))
        except ValueError as ex:
            raise rs_ResilienceError("the coefficient '%s' is neither an "
                                     "int nor xi^j: %s" % (txt, ex))
    return result

def rs_linearMap(ring, coeffs, claimedT = None, descriptor = None):
    """
    Returns the linear rs_ResilientMap x -> sum of c_j x_j whose
    coefficients are the elements of 'ring' in 'coeffs'.

    Raises an rs_ResilienceError if any of the coefficients isn't a unit.
    """
    if not coeffs:
        raise rs_ResilienceError("a linear map needs at least one "
                                 "coefficient")
    for c in coeffs:
        if not c.isUnit():
            raise rs_ResilienceError("the coefficient %s of a linear map "
                "must be a unit" % gr.gr_elementText(c))
    if descriptor is None:
        descriptor = "%s%s%s" % (rs_LINEAR, _rs_kindSeparator,
            _rs_coefficientSeparator.join(gr.gr_elementText(c)
                                          for c in coeffs))
    return rs_ResilientMap(ring, len(coeffs), rs_LINEAR, descriptor,
                           coeffs = coeffs, claimedT = claimedT)

def rs_tableMap(ring, n, table, claimedT = None, descriptor = "table"):
    """
    Returns the rs_ResilientMap whose values are given by 'table', a map
    from tuples of the coefficient tuples of n elements of 'ring' to
    elements of 'ring'.
    """
    return rs_ResilientMap(ring, n, rs_TABLE, descriptor, table = table,
                           claimedT = claimedT)

def rs_tableMapFromFile(path, ring, n, claimedT = None, descriptor = None):
    """
    Returns the rs_ResilientMap whose values are listed in the file with
    pathname 'path'.

    See rs_parseMapDescriptor().
    """
    if descriptor is None:
        descriptor = "%s%s%s" % (rs_TABLE, _rs_kindSeparator, path)
    try:
        with open(path, 'r') as f:
            lines = f.readlines()
    except IOError as ex:
        raise rs_ResilienceError("the table file '%s' couldn't be read: %s"
                                 % (path, ex))
    table = {}
    for (lineNumber, line) in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith(_rs_tableCommentPrefix):
            continue  # for
        fields = line.split(_rs_tableFieldSeparator)
        if len(fields) != n + 1:
            raise rs_ResilienceError("line %i of '%s' has %i fields but "
                "should have %i" % (lineNumber, path, len(fields), n + 1))
        try:
            elts = [gr.gr_parseElement(s, ring) for s in fields]
        except gr.gr_RingError as ex:
            raise rs_ResilienceError("line %i of '%s' is invalid: %s" %
                                     (lineNumber, path, ex))
        key = tuple(e.coeffs for e in elts[:-1])
        if key in table:
            raise rs_ResilienceError("line %i of '%s' repeats an argument" %
                                     (lineNumber, path))
        table[key] = elts[-1]
    return rs_tableMap(ring, n, table, claimedT, descriptor)

def rs_evaluate(f, x):
    """
    Returns f('x').

    See rs_ResilientMap.evaluate().
    """
    return f.evaluate(x)

def rs_valueArray(f):
    """
    Returns an n-dimensional numpy array V such that V[i_0, ..., i_{n-1}]
    is the index in B of f(x), where x_j is the element of B with index
    i_j.
    """
    ring = f.ring
    elements = list(ring.allElements())
    size = len(elements)
    values = [ring.indexOf(f.evaluate(x))
                for x in itertools.product(elements, repeat = f.n)]
    result = np.array(values, dtype = np.int64).reshape((size,) * f.n)
    return result

def rs_checkResilient(f, t):
    """
    Checks whether 'f' is 't'-resilient, returning an rs_ResilienceReport.

    See rs_resilienceDefinition.
    """
    if t < 0:
        raise rs_ResilienceError("the resilience order t = %i is negative"
                                 % t)
    ring = f.ring
    n = f.n
    size = ring.order
    if size ** n > ring.cap:
        raise rs_ResilienceError("checking f needs %i evaluations, which "
                                 "exceeds the cap of %i" %
                                 (size ** n, ring.cap))
    values = rs_valueArray(f)
    checked = 0
    failure = None
    maxSize = min(t, n - 1)
    for k in range(maxSize + 1):
        for J in itertools.combinations(range(n), k):
            checked += 1
            failure = _rs_findUnbalancedSlice(values, J, size)
            if failure is not None:
                break  # for
        if failure is not None:
            break  # for
    result = rs_ResilienceReport(t, failure is None, checked, failure)
    return result

def _rs_findUnbalancedSlice(values, J, size):
    """
    Returns a pair (J, fixed) where 'fixed' is the tuple of the indices at
    which fixing the coordinates in 'J' leaves f unbalanced, or None if
    every such slice is balanced.
    """
    k = len(J)
    moved = np.moveaxis(values, list(J), list(range(k)))
    rows = moved.reshape(size ** k, -1)
    free = rows.shape[1]
    result = None
    for (i, row) in enumerate(rows):
        counts = np.bincount(row, minlength = size)
        if free % size != 0 or np.any(counts != free // size):
            fixed = tuple(reversed(ut.ut_baseDigits(i, size, k)))
            result = (J, fixed)
            break  # for
    return result
