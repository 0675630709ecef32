# -*- coding: utf-8 -*-
# utils/tests.py

"""
Utils for testing something.

>>> isList((1, 2)), isList("12"), isNumber("1"), isNumber(1.5)
(True, False, False, True)
"""

import numpy

try:
    from collections.abc import Sequence, Set, Callable
except ImportError:
    from collections import Sequence, Set, Callable

# object tests

def isString(obj):
    return isinstance(obj, str)

def isList(obj):
    return (not isString(obj) and
            (isinstance(obj, Sequence)
             or (isinstance(obj, numpy.ndarray)
                 and obj.ndim < 2)))

def isSet(obj):
    return isinstance(obj, Set)

def isNumber(obj):
    # float(obj) gives false positive for strings like "1"
    # which are not supposed to be numbers
    if isString(obj) or isinstance(obj, bool):
        return False
    try:
        float(obj)
    except (ValueError, TypeError):
        return False
    return True

def isCallable(obj):
    return isinstance(obj, Callable)

def isFinite(arr):
    """True if every entry of the given array-like is a finite number."""
    return bool(numpy.all(numpy.isfinite(numpy.asarray(arr, dtype = float))))

# utilities

def testfor(condition, exception, errorMessage = ""):
    if not condition:
        raise exception(errorMessage)

def assertName(newName, errorType, noWhitespace = False):
    testfor(isString(newName) and len(newName) > 0,
            errorType, "A name is mandatory!")
    testfor(not noWhitespace or newName.find(" ") < 0,
            errorType, "A name must not contain white space!")

if __name__ == "__main__":
    import doctest
    doctest.testmod()

# vim: set ts=4 sts=4 sw=4 tw=0:
