# -*- coding: utf-8 -*-
# utils/__init__.py

import os
import codecs
import tempfile
import contextlib
import numpy as np

from .tests import (isList, isString, isSet,
                    isNumber, isCallable, isFinite)
from .tests import testfor, assertName
from .mixedmethod import mixedmethod
from .classproperty import classproperty

def classname(obj):
    if not isinstance(obj, type):
        obj = type(obj)
    return obj.__name__

def formatFloat(value):
    """Shortest text which reads back to the identical double.
    >>> formatFloat(np.float64(0.1)), formatFloat(2)
    ('0.1', '2.0')
    """
    return repr(float(value))

def openFile(filename, mode, encoding = "utf8"):
    if 'b' in mode:
        return open(filename, mode)
    return codecs.open(filename, mode, encoding = encoding)

def readOnly(arr, dtype = None):
    """A private, immutable copy of the given array."""
    arr = np.array(arr, dtype = dtype, copy = True)
    arr.setflags(write = False)
    return arr

@contextlib.contextmanager
def atomicOpen(filename, mode = 'w', encoding = "utf8"):
    """Opens a temporary file next to *filename* which replaces it once
    the block finished without error. Readers never see partial files."""
    filename = os.path.abspath(str(filename))
    dirname = os.path.dirname(filename)
    fd, tmpName = tempfile.mkstemp(dir = dirname, prefix = ".tmp_",
                                   suffix = os.path.splitext(filename)[-1])
    os.close(fd)
    try:
        with openFile(tmpName, mode, encoding) as handle:
            yield handle
        os.replace(tmpName, filename)
    finally:
        if os.path.exists(tmpName):
            os.remove(tmpName)

@contextlib.contextmanager
def atomicPath(filename):
    """Yields a temporary file name for writers which open files by name
    themselves (h5py, meshio)."""
    filename = os.path.abspath(str(filename))
    dirname = os.path.dirname(filename)
    fd, tmpName = tempfile.mkstemp(dir = dirname, prefix = ".tmp_",
                                   suffix = os.path.splitext(filename)[-1])
    os.close(fd)
    try:
        yield tmpName
        os.replace(tmpName, filename)
    finally:
        if os.path.exists(tmpName):
            os.remove(tmpName)

# vim: set ts=4 sw=4 sts=4 tw=0:
