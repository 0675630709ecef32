# -*- coding: utf-8 -*-
# utils/hdf.py

"""
Versioned HDF5 storage of solution trajectories.
"""

import logging
import h5py
import numpy as np

from . import classname, atomicPath
from .error import FileError

FORMAT_NAME = "cardiotopo"

class HDFWriter(object):
    """Writes attributes and datasets to the root group of a new HDF5
    file. The file is complete once the *with* block is left."""
    _handle = None

    def __init__(self, filename):
        self._handle = h5py.File(filename, 'w')

    def __enter__(self):
        self._handle.__enter__()
        return self

    def __exit__(self, *args, **kwargs):
        return self._handle.__exit__(*args, **kwargs)

    def log(self, msg):
        logging.debug(u"[{}] {}".format(classname(self), msg))

    def writeAttributes(self, **kwargs):
        for key, value in kwargs.items():
            if value is None:
                continue
            if isinstance(value, (bool, np.bool_)):
                value = np.int8(value)
            self.log("attribute '{0}': '{1}'".format(key, value))
            self._handle.attrs[key] = value

    def writeDataset(self, name, data):
        data = np.asarray(data)
        self.log("dataset '{0}' {1}".format(name, data.shape))
        if data.ndim == 0:
            self._handle.create_dataset(name, data = data)
        else:
            self._handle.create_dataset(name, data = data,
                                        compression = "gzip")

class HDFMixin(object):
    """Adds versioned HDF5 storage to a class. Subclasses define *hdfKind*,
    hdfWrite() and hdfRestore(), and increase *hdfVersion* when the layout
    changes."""
    hdfKind = None
    hdfVersion = 1

    def hdfStore(self, filename):
        """Writes itself to a new HDF file, returns the file name."""
        with atomicPath(filename) as tmpName:
            with HDFWriter(tmpName) as hdf:
                hdf.writeAttributes(format = FORMAT_NAME, kind = self.hdfKind,
                                    version = self.hdfVersion)
                self.hdfWrite(hdf)
        return filename

    def hdfWrite(self, hdf):
        """*hdf*: a HDFWriter instance."""
        raise NotImplementedError

    @classmethod
    def hdfLoad(cls, filename):
        """Restores an instance from a file written by hdfStore() of the
        same kind and not newer than the supported version."""
        try:
            handle = h5py.File(filename, 'r')
        except (IOError, OSError):
            raise FileError("Could not open HDF5 file!", filename)
        with handle:
            attrs = dict(handle.attrs)
            fmt, kind = attrs.get("format"), attrs.get("kind")
            if isinstance(fmt, bytes):
                fmt, kind = fmt.decode(), kind.decode()
            if fmt != FORMAT_NAME or kind != cls.hdfKind:
                raise FileError("Not a {0} {1} file!"
                                .format(FORMAT_NAME, cls.hdfKind), filename)
            version = int(attrs.get("version", -1))
            if version > cls.hdfVersion:
                raise FileError("Unsupported file version {0}!"
                                .format(version), filename)
            return cls.hdfRestore(handle)

    @classmethod
    def hdfRestore(cls, group):
        raise NotImplementedError

# vim: set ts=4 sts=4 sw=4 tw=0:
