# -*- coding: utf-8 -*-
# datafile/datafile.py

import os.path
from abc import ABCMeta, abstractmethod, abstractproperty
from future.utils import with_metaclass

from ..utils.error import FileError
from ..utils import classproperty

class DataFile(with_metaclass(ABCMeta, object)):
    """
    A file holding one object of the run: a mesh, a boundary trace, a
    table or a visualization. Created from a file name it reads the object,
    created from the object it writes the file.
    """
    _filename = None
    _data = None

    @abstractproperty
    @classproperty
    @classmethod
    def fileFilter(cls):
        """(description, extension) pairs of this format."""
        raise NotImplementedError

    @classproperty
    @classmethod
    def extensions(cls):
        return tuple(ext for desc, ext in cls.fileFilter)

    @property
    def filename(self):
        return self._filename

    @property
    def name(self):
        """The plain name of the file with path and extension stripped."""
        return os.path.basename(os.path.splitext(self.filename)[0])

    @property
    def data(self):
        return self._data

    def __init__(self, filename = None, data = None, **kwargs):
        if filename is None:
            self._data = data
            return
        filename = os.path.abspath(str(filename))
        if not os.path.isfile(filename):
            raise FileError("Given file does not exist!", filename)
        self._filename = filename
        self.readFile(**kwargs)

    @abstractmethod
    def readFile(self, **kwargs):
        """Parses self.filename and sets self._data."""
        raise NotImplementedError

    @classmethod
    def load(cls, filename, **kwargs):
        """The object stored in the given file."""
        return cls(filename, **kwargs).data

    @classmethod
    @abstractmethod
    def writeFile(cls, filename, data, **kwargs):
        """Stores the object, readers never see a partial file."""
        raise NotImplementedError

    @classmethod
    def writeData(cls, filename, data, **kwargs):
        """Stores *data* in *filename* whose directory has to exist.
        Returns the absolute file name."""
        filename = os.path.abspath(str(filename))
        if not os.path.isdir(os.path.dirname(filename)):
            raise FileError("Directory does not exist:",
                            os.path.dirname(filename))
        cls.writeFile(filename, data, **kwargs)
        return filename

# vim: set ts=4 sts=4 sw=4 tw=0:
