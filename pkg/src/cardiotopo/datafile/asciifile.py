# -*- coding: utf-8 -*-
# datafile/asciifile.py

from abc import ABCMeta, abstractmethod
from future.utils import with_metaclass

from .datafile import DataFile
from ..utils.error import ParseError
from ..utils import isString, openFile, atomicOpen, formatFloat

class AsciiFile(with_metaclass(ABCMeta, DataFile)):
    """A generic line oriented text file. Lines starting with
    *commentPrefix* carry metadata and are skipped by readers."""
    separator = " "
    newline = "\n"
    commentPrefix = "#"

    # helpers for writing

    @classmethod
    def formatValue(cls, value):
        if isinstance(value, float):
            return formatFloat(value)
        return "{0}".format(value)

    @classmethod
    def formatRow(cls, row, **kwargs):
        return cls.separator.join([cls.formatValue(value) for value in row])

    @classmethod
    def formatData(cls, data, **kwargs):
        return cls.newline.join([cls.formatRow(row, **kwargs)
                                 for row in data])

    @classmethod
    def _formatHeader(cls, header):
        if not isString(header):
            header = cls.separator.join(header)
        return header + cls.newline

    @classmethod
    def formatComments(cls, comments):
        """Comment lines from a sequence of text or a dict of key=value."""
        if comments is None:
            return ""
        if isinstance(comments, dict):
            comments = ["{0}={1}".format(k, v) for k, v in comments.items()]
        return "".join("{0} {1}{2}".format(cls.commentPrefix, c, cls.newline)
                       for c in comments)

    @staticmethod
    def _write(filename, text):
        with atomicOpen(filename, 'w') as fd:
            fd.write(text)

    @classmethod
    def writeFile(cls, filename, data, header = None, comments = None,
                  **kwargs):
        """Writes comment lines, an optional header line and the rows of
        data in one go."""
        text = cls.formatComments(comments)
        if header is not None:
            text += cls._formatHeader(header)
        body = cls.formatData(data, **kwargs)
        if len(body):
            text += body + cls.newline
        cls._write(filename, text)

    # helpers for reading

    def readTuple(self, fields, dataType = float, lineNumber = None,
                  **kwargs):
        """Converts each field to the requested datatype.
        Raises a ParseError naming the line if one is incompatible."""
        try:
            return tuple(dataType(f) for f in fields)
        except (ValueError, TypeError):
            raise ParseError("could not read {0} values from '{1}'"
                             .format(getattr(dataType, "__name__", dataType),
                                     self.separator.join(fields)),
                             self.filename, lineNumber)

    def readFile(self, **kwargs):
        asciiLines = None
        try:
            with openFile(self.filename, 'r') as fd:
                asciiLines = fd.readlines()
        except UnicodeDecodeError:
            with openFile(self.filename, 'r', encoding = 'latin1') as fd:
                asciiLines = fd.readlines()
        self.parseLines(asciiLines, **kwargs)

    def contentLines(self, asciiLines):
        """Yields (1-based line number, stripped line) of all non-empty,
        non-comment lines."""
        for i, line in enumerate(asciiLines):
            line = line.strip()
            if not len(line) or line.startswith(self.commentPrefix):
                continue
            yield i + 1, line

    def comments(self, asciiLines):
        """key=value pairs of the comment lines."""
        result = dict()
        for line in asciiLines:
            line = line.strip()
            if not line.startswith(self.commentPrefix):
                continue
            key, sep, value = line[len(self.commentPrefix):].partition("=")
            if sep:
                result[key.strip()] = value.strip()
        return result

    @abstractmethod
    def parseLines(self, asciiLines, **kwargs):
        """Parses the lines of the file and sets the data.
        Reimplement this in subclasses."""
        raise NotImplementedError

# vim: set ts=4 sts=4 sw=4 tw=0:
