# -*- coding: utf-8 -*-
# datafile/csvfile.py

import numpy as np

from .asciifile import AsciiFile
from ..utils import classproperty
from ..utils.error import ParseError

class CsvTable(object):
    """Column names, rows and the key=value comments of a CSV file."""

    def __init__(self, header, rows, comments = None):
        self.header = tuple(header)
        self.rows = [tuple(r) for r in rows]
        self.comments = dict(comments or {})

    def column(self, name):
        index = self.header.index(name)
        return np.array([row[index] for row in self.rows])

    def __len__(self):
        return len(self.rows)

class CsvFile(AsciiFile):
    """Comma separated table: comment lines, a header line, numeric rows."""
    separator = ","

    @classproperty
    @classmethod
    def fileFilter(cls):
        return (("comma separated values", "csv"),)

    @classmethod
    def writeFile(cls, filename, data, **kwargs):
        super(CsvFile, cls).writeFile(filename, data.rows,
                                      header = data.header,
                                      comments = data.comments or None)

    def parseLines(self, asciiLines, **kwargs):
        lines = self.contentLines(asciiLines)
        try:
            number, headerLine = next(lines)
        except StopIteration:
            raise ParseError("header line missing", self.filename)
        header = tuple(c.strip() for c in headerLine.split(self.separator))
        rows = []
        for number, line in lines:
            fields = [f.strip() for f in line.split(self.separator)]
            if len(fields) != len(header):
                raise ParseError("expected {0} columns, found {1}"
                                 .format(len(header), len(fields)),
                                 self.filename, number)
            rows.append(self.readTuple(fields, lineNumber = number))
        self._data = CsvTable(header, rows, self.comments(asciiLines))

# vim: set ts=4 sts=4 sw=4 tw=0:
