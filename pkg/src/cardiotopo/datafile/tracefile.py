# -*- coding: utf-8 -*-
# datafile/tracefile.py

"""
Boundary trace files::

    # config_hash=<hex>
    t,node_id,x,y,u
    0,12,2.9,0.41,0.0
    ...

one row per time and node, ordered by time, then node id.
"""

import numpy as np

from .csvfile import CsvFile
from ..monodomain.trace import TraceSeries
from ..utils import classproperty, formatFloat
from ..utils.error import ParseError, ProvenanceError, GridMismatchError

HEADER = ("t", "node_id", "x", "y", "u")

class TraceFile(CsvFile):

    @classproperty
    @classmethod
    def fileFilter(cls):
        return (("boundary trace", "csv"),)

    @classmethod
    def formatData(cls, trace, **kwargs):
        coords = [(formatFloat(float(x)), formatFloat(float(y)))
                  for x, y in trace.coords]
        nodeIds = trace.nodeIds.tolist()
        out = []
        for t, values in zip(trace.times, trace.values):
            t = formatFloat(float(t))
            out += ["{0},{1},{2},{3},{4}".format(t, i, c[0], c[1],
                                                 formatFloat(float(u)))
                    for i, c, u in zip(nodeIds, coords, values)]
        return cls.newline.join(out)

    @classmethod
    def writeFile(cls, filename, trace, **kwargs):
        comments = None
        if trace.configHash is not None:
            comments = ["config_hash={0}".format(trace.configHash)]
        super(CsvFile, cls).writeFile(filename, trace, header = HEADER,
                                      comments = comments)

    def parseLines(self, asciiLines, **kwargs):
        CsvFile.parseLines(self, asciiLines)
        table = self._data
        if table.header != HEADER:
            raise ParseError("expected the header '{0}', found '{1}'"
                             .format(",".join(HEADER), ",".join(table.header)),
                             self.filename)
        if not len(table):
            raise ParseError("trace without data rows", self.filename)
        rows = np.array(table.rows, dtype = float)
        times, timeIndex = np.unique(rows[:, 0], return_inverse = True)
        nodeIds, nodeIndex = np.unique(rows[:, 1].astype(np.int64),
                                       return_inverse = True)
        if len(rows) != len(times) * len(nodeIds):
            raise ParseError("{0} rows do not cover {1} times and {2} nodes"
                             .format(len(rows), len(times), len(nodeIds)),
                             self.filename)
        values = np.full((len(times), len(nodeIds)), np.nan)
        values[timeIndex, nodeIndex] = rows[:, 4]
        if np.isnan(values).any():
            raise ParseError("repeated (t, node_id) rows", self.filename)
        coords = np.empty((len(nodeIds), 2))
        coords[nodeIndex] = rows[:, 2:4]
        try:
            self._data = TraceSeries(nodeIds, coords, times, values,
                                     table.comments.get("config_hash"))
        except GridMismatchError as e:
            raise ParseError(str(e), self.filename)

def loadTrace(filename, configHash = None):
    """Reads a trace; with *configHash* given, a trace written for another
    configuration raises a ProvenanceError."""
    trace = TraceFile.load(filename)
    if configHash is not None and trace.configHash != configHash:
        raise ProvenanceError("Trace '{0}' was produced with config hash {1}, "
                              "the running config has {2}!"
                              .format(filename, trace.configHash, configHash))
    return trace

def saveTrace(trace, filename):
    return TraceFile.writeData(filename, trace)

# vim: set ts=4 sts=4 sw=4 tw=0:
