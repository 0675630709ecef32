# -*- coding: utf-8 -*-
# datafile/tracefile_test.py

import os
import shutil
import tempfile
import numpy as np
from nose.tools import assert_raises

from .csvfile import CsvFile, CsvTable
from .tracefile import TraceFile, loadTrace, saveTrace
from ..monodomain.trace import TraceSeries
from ..utils.error import ParseError, ProvenanceError

TMPDIR = None

def setup_module():
    global TMPDIR
    TMPDIR = tempfile.mkdtemp(prefix = "cardiotopo_trace_")

def teardown_module():
    shutil.rmtree(TMPDIR, ignore_errors = True)

def _path(name):
    return os.path.join(TMPDIR, name)

def _trace(configHash = "abc123"):
    nodeIds = (7, 3, 11)
    coords = ((1., 0.), (0., 1.), (-1. / 3., .5))
    times = np.arange(4) * .05
    values = np.sin(np.arange(12.)).reshape(4, 3) / 3.
    return TraceSeries(nodeIds, coords, times, values, configHash)

def testTraceFileRoundTrip():
    trace = _trace()
    filename = saveTrace(trace, _path("trace.csv"))
    with open(filename) as fd:
        lines = fd.read().splitlines()
    assert lines[0] == "# config_hash=abc123"
    assert lines[1] == "t,node_id,x,y,u"
    assert lines[2].split(",")[:2] == ["0.0", "3"]
    assert len(lines) == 2 + 12
    other = loadTrace(filename, "abc123")
    assert np.array_equal(other.nodeIds, (3, 7, 11))
    assert np.array_equal(other.values, trace.values)
    assert np.array_equal(other.coords, trace.coords)
    assert np.allclose(other.times, trace.times, rtol = 0., atol = 1e-15)
    assert other.configHash == "abc123"

def testTraceProvenance():
    filename = saveTrace(_trace(), _path("provenance.csv"))
    with assert_raises(ProvenanceError):
        loadTrace(filename, "other")
    # without an expected hash any trace is accepted
    assert loadTrace(filename).configHash == "abc123"

def testTraceWithoutHash():
    filename = saveTrace(_trace(None), _path("nohash.csv"))
    assert loadTrace(filename).configHash is None
    with assert_raises(ProvenanceError):
        loadTrace(filename, "abc123")

def _writeLines(name, lines):
    with open(_path(name), 'w') as fd:
        fd.write("\n".join(lines) + "\n")
    return _path(name)

def testTraceParseErrors():
    header = "t,node_id,x,y,u"
    rows = ["0,1,0,0,0.1", "0,2,1,0,0.2", "0.5,1,0,0,0.3", "0.5,2,1,0,0.4"]
    assert len(loadTrace(_writeLines("ok.csv", [header] + rows))) == 2
    cases = (("header.csv", ["t,node,x,y,u"] + rows),
             ("gap.csv", [header] + rows[:3]),
             ("repeat.csv", [header] + rows[:3] + [rows[2]]),
             ("empty.csv", [header]),
             ("columns.csv", [header, "0,1,0,0"]))
    for name, lines in cases:
        with assert_raises(ParseError):
            loadTrace(_writeLines(name, lines))
    with assert_raises(ParseError) as ctx:
        loadTrace(_writeLines("value.csv", [header] + rows[:1]
                              + ["0,2,1,0,high"]))
    assert ctx.exception.lineNumber == 3

def testCsvTable():
    table = CsvTable(("node_id", "x", "G"), [(0, .5, -1.), (4, 1.5, 2.)],
                     dict(config_hash = "f00"))
    filename = CsvFile.writeData(_path("table.csv"), table)
    other = CsvFile.load(filename)
    assert other.header == table.header
    assert other.comments == dict(config_hash = "f00")
    assert np.array_equal(other.column("G"), (-1., 2.))
    assert np.array_equal(other.column("node_id"), (0, 4))
    assert len(other) == 2

def testFileFilters():
    assert TraceFile.extensions == ("csv",)
    assert CsvFile.extensions == ("csv",)

# vim: set ts=4 sts=4 sw=4 tw=0:
