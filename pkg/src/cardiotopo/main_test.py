# -*- coding: utf-8 -*-
# main_test.py

import os
import shutil
import tempfile
import numpy as np
from nose.tools import assert_raises

from .main import main, makeParser
from .datafile import saveMesh, saveTrace, loadTrace
from .mesh import rectangleMesh
from .monodomain import TraceSeries, timeGrid

tempDir = None

def setup_module():
    global tempDir
    tempDir = tempfile.mkdtemp(prefix = "cardiotopo_main_")

def teardown_module():
    shutil.rmtree(tempDir, ignore_errors = True)

def _path(name):
    return os.path.join(tempDir, name)

def _trace():
    times = timeGrid(.1, 1.)
    values = np.outer(times, np.ones(3))
    filename = _path("trace.csv")
    saveTrace(TraceSeries((2, 5, 7), ((0., 0.), (1., 0.), (2., 0.)), times,
                          values, "c0ffee"), filename)
    return filename

def testParser():
    args = makeParser().parse_args(["-s", "3", "-t", "2", "rates",
                                    "--radii", ".3", ".2", ".1"])
    assert args.seed == 3 and args.threads == 2
    assert args.radii == [.3, .2, .1]
    assert args.out == "." and args.config is None
    with assert_raises(SystemExit):
        makeParser().parse_args([])
    with assert_raises(SystemExit):
        makeParser().parse_args(["invert"])

def testValidateMesh():
    filename = saveMesh(rectangleMesh(1., 1., 3, 3), _path("square.mesh"))
    assert main(["-o", tempDir, "mesh", "--validate", filename]) == 0
    assert os.listdir(tempDir)

def testNoise():
    out = _path("noise")
    assert main(["-o", out, "-s", "4", "noise", _trace(), "--level",
                 ".1"]) == 0
    noisy = loadTrace(os.path.join(out, "noisy.csv"))
    assert noisy.nodeIds.tolist() == [2, 5, 7]
    assert 0. < np.abs(noisy.values - np.outer(noisy.times, np.ones(3))).max()

def testErrorExitCodes():
    out = _path("errors")
    # noise level out of range
    assert main(["-o", out, "noise", _trace(), "--level", "1.5"]) == 1
    # missing config file
    assert main(["-o", out, "-c", _path("none.ini"), "synth"]) == 1
    # radii not decreasing, refused before solving
    assert main(["-o", out, "rates", "--radii", ".1", ".2", ".3"]) == 1
    # worker count out of range
    assert main(["-o", out, "-t", "0", "rates"]) == 1

# vim: set ts=4 sts=4 sw=4 tw=0:
