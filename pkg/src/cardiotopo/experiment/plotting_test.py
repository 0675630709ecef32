# -*- coding: utf-8 -*-
# experiment/plotting_test.py

import os
import shutil
import tempfile
import numpy as np

from .plotting import plotGradientField, plotRates
from .rates import fitSlopes
from ..mesh import rectangleMesh
from ..monodomain import Inclusion
from ..topo import GradientField, locateMinima

tempDir = None

def setup_module():
    global tempDir
    tempDir = tempfile.mkdtemp(prefix = "cardiotopo_plotting_")

def teardown_module():
    shutil.rmtree(tempDir, ignore_errors = True)

def _isPng(filename):
    with open(filename, 'rb') as fd:
        return fd.read(8) == b"\x89PNG\r\n\x1a\n"

def testGradientPlot():
    mesh = rectangleMesh(2., 2., 10, 10)
    values = ((mesh.nodes - 1.)**2).sum(axis = 1) - 1.
    field = GradientField(mesh, values, mesh.boundaryDistance() >= .3)
    filename = plotGradientField(field, os.path.join(tempDir, "g.png"),
                                 [Inclusion((1., 1.), .2)],
                                 locateMinima(field), title = "G")
    assert _isPng(filename)
    # nothing admissible still gives a figure
    empty = GradientField(mesh, values, np.zeros(mesh.nodeCount, dtype = bool))
    assert _isPng(plotGradientField(empty, os.path.join(tempDir, "e.png")))

def testRatesPlot():
    areas = np.pi * np.array((.3, .2, .15, .1))**2
    norms = dict(norm_l2_l2 = areas**.6, norm_linf_l2 = .5 * areas**.5)
    filename = plotRates(areas, norms, fitSlopes(areas, norms),
                         os.path.join(tempDir, "rates.png"))
    assert _isPng(filename)

# vim: set ts=4 sts=4 sw=4 tw=0:
