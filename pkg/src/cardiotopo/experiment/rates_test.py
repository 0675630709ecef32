# -*- coding: utf-8 -*-
# experiment/rates_test.py

import os
import shutil
import tempfile
import numpy as np
from nose.tools import assert_raises
from nose.plugins.attrib import attr

from .config import ExperimentConfig
from .rates import rateStudy, perturbationNorms, fitSlopes, HEADER
from ..datafile import CsvFile
from ..mesh import rectangleMesh
from ..utils.error import ConfigurationError

tempDir = None

def setup_module():
    global tempDir
    tempDir = tempfile.mkdtemp(prefix = "cardiotopo_rates_")

def teardown_module():
    shutil.rmtree(tempDir, ignore_errors = True)

def testPerturbationNorms():
    mesh = rectangleMesh(1., 1., 8, 8)
    # d = x at every time: |d|^2 = 1/3, |grad d|^2 = 1
    difference = np.tile(mesh.nodes[:, 0], (5, 1))
    norms = perturbationNorms(mesh, difference, .25)
    assert abs(norms["norm_linf_l2"] - np.sqrt(1. / 3.)) < 1e-12
    assert abs(norms["norm_l2_l2"] - np.sqrt(1. / 3.)) < 1e-12
    assert abs(norms["norm_l2_h1"] - np.sqrt(4. / 3.)) < 1e-12
    # growing linearly in time up to t = 1
    growing = np.linspace(0., 1., 5)[:, None] * difference
    norms = perturbationNorms(mesh, growing, .25)
    assert abs(norms["norm_linf_l2"] - np.sqrt(1. / 3.)) < 1e-12
    assert norms["norm_l2_l2"] < np.sqrt(1. / 3.)

def testFitSlopes():
    areas = np.array((.28, .126, .07, .031))
    norms = dict(a = 2. * areas**.5, b = .1 * areas)
    slopes = fitSlopes(areas, norms)
    assert abs(slopes["a"][0] - .5) < 1e-12
    assert abs(slopes["a"][1] - np.log(2.)) < 1e-12
    assert abs(slopes["b"][0] - 1.) < 1e-12

def testRadiiChecks():
    config = ExperimentConfig()
    for radii in ((.3, .2), (.1, .2, .3), (.3, .2, .2), (.3, .2, 0.)):
        with assert_raises(ConfigurationError):
            rateStudy(config, radii)

@attr('slow')
def testRateStudy():
    config = ExperimentConfig(threads = 2)
    rows, slopes = rateStudy(config, outDir = tempDir)
    assert [row[0] for row in rows] == list(config.radii())
    areas = [row[1] for row in rows]
    assert all(a > b for a, b in zip(areas[:-1], areas[1:]))
    assert slopes["norm_l2_l2"][0] >= .55
    assert .4 <= slopes["norm_linf_l2"][0] <= .7
    ratios = dict((row[0], row[-1]) for row in rows)
    assert .7 <= ratios[.1] <= 1.3
    assert abs(ratios[.1] - 1.) < abs(ratios[.2] - 1.)
    table = CsvFile.load(os.path.join(tempDir, "rates.csv"))
    assert table.header == HEADER
    assert table.comments["config_hash"] == config.hash()
    assert os.path.exists(os.path.join(tempDir, "rates_summary.txt"))

# vim: set ts=4 sts=4 sw=4 tw=0:
