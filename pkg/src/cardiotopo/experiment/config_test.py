# -*- coding: utf-8 -*-
# experiment/config_test.py

import os
import shutil
import tempfile
from nose.tools import raises, assert_raises

from .config import ExperimentConfig, loadConfig
from ..bases.algorithm import ParameterError
from ..mesh import BoundaryRegion
from ..monodomain import Inclusion
from ..utils.error import (ConfigurationError, ParseError, FileError,
                           InclusionError)

tempDir = None

def setup_module():
    global tempDir
    tempDir = tempfile.mkdtemp(prefix = "cardiotopo_config_")

def teardown_module():
    shutil.rmtree(tempDir, ignore_errors = True)

def _write(name, text):
    filename = os.path.join(tempDir, name)
    with open(filename, 'w') as fd:
        fd.write(text)
    return filename

SAMPLE = """[measurement]
regions = EPI, ENDO_LV
noiseLevel = 0.05

[conductivity]
healthy = 1.0, 0.2

[run]
seed = 42

[inclusion septum]
center = 2.25, 0.0
radius = 0.15

[inclusion lv]
center = 0.0, 2.25
radius = 0.1
"""

def testDefaults():
    config = ExperimentConfig()
    assert config.healthy() == (1.2, .2538)
    assert config.ischemic() == (.2308, .0062)
    assert config.endTime() == 30. and config.dtFine() == .0125
    assert config.radii() == (.3, .2, .15, .1)
    assert config.measuredRegions() == frozenset((BoundaryRegion.EPI, ))
    assert config.inclusions == []
    config.validate()
    assert "geometry" in config.sectionNames()
    assert config.paramsOf("rates") == ["center", "radii"]

def testFromIni():
    config = ExperimentConfig.fromIni(_write("sample.ini", SAMPLE))
    assert config.measuredRegions() == frozenset((BoundaryRegion.EPI,
                                                  BoundaryRegion.ENDO_LV))
    assert config.noiseLevel() == .05
    assert config.healthy() == (1., .2)
    assert config.seed() == 42
    assert [inc.label for inc in config.inclusions] == ["septum", "lv"]
    assert config.inclusions[0] == Inclusion((2.25, 0.), .15)
    config.validate()
    # the views carry the values on
    assert config.ionic().threshold() == .15
    assert config.geometry().lvRadius() == 3.
    assert config.newton().maxIterations() == 20

def testIniRoundTrip():
    config = ExperimentConfig.fromIni(_write("sample.ini", SAMPLE))
    copy = ExperimentConfig.fromIni(config.toIni(
                                    os.path.join(tempDir, "copy.ini")))
    assert copy.listing() == config.listing()
    assert copy.hash() == config.hash()

def testHash():
    config = ExperimentConfig.fromIni(_write("sample.ini", SAMPLE))
    value = config.hash()
    assert len(value) == 64 and int(value, 16) >= 0
    assert ExperimentConfig.fromIni(_write("again.ini", SAMPLE)).hash() == value
    config.configure(threads = 8, vtk = False, plots = False,
                     checkpoints = True)
    assert config.hash() == value
    config.configure(seed = 43)
    assert config.hash() != value
    other = ExperimentConfig.fromIni(_write("sample.ini", SAMPLE))
    other.inclusions[1] = Inclusion((0., 2.25), .12, label = "lv")
    assert other.hash() != value

def testUnknownSection():
    filename = _write("section.ini", "[solvers]\nsolver = cg\n")
    with assert_raises(ConfigurationError):
        ExperimentConfig.fromIni(filename)

def testUnknownKey():
    filename = _write("key.ini", "[measurement]\nregion = EPI\n")
    with assert_raises(ConfigurationError):
        ExperimentConfig.fromIni(filename)
    # keys belong to their own section
    filename = _write("key.ini", "[run]\nregions = EPI\n")
    with assert_raises(ConfigurationError):
        ExperimentConfig.fromIni(filename)

def testInclusionSections():
    for text in ("[inclusion a]\ncenter = 2.25, 0.0\n",
                 "[inclusion a]\ncenter = 2.25, 0.0\nradius = .1\nh = .1\n",
                 "[inclusion a]\ncenter = x, 0.0\nradius = .1\n"):
        with assert_raises(ConfigurationError):
            ExperimentConfig.fromIni(_write("inclusion.ini", text))

def testMalformed():
    try:
        ExperimentConfig.fromIni(_write("bad.ini", "[run]\nthis is no entry\n"))
    except ParseError as e:
        assert e.lineNumber == 2
    else:
        assert False, "no ParseError raised"
    with assert_raises(ParseError):
        ExperimentConfig.fromIni(_write("bad.ini", "seed = 1\n[run]\n"))
    with assert_raises(ParseError):
        ExperimentConfig.fromIni(_write("bad.ini",
                                        "[run]\nseed = 1\nseed = 2\n"))

@raises(FileError)
def testMissingFile():
    ExperimentConfig.fromIni(os.path.join(tempDir, "nothing.ini"))

@raises(ParameterError)
def testOutOfRange():
    ExperimentConfig.fromIni(_write("range.ini",
                                    "[measurement]\nnoiseLevel = 1.5\n"))

def testValidateDiscretization():
    for values in (dict(hFine = .1), dict(hInclusion = .06),
                   dict(dtFine = .05), dict(dtCoarse = .07),
                   dict(ischemic = (1.3, .1)), dict(healthy = (.2, 1.)),
                   dict(radii = (.1, .2, .3)), dict(radii = (.3, .3, .1)),
                   dict(regions = "EPI, APEX")):
        with assert_raises(ConfigurationError):
            ExperimentConfig(**values).validate()

def testValidateInclusions():
    outside = ExperimentConfig(inclusions = [Inclusion((10., 10.), .1)])
    with assert_raises(InclusionError):
        outside.validate()
    nearWall = ExperimentConfig(inclusions = [Inclusion((2.25, 0.), .5)])
    with assert_raises(InclusionError):
        nearWall.validate()
    overlap = ExperimentConfig(inclusions = [Inclusion((0., 2.25), .2),
                                             Inclusion((.3, 2.25), .2)])
    with assert_raises(InclusionError):
        overlap.validate()
    twins = ExperimentConfig(inclusions = [
                Inclusion((0., 2.25), .1, label = "a"),
                Inclusion((0., -2.25), .1, label = "a")])
    with assert_raises(ConfigurationError):
        twins.validate()

def testLoadConfig():
    config = loadConfig(seed = 5, threads = None)
    assert config.seed() == 5 and config.threads() == 1
    config = loadConfig(_write("sample.ini", SAMPLE), threads = 4)
    assert config.seed() == 42 and config.threads() == 4
    with assert_raises(ConfigurationError):
        loadConfig(threads = 0)

# vim: set ts=4 sts=4 sw=4 tw=0:
