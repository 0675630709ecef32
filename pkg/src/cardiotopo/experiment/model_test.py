# -*- coding: utf-8 -*-
# experiment/model_test.py

import numpy as np
from nose.plugins.attrib import attr

from .config import ExperimentConfig
from .model import HeartModel, coarseMesh, fineMesh
from ..mesh import BoundaryRegion
from ..monodomain import Inclusion

def _config(**values):
    settings = dict(hCoarse = .2, hFine = .15, hInclusion = .075,
                    dtCoarse = .1, dtFine = .05, endTime = 1.)
    settings.update(values)
    return ExperimentConfig(**settings)

_meshes = dict()

def _coarse(config):
    # the geometry is the same for all tests here
    if "coarse" not in _meshes:
        _meshes["coarse"] = coarseMesh(config)
    return _meshes["coarse"]

def testModel():
    config = _config()
    mesh = _coarse(config)
    assert mesh.regionsPresent() == frozenset(BoundaryRegion)
    model = HeartModel(config, mesh)
    assert model.potential is not None
    assert np.allclose(np.linalg.norm(model.fibers.fiber, axis = 1), 1.)
    assert np.allclose(model.K0.eigenvalues, (1.2, .2538))
    assert np.allclose(model.K1.eigenvalues, (.2308, .0062))
    dist = np.linalg.norm(mesh.nodes - config.site(), axis = 1)
    assert 0. < model.u0.max() <= 1. and model.u0.min() >= 0.
    assert not model.u0[dist >= config.radius()].any()
    assert np.argmax(model.u0) == np.argmin(dist)
    assert not model.w0.any()
    assert set(model.pointData()) == set(("fiberPotential", "u0"))
    assert model.cellData()["eigenvalues"].shape == (mesh.triangleCount, 2)

def testUniformFibers():
    config = _config(fibers = "uniform", fiberDirection = (0., 2.))
    model = HeartModel(config, _coarse(config))
    assert model.potential is None
    assert np.allclose(model.fibers.fiber, (0., 1.))
    assert "fiberPotential" not in model.pointData()

def testBidomainConductivity():
    # harmonic means of (3, 2) and (.3, 1.65) are the healthy defaults
    config = _config(enabled = True)
    model = HeartModel(config, _coarse(config))
    assert np.allclose(model.K0.eigenvalues, (1.2, .2538), atol = 1e-4)

def testForwardAndTrace():
    inclusion = Inclusion((2.25, 0.), .15, "septum")
    config = _config(inclusions = [inclusion], regions = "EPI, ENDO_RV")
    model = HeartModel(config, _coarse(config))
    trajectory = model.forward(config.dtCoarse())
    assert trajectory.stepCount == 10
    assert trajectory.metadata["configHash"] == config.hash()
    trace = model.trace(trajectory)
    assert np.array_equal(trace.nodeIds, model.mesh.regionNodes(
                                                    config.measuredRegions()))
    assert trace.configHash == config.hash()
    assert model.indicator().area() > 0.

def testFineMesh():
    inclusion = Inclusion((2.25, 0.), .15, "septum")
    config = _config(inclusions = [inclusion])
    mesh = fineMesh(config)
    near = np.linalg.norm(mesh.nodes - inclusion.center, axis = 1) < .1
    assert near.sum() >= 3
    assert mesh.nodeCount > _coarse(config).nodeCount

@attr('slow')
def testInvariantRectangleOnVentricle():
    config = _config(hCoarse = .1, hFine = .075, hInclusion = .05,
                     dtCoarse = .1, dtFine = .05, endTime = 30.)
    model = HeartModel(config, coarseMesh(config))
    trajectory = model.forward(config.dtCoarse())
    assert trajectory.stepCount == 300
    (uMin, uMax), (wMin, wMax) = config.ionic().rectangle()
    margin = .02
    assert trajectory.u.min() >= uMin - margin
    assert trajectory.u.max() <= uMax + margin
    assert trajectory.w.min() >= wMin - margin
    assert trajectory.w.max() <= wMax + margin
    assert trajectory.metadata["rectangleExits"] == []

# vim: set ts=4 sts=4 sw=4 tw=0:
