# -*- coding: utf-8 -*-
# topo/localize_test.py

import numpy as np
from nose.tools import assert_raises

from .gradient import GradientField
from .localize import locateMinima, localMinima
from ..mesh import rectangleMesh
from ..utils.error import ConfigurationError

def _wells(depthB = .8):
    mesh = rectangleMesh(4., 2., 24, 12)
    a, b = np.array((1., 1.)), np.array((3., 1.))
    dist2 = lambda c: ((mesh.nodes - c)**2).sum(axis = 1)
    values = (-np.exp(-dist2(a) / .05) - depthB * np.exp(-dist2(b) / .05))
    return GradientField(mesh, values, np.ones(mesh.nodeCount, dtype = bool))

def testConstantField():
    mesh = rectangleMesh(2., 2., 6, 6)
    mask = mesh.nodes[:, 1] > .5
    field = GradientField(mesh, np.full(mesh.nodeCount, -1.), mask)
    result = locateMinima(field)
    assert len(result) == 1
    assert result.best.nodeId == np.flatnonzero(mask)[0]
    assert result.value == -1. and result.best.distanceToBest == 0.

def testSingleWell():
    result = locateMinima(_wells())
    assert len(result) == 1
    assert np.allclose(result.center, (1., 1.))
    assert abs(result.value + 1.) < 1e-6
    assert result.best.rank == 1

def testTwoWells():
    field = _wells()
    assert len(localMinima(field)) == 2
    result = locateMinima(field, count = 2, minSeparation = .5)
    assert len(result) == 2
    first, second = result.minima
    assert np.allclose(first.point, (1., 1.))
    assert np.allclose(second.point, (3., 1.))
    assert second.rank == 2 and abs(second.distanceToBest - 2.) < 1e-12
    assert abs(second.value + .8) < 1e-6
    assert np.allclose(result.distances(((1.1, 1.), (3., 1.2))), (.1, .2))
    assert result.rows()[1][:2] == (2, second.nodeId)
    assert len(locateMinima(field, count = 3)) == 2

def testSeparation():
    # the second well closer than the requested separation is skipped
    result = locateMinima(_wells(), count = 2, minSeparation = 2.5)
    assert len(result) == 1

def testMaskRestricts():
    field = _wells()
    masked = GradientField(field.mesh, field.values,
                           field.mesh.nodes[:, 0] > 2.)
    result = locateMinima(masked)
    assert np.allclose(result.center, (3., 1.))

def testSignificance():
    result = locateMinima(_wells())
    assert result.isSignificant(.01)
    assert not result.isSignificant(.5)
    shallow = locateMinima(_wells().scaled(-1.))
    assert not shallow.isSignificant(0.)

def testChecks():
    field = _wells()
    with assert_raises(ConfigurationError):
        locateMinima(field, count = 0)
    empty = GradientField(field.mesh, field.values,
                          np.zeros(field.mesh.nodeCount, dtype = bool))
    with assert_raises(ConfigurationError):
        locateMinima(empty)

# vim: set ts=4 sts=4 sw=4 tw=0:
