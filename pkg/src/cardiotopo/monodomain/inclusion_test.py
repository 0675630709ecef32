# -*- coding: utf-8 -*-
# monodomain/inclusion_test.py

import numpy as np
from nose.tools import raises, assert_raises

from .inclusion import Inclusion, Indicator, indicatorField, checkInclusions
from ..mesh import rectangleMesh
from ..utils.error import InclusionError

def _mesh():
    return rectangleMesh(4., 4., 80, 80, origin = (-2., -2.))

def testInclusion():
    inc = Inclusion((1, 2), .5, label = "a")
    assert inc.center == (1., 2.) and inc.radius == .5
    assert abs(inc.area() - .25 * np.pi) < 1e-15
    assert inc.contains([(1.2, 2.), (1.6, 2.)]).tolist() == [True, False]
    assert inc.toDict() == dict(label = "a", center = [1., 2.], radius = .5)
    assert inc == Inclusion((1., 2.), .5)
    for radius in (0., -1.):
        with assert_raises(InclusionError):
            Inclusion((0., 0.), radius)
    with assert_raises(InclusionError):
        Inclusion((0., 0., 0.), 1.)

def testIndicatorField():
    mesh = _mesh()
    inc = Inclusion((.3, -.2), .4)
    chi = indicatorField(mesh, [inc])
    assert len(chi) == mesh.triangleCount
    assert set(np.unique(chi.elements)) == set((0., 1.))
    assert abs(chi.area / inc.area() - 1.) < .05
    assert chi.nodal.min() >= 0. and chi.nodal.max() <= 1.
    # nodes deep inside and far outside
    inside = np.linalg.norm(mesh.nodes - inc.center, axis = 1) < .3
    outside = np.linalg.norm(mesh.nodes - inc.center, axis = 1) > .5
    assert np.allclose(chi.nodal[inside], 1.)
    assert np.allclose(chi.nodal[outside], 0.)
    assert chi.inclusions == (inc,)
    assert not chi.isEmpty()

def testEmptyIndicator():
    mesh = _mesh()
    empty = Indicator.empty(mesh)
    assert empty.isEmpty() and empty.area == 0.
    assert indicatorField(mesh, []).isEmpty()

def testTwoInclusions():
    chi = indicatorField(_mesh(), [Inclusion((-1., 0.), .3),
                                   Inclusion((1., 0.), .2)])
    assert abs(chi.area / (.13 * np.pi) - 1.) < .05

def testInclusionChecks():
    mesh = _mesh()
    cases = ([Inclusion((1.6, 0.), .2)],                 # near the boundary
             [Inclusion((3., 0.), .1)],                  # outside
             [Inclusion((0., 0.), .3), Inclusion((.5, 0.), .3)])  # overlap
    for inclusions in cases:
        with assert_raises(InclusionError):
            indicatorField(mesh, inclusions, separation = .3)

@raises(InclusionError)
def testInclusionUnresolved():
    # smaller than a triangle, no centroid inside
    indicatorField(_mesh(), [Inclusion((0., 0.), .005)])

def testCheckInclusionsCallbacks():
    inside = lambda points: np.ones(len(np.atleast_2d(points)), dtype = bool)
    far = lambda points: np.full(len(np.atleast_2d(points)), 10.)
    checkInclusions([Inclusion((0., 0.), 1.), Inclusion((3., 0.), 1.)], .3,
                    far, inside)

# vim: set ts=4 sts=4 sw=4 tw=0:
