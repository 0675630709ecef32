# -*- coding: utf-8 -*-
# fibers/laplace_test.py

import numpy as np
from nose.tools import raises, assert_raises

from .laplace import (solveFiberLaplace, fibersFromPotential, FiberField,
                      elementGradients, rotate)
from ..mesh import rectangleMesh, annulusMesh, BoundaryRegion
from ..utils.error import ConfigurationError, DegenerateGradientError

SIDES = (BoundaryRegion.ENDO_RV, BoundaryRegion.EPI, BoundaryRegion.ENDO_RV,
         BoundaryRegion.ENDO_LV)
LEFT_TO_RIGHT = {BoundaryRegion.ENDO_LV: 0., BoundaryRegion.EPI: 1.}

def testLinearPotential():
    mesh = rectangleMesh(1., .5, 8, 4, tags = SIDES)
    phi = solveFiberLaplace(mesh, LEFT_TO_RIGHT)
    assert np.allclose(phi, mesh.nodes[:, 0], atol = 1e-10)
    fibers = fibersFromPotential(mesh, phi)
    assert np.allclose(fibers.normal, (1., 0.))
    assert np.allclose(fibers.fiber, (0., 1.))

def testAnnulusPotential():
    mesh = annulusMesh(1., 2., .08)
    phi = solveFiberLaplace(mesh, {BoundaryRegion.ENDO_LV: 0.,
                                   BoundaryRegion.EPI: 1.})
    r = np.linalg.norm(mesh.nodes, axis = 1)
    assert np.abs(phi - np.log(r) / np.log(2.)).max() < 1e-2
    assert phi.min() >= 0. and phi.max() <= 1.
    fibers = fibersFromPotential(mesh, phi)
    radial = mesh.centroids() / np.linalg.norm(mesh.centroids(),
                                               axis = 1)[:, None]
    # fibers run circumferentially
    assert np.abs((fibers.fiber * radial).sum(axis = 1)).max() < .1
    assert np.allclose((fibers.fiber * fibers.normal).sum(axis = 1), 0.)

@raises(ConfigurationError)
def testMissingRegion():
    # the default data needs the right endocardium as well
    solveFiberLaplace(annulusMesh(1., 2., .3))

@raises(DegenerateGradientError)
def testConstantPotential():
    mesh = rectangleMesh(1., 1., 4, 4, tags = SIDES)
    phi = solveFiberLaplace(mesh, {BoundaryRegion.ENDO_LV: 1.,
                                   BoundaryRegion.EPI: 1.})
    fibersFromPotential(mesh, phi)

def testFiberField():
    fibers = FiberField([(3., 4.), (0., -2.)])
    assert np.allclose(fibers.fiber, ((.6, .8), (0., -1.)))
    assert np.allclose(fibers.normal, ((.8, -.6), (-1., 0.)))
    frames = fibers.frames()
    assert np.allclose(np.einsum("mdi,mdj->mij", frames, frames), np.eye(2))
    mesh = rectangleMesh(1., 1., 2, 2)
    assert len(FiberField.uniform(mesh, (0., 2.))) == mesh.triangleCount

def testHelpers():
    vectors = np.array(((1., 0.), (0., 1.)))
    assert np.allclose(rotate(vectors, 90), ((0., 1.), (-1., 0.)))
    assert np.allclose(rotate(vectors, 45), rotate(rotate(vectors, 90), -45))
    mesh = rectangleMesh(1., 1., 3, 3)
    grads = elementGradients(mesh, 2. * mesh.nodes[:, 1])
    assert np.allclose(grads, (0., 2.))

# vim: set ts=4 sts=4 sw=4 tw=0:
