# -*- coding: utf-8 -*-
# adjoint/adjoint_test.py

import numpy as np
from nose.tools import assert_raises

from .adjoint import solveAdjoint, residualTrace
from ..fem import assembleBoundaryMass, lumpedMass
from ..fibers import buildConductivity, FiberField
from ..mesh import rectangleMesh, BoundaryRegion
from ..monodomain import (solveForward, solveLinearizedForward,
                          initialStimulus, TraceSeries, boundaryTrace,
                          trapezoidWeights, timeGrid)
from ..utils.error import GridMismatchError

TAGS = (BoundaryRegion.EPI, BoundaryRegion.ENDO_LV, BoundaryRegion.EPI,
        BoundaryRegion.ENDO_RV)

def _problem(dt = .1, endTime = 2.):
    mesh = rectangleMesh(2., 2., 12, 12, tags = TAGS)
    fibers = FiberField.uniform(mesh, (1., 1.))
    K0 = buildConductivity(fibers, 1.2, .2538)
    u0, w0 = initialStimulus(mesh, (.8, 1.), .5)
    forward = solveForward(mesh, K0, u0 = u0, w0 = w0, dt = dt,
                           endTime = endTime)
    return mesh, K0, forward

def _randomTrace(mesh, forward, regions, seed = 0):
    nodeIds = mesh.regionNodes(regions)
    values = np.random.default_rng(seed).standard_normal(
                                        (len(forward.times), len(nodeIds)))
    return TraceSeries(nodeIds, mesh.nodes[nodeIds], forward.times, values)

def testDuality():
    mesh, K0, forward = _problem()
    assert mesh.nodeCount <= 200 and forward.stepCount == 20
    regions = BoundaryRegion.parseSet("EPI, ENDO_LV")
    residual = _randomTrace(mesh, forward, regions)
    adjoint = solveAdjoint(mesh, K0, forward, residual, regions)
    source = np.random.default_rng(1).standard_normal(forward.u.shape)
    du = solveLinearizedForward(mesh, K0, forward, source)
    Mb = assembleBoundaryMass(mesh, regions)
    weights = trapezoidWeights(forward.stepCount, forward.dt)
    full = np.zeros_like(du)
    full[:, residual.nodeIds] = residual.values
    lhs = sum(weights[n] * full[n] @ (Mb @ du[n])
              for n in range(forward.stepCount + 1))
    mass = lumpedMass(mesh)
    rhs = forward.dt * sum(adjoint.phi[n-1] @ (mass * source[n])
                           for n in range(1, forward.stepCount + 1))
    assert abs(lhs - rhs) <= 1e-8 * max(abs(lhs), abs(rhs))

def testFinalConditionAndLinearity():
    mesh, K0, forward = _problem()
    residual = _randomTrace(mesh, forward, BoundaryRegion.EPI, seed = 4)
    adjoint = solveAdjoint(mesh, K0, forward, residual)
    assert not adjoint.phi[-1].any() and not adjoint.psi[-1].any()
    assert np.abs(adjoint.phi[0]).max() > 0.
    double = solveAdjoint(mesh, K0, forward,
                          residual.copy(values = -2. * residual.values))
    assert np.allclose(double.phi, -2. * adjoint.phi, rtol = 1e-9,
                       atol = 1e-14)
    assert adjoint.metadata["regions"] == "EPI"
    assert adjoint.metadata["meshId"] == mesh.identity()
    adjoint.checkGrid(forward)

def testBackwardCausality():
    mesh, K0, forward = _problem()
    residual = _randomTrace(mesh, forward, BoundaryRegion.EPI, seed = 7)
    half = forward.times <= .5 * forward.times[-1]
    late = residual.values.copy()
    late[half] = 0.
    full = solveAdjoint(mesh, K0, forward, residual)
    lateOnly = solveAdjoint(mesh, K0, forward,
                            residual.copy(values = late))
    # Phi^n only sees residuals after t_n
    after = ~half
    assert np.allclose(lateOnly.phi[after], full.phi[after], rtol = 1e-12,
                       atol = 1e-14)
    assert np.allclose(lateOnly.psi[after], full.psi[after], rtol = 1e-12,
                       atol = 1e-14)
    early = residual.values.copy()
    early[after] = 0.
    earlyOnly = solveAdjoint(mesh, K0, forward,
                             residual.copy(values = early))
    last = np.flatnonzero(half)[-1]
    assert not earlyOnly.phi[last:].any() and not earlyOnly.psi[last:].any()
    assert np.abs(earlyOnly.phi[:last]).max() > 0.

def testZeroResidual():
    mesh, K0, forward = _problem()
    trace = boundaryTrace(forward, mesh)
    adjoint = solveAdjoint(mesh, K0, forward, residualTrace(trace, trace))
    assert not adjoint.phi.any() and not adjoint.psi.any()

def testResidualTrace():
    mesh, K0, forward = _problem()
    simulated = boundaryTrace(forward, mesh)
    measured = simulated.copy(values = simulated.values + .25)
    assert np.allclose(residualTrace(measured, simulated).values, -.25)

def testMismatches():
    mesh, K0, forward = _problem()
    residual = _randomTrace(mesh, forward, BoundaryRegion.EPI)
    with assert_raises(GridMismatchError):
        solveAdjoint(mesh, K0, forward, residual, BoundaryRegion.ENDO_LV)
    coarse = TraceSeries(residual.nodeIds, residual.coords,
                         timeGrid(.2, 2.), residual.values[::2])
    with assert_raises(GridMismatchError):
        solveAdjoint(mesh, K0, forward, coarse)
    other = boundaryTrace(forward, mesh, BoundaryRegion.ENDO_LV)
    with assert_raises(GridMismatchError):
        residualTrace(other, boundaryTrace(forward, mesh))

# vim: set ts=4 sts=4 sw=4 tw=0:
