# -*- coding: utf-8 -*-
# adjoint/adjoint.py

"""
Backward in time adjoint of the monodomain system linearized at the
unperturbed forward trajectory. The scheme is the transpose of the
linearized implicit Euler step of the forward solver, so the discrete
pairing

    sum_n w_n r^n . M_b du^n = dt sum_n Phi^{n-1} . M_L s^n

holds exactly for the linearized response du to a source s, w_n being
the trapezoid weights of the mismatch functional.
"""

import time
import logging
import numpy as np
import scipy.sparse as sp

from ..fem import assembleStiffness, assembleBoundaryMass, lumpedMass
from ..fem import solveLinear
from ..mesh import BoundaryRegion
from ..monodomain import (AlievPanfilov, reactionEval, AdjointTrajectory,
                          trapezoidWeights)
from ..utils import testfor
from ..utils.error import GridMismatchError

def residualTrace(measured, simulated):
    """r = u - u_meas on the common support."""
    simulated.checkCompatible(measured)
    return simulated.copy(values = simulated.values - measured.values)

def _fullResidual(mesh, residual, regions):
    nodeIds = mesh.regionNodes(regions)
    testfor(np.array_equal(residual.nodeIds, nodeIds), GridMismatchError,
            "Residual trace on {0} nodes does not match the {1} nodes of "
            "region(s) {2}!".format(len(residual.nodeIds), len(nodeIds),
                BoundaryRegion.format(BoundaryRegion.parseSet(regions))))
    full = np.zeros((len(residual.times), mesh.nodeCount))
    full[:, nodeIds] = residual.values
    return full

def solveAdjoint(mesh, K0, forward, residual, regions = BoundaryRegion.EPI,
                 params = None, solverOptions = None):
    """Marches (Phi, Psi) back from zero at the final time. *forward* is
    the unperturbed StateTrajectory, *residual* the TraceSeries u - u_meas
    on the nodes of *regions* with the same time grid."""
    if params is None:
        params = AlievPanfilov()
    forward.checkGrid(residual)
    testfor(forward.nodeCount == mesh.nodeCount, GridMismatchError,
            "Forward trajectory does not belong to the mesh!")
    r = _fullResidual(mesh, residual, regions)
    dt, count = forward.dt, forward.stepCount
    A = assembleStiffness(mesh, K0)
    Mb = assembleBoundaryMass(mesh, regions).tocsr()
    mass = lumpedMass(mesh)
    weights = trapezoidWeights(count, dt)
    phi = np.zeros((count + 1, mesh.nodeCount))
    psi = np.zeros((count + 1, mesh.nodeCount))
    start = time.time()
    for n in range(count, 0, -1):
        f, g, fu, fw, gu, gw = reactionEval(forward.u[n], forward.w[n],
                                            params)
        denom = 1. / dt + gw
        diag = mass / dt + mass * (fu - fw * gu / denom)
        rhs = (mass * phi[n] / dt - mass * gu * psi[n] / (dt * denom)
               + weights[n] / dt * (Mb @ r[n]))
        phi[n-1] = solveLinear((A + sp.diags(diag)).tocsc(), rhs,
                               solverOptions)
        psi[n-1] = (psi[n] / dt - fw * phi[n-1]) / denom
    logging.info("adjoint solve: {0} steps, max |Phi| {1:.3g}, {2:.1f} s"
                 .format(count, np.abs(phi).max(), time.time() - start))
    metadata = dict(meshId = mesh.identity(),
                    regions = BoundaryRegion.format(
                        BoundaryRegion.parseSet(regions)),
                    configHash = residual.configHash)
    return AdjointTrajectory(forward.times, phi, psi, metadata = metadata)

# vim: set ts=4 sts=4 sw=4 tw=0:
