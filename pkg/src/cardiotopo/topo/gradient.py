# -*- coding: utf-8 -*-
# topo/gradient.py

"""
Mismatch functional on the measured boundary and the topological
gradient: the first order coefficient of its change when a small
ischemic disk is placed at a point, per unit inclusion area.
"""

import logging
import numpy as np

from ..fem import assembleBoundaryMass
from ..fibers.laplace import elementGradients
from ..mesh import BoundaryRegion
from ..monodomain import AlievPanfilov, trapezoidWeights
from ..polarization import polarizationField
from ..utils import testfor, readOnly
from ..utils.error import ConfigurationError, GridMismatchError

def mismatchJ(simulated, measured, mesh, regions = BoundaryRegion.EPI):
    """J = 1/2 sum_n w_n r^n . M_b r^n with r = simulated - measured on the
    region nodes and trapezoid weights w_n."""
    simulated.checkCompatible(measured)
    nodeIds = mesh.regionNodes(regions)
    testfor(np.array_equal(simulated.nodeIds, nodeIds), GridMismatchError,
            "Traces are not defined on the nodes of region(s) {0}!"
            .format(BoundaryRegion.format(BoundaryRegion.parseSet(regions))))
    Mb = assembleBoundaryMass(mesh, regions).tocsr()[nodeIds][:, nodeIds]
    r = simulated.values - measured.values
    weights = trapezoidWeights(len(r) - 1, simulated.dt)
    energy = np.einsum("ni,ni->n", r, (Mb @ r.T).T)
    return .5 * float((weights * energy).sum())

class GradientField(object):
    """Nodal values G with the mask of admissible inclusion centers."""

    def __init__(self, mesh, values, mask, metadata = None):
        values = np.asarray(values, dtype = float)
        mask = np.asarray(mask, dtype = bool)
        testfor(values.shape == mask.shape == (mesh.nodeCount,),
                GridMismatchError, "Gradient field does not fit the mesh!")
        testfor(np.isfinite(values[mask]).all(), ConfigurationError,
                "Topological gradient is not finite on the mask!")
        self._mesh = mesh
        self._values = readOnly(values)
        self._mask = readOnly(mask)
        self.metadata = dict(metadata or {})

    @property
    def mesh(self):
        return self._mesh

    @property
    def values(self):
        return self._values

    @property
    def mask(self):
        return self._mask

    def maskedNodes(self):
        return np.flatnonzero(self._mask)

    def valueAt(self, points):
        """P1 interpolation of G, NaN outside the mesh."""
        return self._mesh.interpolate(self._values, points)

    def maxAbs(self):
        """Sup norm over the admissible nodes."""
        if not self._mask.any():
            return 0.
        return float(np.abs(self._values[self._mask]).max())

    def scaled(self, factor):
        return GradientField(self._mesh, factor * self._values, self._mask,
                             self.metadata)

def admissibleMask(mesh, separation = 0.3, boundaryDistance = None):
    """Nodes at least *separation* away from the boundary. The distance
    defaults to the one of the mesh polygon."""
    if boundaryDistance is None:
        boundaryDistance = mesh.boundaryDistance
    return np.asarray(boundaryDistance(mesh.nodes)) >= separation

def contrastTensors(mesh, K0, K1):
    """(N, 2, 2) nodal average of M (K0 - K1) per element."""
    K0.checkDominates(K1)
    P = polarizationField(K0, K1) @ (K0.tensors - K1.tensors)
    return (mesh.elementToNodeAverage() @ P.reshape(-1, 4)).reshape(-1, 2, 2)

def nodalGradients(mesh, values):
    """Area weighted nodal average of the element gradients of a P1
    field."""
    return mesh.elementToNodeAverage() @ elementGradients(mesh, values)

def assembleGradientField(mesh, forward, adjoint, K0, K1, params = None,
                          separation = 0.3, mask = None):
    """G(z) = sum_n w_n [grad Phi . M (K0 - K1) grad u + f(u, w) Phi] per
    node, trapezoid weights w_n. *forward* is the unperturbed trajectory,
    *adjoint* the matching adjoint solution."""
    if params is None:
        params = AlievPanfilov()
    testfor(K1 is not None, ConfigurationError,
            "The topological gradient needs the ischemic conductivity!")
    forward.checkGrid(adjoint)
    testfor(forward.nodeCount == adjoint.nodeCount == mesh.nodeCount,
            GridMismatchError, "Forward and adjoint trajectories do not "
            "belong to the mesh!")
    if mask is None:
        mask = admissibleMask(mesh, separation)
    P = contrastTensors(mesh, K0, K1)
    weights = trapezoidWeights(forward.stepCount, forward.dt)
    conduction = np.zeros(mesh.nodeCount)
    reaction = np.zeros(mesh.nodeCount)
    for n, weight in enumerate(weights):
        phi = adjoint.phi[n]
        if not phi.any():
            continue
        gradU = nodalGradients(mesh, forward.u[n])
        gradPhi = nodalGradients(mesh, phi)
        conduction += weight * np.einsum("ni,nij,nj->n", gradPhi, P, gradU)
        reaction += weight * params.f(forward.u[n], forward.w[n]) * phi
    values = conduction + reaction
    logging.info("topological gradient: min {0:.4g}, max {1:.4g} on {2} "
                 "admissible nodes".format(values[mask].min()
                                           if mask.any() else np.nan,
                                           values[mask].max()
                                           if mask.any() else np.nan,
                                           mask.sum()))
    return GradientField(mesh, values, mask,
                         metadata = dict(configHash =
                                         adjoint.metadata.get("configHash")))

# vim: set ts=4 sts=4 sw=4 tw=0:
