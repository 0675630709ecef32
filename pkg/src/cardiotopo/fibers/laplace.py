# -*- coding: utf-8 -*-
# fibers/laplace.py

"""
Transmural coordinate from a Laplace problem and the fiber frame derived
from its gradient.
"""

import logging
import numpy as np

from ..mesh.mesh import BoundaryRegion
from ..fem import assembleStiffness, solveLinear
from ..utils import testfor, readOnly
from ..utils.error import ConfigurationError, DegenerateGradientError

# endocardium 0, epicardium 1
DEFAULT_DIRICHLET = {BoundaryRegion.ENDO_LV: 0.,
                     BoundaryRegion.ENDO_RV: 0.,
                     BoundaryRegion.EPI: 1.}
# fiber frames need a gradient norm above this
GRADIENT_LIMIT = 1e-12

def dirichletValues(mesh, dirichlet):
    """Node ids and values of the Dirichlet data given per region. Nodes
    on the border of two regions get the value of the region listed last
    in BoundaryRegion order."""
    present = mesh.regionsPresent()
    values = np.full(mesh.nodeCount, np.nan)
    for region in sorted(dirichlet):
        region = BoundaryRegion(region)
        testfor(region in present, ConfigurationError,
                "Boundary region {0} required for the fiber potential is "
                "missing in the mesh!".format(region.name))
        values[mesh.regionNodes(region)] = float(dirichlet[region])
    nodes = np.flatnonzero(np.isfinite(values))
    return nodes, values[nodes]

def solveFiberLaplace(mesh, dirichlet = None):
    """Solves the discrete Laplace equation with the Dirichlet data given
    as a {BoundaryRegion: value} dict, zero on both endocardia and one on
    the epicardium by default. Returns the nodal potential, clamped to the
    range of the boundary data."""
    if dirichlet is None:
        dirichlet = DEFAULT_DIRICHLET
    bNodes, bValues = dirichletValues(mesh, dirichlet)
    A = assembleStiffness(mesh).tocsr()
    interior = np.setdiff1d(np.arange(mesh.nodeCount), bNodes)
    phi = np.zeros(mesh.nodeCount)
    phi[bNodes] = bValues
    if len(interior):
        # lifting of the boundary data
        rhs = -A[interior][:, bNodes] @ bValues
        phi[interior] = solveLinear(A[interior][:, interior].tocsc(), rhs)
    lo, hi = bValues.min(), bValues.max()
    outside = (phi < lo - 1e-12) | (phi > hi + 1e-12)
    if outside.any():
        logging.warning("fiber potential left [{0}, {1}] at {2} node(s) "
                        "(extrema {3:.3g}, {4:.3g}), clamped"
                        .format(lo, hi, outside.sum(), phi.min(), phi.max()))
    phi = np.clip(phi, lo, hi)
    return readOnly(phi)

def elementGradients(mesh, values):
    """(M, 2) constant gradient of a P1 field per triangle."""
    values = np.asarray(values, dtype = float)
    return np.einsum("mid,mi->md", mesh.basisGradients(),
                     values[mesh.triangles])

def rotate(vectors, degrees):
    """Rotates 2D vectors counterclockwise."""
    if degrees == 90:
        return np.column_stack((-vectors[:, 1], vectors[:, 0]))
    if degrees == -90:
        return np.column_stack((vectors[:, 1], -vectors[:, 0]))
    a = np.radians(degrees)
    rot = np.array(((np.cos(a), -np.sin(a)), (np.sin(a), np.cos(a))))
    return vectors @ rot.T

class FiberField(object):
    """Per element unit fiber direction and transmural direction, the
    latter being the fiber rotated clockwise by 90 degrees."""
    _fiber = None
    _normal = None

    def __init__(self, fiber):
        fiber = np.asarray(fiber, dtype = float).reshape(-1, 2)
        fiber = fiber / np.linalg.norm(fiber, axis = 1)[:, None]
        self._fiber = readOnly(fiber)
        self._normal = readOnly(rotate(fiber, -90))

    @classmethod
    def uniform(cls, mesh, fiber = (1., 0.)):
        return cls(np.tile(np.asarray(fiber, dtype = float),
                           (mesh.triangleCount, 1)))

    @property
    def fiber(self):
        return self._fiber

    @property
    def normal(self):
        return self._normal

    def __len__(self):
        return len(self._fiber)

    def frames(self):
        """(M, 2, 2) orthonormal frames, columns fiber and normal."""
        return np.stack((self.fiber, self.normal), axis = 2)

def fibersFromPotential(mesh, phi):
    """The transmural direction is the normalized potential gradient, the
    fiber direction that one rotated counterclockwise by 90 degrees."""
    grads = elementGradients(mesh, phi)
    norm = np.linalg.norm(grads, axis = 1)
    weakest = int(np.argmin(norm))
    if norm[weakest] < GRADIENT_LIMIT:
        raise DegenerateGradientError(weakest, norm[weakest])
    normal = grads / norm[:, None]
    return FiberField(rotate(normal, 90))

# vim: set ts=4 sts=4 sw=4 tw=0:
