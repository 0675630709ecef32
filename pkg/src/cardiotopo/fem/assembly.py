# -*- coding: utf-8 -*-
# fem/assembly.py

"""
Assembly of the P1 finite element matrices on a triangle mesh.
Element contributions are computed for all triangles at once and summed
into scipy.sparse matrices in compressed row layout.
"""

import numpy as np
import scipy.sparse as sp

from ..utils import testfor, isNumber
from ..utils.error import ConfigurationError
from ..mesh.mesh import BoundaryRegion

# consistent P1 element mass matrix divided by the triangle area
ELEMENT_MASS = np.array(((2., 1., 1.), (1., 2., 1.), (1., 1., 2.))) / 12.

def _scatter(mesh, elementMatrices, local):
    """Sums (M, k, k) element matrices into an (N, N) CSR matrix, *local*
    holds the (M, k) global node indices."""
    k = local.shape[1]
    rows = np.repeat(local, k, axis = 1).ravel()
    cols = np.tile(local, (1, k)).ravel()
    n = mesh.nodeCount
    return sp.coo_matrix((elementMatrices.ravel(), (rows, cols)),
                         shape = (n, n)).tocsr()

def lumpedMass(mesh):
    """Diagonal of the row-sum lumped mass matrix: a third of the area of
    each adjacent triangle."""
    return np.bincount(mesh.triangles.ravel(),
                       weights = np.repeat(mesh.areas() / 3., 3),
                       minlength = mesh.nodeCount)

def assembleMass(mesh, lumped = False):
    """Consistent P1 mass matrix, or its row-sum lumped diagonal."""
    if lumped:
        return sp.diags(lumpedMass(mesh)).tocsr()
    elementMatrices = mesh.areas()[:, None, None] * ELEMENT_MASS[None]
    return _scatter(mesh, elementMatrices, mesh.triangles)

def tensorArray(mesh, K):
    """(M, 2, 2) array of element tensors from a TensorField, an array of
    tensors, a single 2x2 tensor or a scalar. None means identity."""
    if K is None:
        K = 1.
    K = getattr(K, "tensors", K)
    if isNumber(K):
        K = float(K) * np.eye(2)
    K = np.asarray(K, dtype = float)
    if K.shape == (2, 2):
        K = np.broadcast_to(K, (mesh.triangleCount, 2, 2))
    testfor(K.shape == (mesh.triangleCount, 2, 2), ConfigurationError,
            "Expected {0} element tensors, got an array of shape {1}!"
            .format(mesh.triangleCount, K.shape))
    return K

def elementStiffness(mesh, K = None):
    """(M, 3, 3) element stiffness matrices area * grad(phi_i).K.grad(phi_j)"""
    K = tensorArray(mesh, K)
    grads = mesh.basisGradients()
    ke = np.einsum("mid,mde,mje->mij", grads, K, grads)
    ke = .5 * (ke + ke.transpose(0, 2, 1))
    return mesh.areas()[:, None, None] * ke

def assembleStiffness(mesh, K = None):
    """Stiffness matrix of div(K grad u) with natural boundary conditions,
    K per element (see tensorArray)."""
    return _scatter(mesh, elementStiffness(mesh, K), mesh.triangles)

def assembleBoundaryMass(mesh, regions = tuple(BoundaryRegion)):
    """1D P1 mass matrix of the boundary edges of the given regions,
    embedded in the full node numbering."""
    edges = mesh.regionEdges(regions)
    testfor(len(edges) > 0, ConfigurationError,
            "No boundary edges in region(s) {0}!".format(
                BoundaryRegion.format(BoundaryRegion.parseSet(regions))))
    length = np.linalg.norm(mesh.nodes[edges[:, 1]]
                            - mesh.nodes[edges[:, 0]], axis = 1)
    elementMatrices = (length[:, None, None] / 6.
                       * np.array(((2., 1.), (1., 2.)))[None])
    return _scatter(mesh, elementMatrices, edges)

def boundaryLength(mesh, regions = tuple(BoundaryRegion)):
    edges = mesh.regionEdges(regions)
    return float(np.linalg.norm(mesh.nodes[edges[:, 1]]
                                - mesh.nodes[edges[:, 0]], axis = 1).sum())

def isSymmetric(A, tol = 1e-12):
    diff = abs(A - A.T)
    return diff.nnz == 0 or diff.max() <= tol

# vim: set ts=4 sts=4 sw=4 tw=0:
