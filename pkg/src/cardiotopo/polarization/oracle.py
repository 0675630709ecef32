# -*- coding: utf-8 -*-
# polarization/oracle.py

"""
Brute force polarization tensor: finite element solutions of the
transmission problem around a resolved disk in a large box.
"""

import logging
import numpy as np

from ..mesh import boxWithDisk
from ..fem import assembleStiffness, solveLinear
from ..fibers.laplace import elementGradients
from ..utils import testfor
from ..utils.error import OracleError

# disk elements across the diameter
MIN_RESOLUTION = 16
# box edge per disk radius
MIN_BOX = 20.

def _transmissionSolve(mesh, A, j):
    """v = x_j on the box boundary, discrete K_eps harmonic inside."""
    boundary = mesh.boundaryNodes()
    interior = np.setdiff1d(np.arange(mesh.nodeCount), boundary)
    v = np.zeros(mesh.nodeCount)
    v[boundary] = mesh.nodes[boundary, j]
    rhs = -A[interior][:, boundary] @ v[boundary]
    v[interior] = solveLinear(A[interior][:, interior].tocsc(), rhs)
    return v

def transmissionOracle(K0, K1, radius = 1., boxSize = None, hOracle = None):
    """M_ij: mean over the disk of the i-th derivative of the transmission
    solution with far field x_j. Defaults: box of 24 radii, 20 elements
    across the diameter."""
    if boxSize is None:
        boxSize = 24. * radius
    if hOracle is None:
        hOracle = radius / 10.
    testfor(boxSize >= MIN_BOX * radius * (1. - 1e-12), OracleError,
            "Box of size {0:g} too small for a disk of radius {1:g}, at "
            "least {2:g} required!".format(boxSize, radius,
                                           MIN_BOX * radius))
    testfor(hOracle <= 2. * radius / MIN_RESOLUTION * (1. + 1e-12),
            OracleError, "Mesh size {0:g} does not resolve the disk, at most "
            "{1:g} required!".format(hOracle,
                                     2. * radius / MIN_RESOLUTION))
    K0 = np.asarray(K0, dtype = float).reshape(2, 2)
    K1 = np.asarray(K1, dtype = float).reshape(2, 2)
    mesh = boxWithDisk(boxSize, radius, h = min(boxSize / 30., 8. * hOracle),
                       hDisk = hOracle)
    disk = mesh.elementMarkers == 1
    tensors = np.where(disk[:, None, None], K1[None], K0[None])
    A = assembleStiffness(mesh, tensors).tocsr()
    areas = mesh.areas()[disk]
    M = np.empty((2, 2))
    for j in range(2):
        grad = elementGradients(mesh, _transmissionSolve(mesh, A, j))[disk]
        M[:, j] = (areas[:, None] * grad).sum(axis = 0) / areas.sum()
    logging.debug("transmission oracle on {0}: M = {1}"
                  .format(mesh, M.tolist()))
    return M

# vim: set ts=4 sts=4 sw=4 tw=0:
