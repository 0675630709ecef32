# -*- coding: utf-8 -*-
# fem/linsolve.py

import logging
import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from ..bases.algorithm import AlgorithmBase, Parameter
from ..utils import testfor
from ..utils.error import SolverError, ConfigurationError

class SolverOptions(AlgorithmBase):
    """Settings of sparse linear solves."""
    shortName = "linear solver"
    parameters = (
        Parameter("method", "direct", valueRange = ("direct", "cg"),
                  displayName = "sparse LU factorization or conjugate "
                                "gradients with diagonal preconditioning"),
        Parameter("tol", 1e-10, valueRange = (0., 1.), exclusive = True,
                  displayName = "relative residual tolerance"),
        Parameter("maxIterations", 10000, valueRange = (1, 10**8),
                  displayName = "iteration cap of the iterative method"),
        Parameter("zeroMean", False,
                  displayName = "singular pure Neumann system, return the "
                                "solution with zero mean over meanNodes"),
    )

SolverOptions.factory()

def relativeResidual(A, x, b):
    bNorm = np.linalg.norm(b)
    res = np.linalg.norm(A @ x - b)
    return res / bNorm if bNorm > 0. else res

def _pinned(A, b, node):
    """Replaces row and column *node* by the identity, for systems with
    constant kernel and compatible right hand side."""
    n = A.shape[0]
    keep = np.ones(n)
    keep[node] = 0.
    D = sp.diags(keep)
    A = (D @ A @ D + sp.diags(1. - keep)).tocsc()
    b = b * keep
    return A, b

def solveLinear(A, b, options = None, meanNodes = None):
    """Solves A x = b and checks the relative residual against
    options.tol. In zero mean mode A may have the constants as kernel and
    *meanNodes*, usually mesh.boundaryNodes(), is mandatory: the returned
    solution has zero mean over these nodes."""
    if options is None:
        options = SolverOptions()
    b = np.asarray(b, dtype = float)
    testfor(A.shape[0] == A.shape[1] == len(b), SolverError,
            "Matrix of shape {0} does not fit a right hand side of length {1}"
            .format(A.shape, len(b)))
    zeroMean = options.zeroMean()
    testfor(not zeroMean or (meanNodes is not None and len(meanNodes)),
            ConfigurationError, "zero mean solves need the nodes to "
            "normalize on")
    if not np.any(b):
        return np.zeros_like(b)
    tol = options.tol()
    if options.method() == "cg":
        diag = A.diagonal()
        precond = sp.diags(np.where(diag != 0., 1. / diag, 1.))
        rhs = b - b.mean() if zeroMean else b
        x, info = spla.cg(A, rhs, rtol = .1 * tol, atol = 0.,
                          maxiter = options.maxIterations(), M = precond)
        if info != 0:
            raise SolverError("conjugate gradients stopped after {0} "
                              "iterations".format(info),
                              relativeResidual(A, x, b))
    else:
        system, rhs = A.tocsc(), b
        if zeroMean:
            system, rhs = _pinned(A, b, 0)
        try:
            x = spla.spsolve(system, rhs)
        except RuntimeError as e: # factor is exactly singular
            raise SolverError("sparse factorization failed: {0}".format(e))
        if not np.all(np.isfinite(x)):
            raise SolverError("sparse factorization produced non-finite "
                              "values, the system is singular")
    if zeroMean:
        x = x - x[meanNodes].mean()
    residual = relativeResidual(A, x, b)
    logging.debug("linear solve ({0}, n = {1}): relative residual {2:.3e}"
                  .format(options.method(), len(b), residual))
    if residual > tol:
        raise SolverError("linear solve missed the tolerance {0:g}"
                          .format(tol), residual)
    return x

# vim: set ts=4 sts=4 sw=4 tw=0:
