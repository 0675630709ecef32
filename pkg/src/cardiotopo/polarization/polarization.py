# -*- coding: utf-8 -*-
# polarization/polarization.py

r"""
Closed form polarization tensor of a small disk shaped inclusion with
conductivity K1 in a background of conductivity K0, both constant near
the inclusion and sharing their principal axes.

In the principal frame the substitution
:math:`y = \mathrm{diag}(\kappa_1, \kappa_2)^{-1/2} V^T x` turns the
background into the identity and the disk into an ellipse with semiaxes
:math:`p = 1/\sqrt{\kappa_1}`, :math:`q = 1/\sqrt{\kappa_2}` (up to the
radius, which cancels). An ellipse of contrast
:math:`\hat A = \mathrm{diag}(\lambda_1/\kappa_1, \lambda_2/\kappa_2)` in a
uniform field has the uniform interior field

:math:`\hat M = \mathrm{diag}\left(\frac{p+q}{p+q\hat A_{11}},
\frac{p+q}{q+p\hat A_{22}}\right)`

and the pullback to the original coordinates is :math:`M = V \hat M V^T`
since :math:`\hat M` and the rescaling are both diagonal.
"""

import numpy as np

from ..utils import testfor
from ..utils.error import AssumptionError, ParameterValueError

# relative commutator tolerance
COMMUTE_TOL = 1e-10

def _sharedFrame(K0, K1):
    """Principal axes of two commuting tensor stacks, taken per element
    from the tensor with the larger relative eigenvalue gap. Its
    eigenvectors are unique and diagonalize the other one as well."""
    vals0, vecs0 = np.linalg.eigh(K0)
    vals1, vecs1 = np.linalg.eigh(K1)
    gap0 = (vals0[:, 1] - vals0[:, 0]) / vals0[:, 1]
    gap1 = (vals1[:, 1] - vals1[:, 0]) / vals1[:, 1]
    return np.where((gap0 >= gap1)[:, None, None], vecs0, vecs1)

def polarizationDisk(K0, K1):
    """Polarization tensor (2, 2) of a disk for single 2x2 tensors, or
    (M, 2, 2) for stacks of tensors. *K1* has to commute with *K0*."""
    K0 = np.asarray(K0, dtype = float)
    K1 = np.asarray(K1, dtype = float)
    single = K0.ndim == 2
    K0, K1 = K0.reshape(-1, 2, 2), K1.reshape(-1, 2, 2)
    testfor(K0.shape == K1.shape, ParameterValueError,
            "Tensor stacks of different shape {0} and {1}!"
            .format(K0.shape, K1.shape))
    K0 = .5 * (K0 + K0.transpose(0, 2, 1))
    K1 = .5 * (K1 + K1.transpose(0, 2, 1))
    testfor(np.linalg.eigvalsh(K0).min() > 0.
            and np.linalg.eigvalsh(K1).min() > 0.,
            ParameterValueError, "Conductivity tensors have to be positive "
            "definite!")
    comm = K0 @ K1 - K1 @ K0
    scale = np.linalg.norm(K0, axis = (1, 2)) * np.linalg.norm(K1,
                                                                 axis = (1, 2))
    commNorm = np.linalg.norm(comm, axis = (1, 2)) / scale
    testfor(commNorm.max() <= COMMUTE_TOL, AssumptionError,
            "Healthy and ischemic tensors do not commute (relative "
            "commutator {0:.3g})!".format(commNorm.max()))
    V = _sharedFrame(K0, K1)
    kappa = np.einsum("mdi,mde,mei->mi", V, K0, V)
    lam = np.einsum("mdi,mde,mei->mi", V, K1, V)
    p, q = 1. / np.sqrt(kappa[:, 0]), 1. / np.sqrt(kappa[:, 1])
    contrast = lam / kappa
    hat = np.stack(((p + q) / (p + q * contrast[:, 0]),
                    (p + q) / (q + p * contrast[:, 1])), axis = 1)
    M = np.einsum("mdi,mi,mei->mde", V, hat, V)
    M = .5 * (M + M.transpose(0, 2, 1))
    return M[0] if single else M

def polarizationField(K0, K1):
    """Element wise polarization tensors of two commuting TensorFields."""
    return polarizationDisk(K0.tensors, K1.tensors)

# vim: set ts=4 sts=4 sw=4 tw=0:
