# -*- coding: utf-8 -*-
# fibers/conductivity.py

import numpy as np

from ..utils import testfor, readOnly
from ..utils.error import ParameterValueError, AssumptionError

# tolerance of commutator norms
COMMUTE_TOL = 1e-10

class TensorField(object):
    """Symmetric positive definite 2x2 tensor per element. Fields built
    from a fiber frame keep that frame and their eigenvalues."""
    _tensors = None
    _frames = None
    _eigenvalues = None

    def __init__(self, tensors, frames = None, eigenvalues = None):
        tensors = np.asarray(tensors, dtype = float).reshape(-1, 2, 2)
        tensors = .5 * (tensors + tensors.transpose(0, 2, 1))
        self._tensors = readOnly(tensors)
        if frames is not None:
            self._frames = readOnly(frames)
            if eigenvalues is None:
                eigenvalues = np.einsum("mdi,mde,mei->mi", frames, tensors,
                                        frames)
            self._eigenvalues = readOnly(eigenvalues)
        if self.eigenvalues.min() <= 0.:
            raise ParameterValueError("Conductivity tensors have to be "
                                      "positive definite, smallest "
                                      "eigenvalue {0:g}!"
                                      .format(self.eigenvalues.min()))

    @classmethod
    def fromFrames(cls, frames, eigenvalues):
        """K = V diag(eigenvalues) V^T per element."""
        frames = np.asarray(frames, dtype = float)
        eigenvalues = np.asarray(eigenvalues, dtype = float)
        tensors = np.einsum("mdi,mi,mei->mde", frames, eigenvalues, frames)
        return cls(tensors, frames, eigenvalues)

    @classmethod
    def isotropic(cls, count, k = 1.):
        frames = np.broadcast_to(np.eye(2), (count, 2, 2))
        return cls.fromFrames(frames, np.full((count, 2), float(k)))

    @property
    def tensors(self):
        return self._tensors

    @property
    def frames(self):
        """(M, 2, 2) eigenvectors as columns."""
        if self._frames is None:
            self._computeEigen()
        return self._frames

    @property
    def eigenvalues(self):
        if self._eigenvalues is None:
            self._computeEigen()
        return self._eigenvalues

    def _computeEigen(self):
        values, vectors = np.linalg.eigh(self._tensors)
        # fiber first: descending order
        self._eigenvalues = readOnly(values[:, ::-1])
        self._frames = readOnly(vectors[:, :, ::-1])

    def __len__(self):
        return len(self._tensors)

    def kMin(self):
        return float(self.eigenvalues.min())

    def kMax(self):
        return float(self.eigenvalues.max())

    def reconstruct(self):
        """Tensors rebuilt from frames and eigenvalues."""
        return np.einsum("mdi,mi,mei->mde", self.frames, self.eigenvalues,
                         self.frames)

    def commutator(self, other):
        """Largest Frobenius norm of K L - L K over all elements."""
        a, b = self.tensors, getattr(other, "tensors", other)
        comm = a @ b - b @ a
        return float(np.sqrt((comm**2).sum(axis = (1, 2))).max())

    def commutesWith(self, other, tol = COMMUTE_TOL):
        return self.commutator(other) <= tol

    def checkDominates(self, other):
        """Raises AssumptionError unless *other* commutes with this field
        and none of its eigenvalues exceeds the corresponding one of this
        field (a less conductive inclusion)."""
        testfor(self.commutesWith(other), AssumptionError,
                "Healthy and ischemic tensors do not commute "
                "(commutator {0:.3g})!".format(self.commutator(other)))
        inFrame = np.einsum("mdi,mde,mei->mi", self.frames, other.tensors,
                            self.frames)
        excess = (inFrame - self.eigenvalues).max()
        testfor(excess <= 1e-12 * self.kMax(), AssumptionError,
                "Ischemic conductivity exceeds the healthy one by {0:.3g} "
                "along a principal axis!".format(excess))
        return self

    def select(self, mask, other):
        """Element wise: tensors of *other* where mask is set, own
        tensors elsewhere."""
        mask = np.asarray(mask, dtype = bool)
        return TensorField(np.where(mask[:, None, None], other.tensors,
                                    self.tensors))

    def nodal(self, mesh):
        """(N, 2, 2) area weighted average of the element tensors at the
        nodes."""
        avg = mesh.elementToNodeAverage()
        return (avg @ self.tensors.reshape(-1, 4)).reshape(-1, 2, 2)

def buildConductivity(fibers, kParallel, kTransverse):
    """K = kParallel e_f (x) e_f + kTransverse e_n (x) e_n per element."""
    testfor(kTransverse > 0, ParameterValueError,
            "Transverse conductivity has to be positive, got {0}!"
            .format(kTransverse))
    testfor(kParallel >= kTransverse, ParameterValueError,
            "Conductivity along fibers ({0}) below the transverse one ({1})!"
            .format(kParallel, kTransverse))
    values = np.tile((float(kParallel), float(kTransverse)), (len(fibers), 1))
    return TensorField.fromFrames(fibers.frames(), values)

def harmonicMeanTensor(De, Di):
    """K = De (De + Di)^-1 Di per element for commuting tensor fields,
    its eigenvalues are the harmonic means le li / (le + li)."""
    testfor(len(De) == len(Di), AssumptionError,
            "Tensor fields of different length {0} and {1}!"
            .format(len(De), len(Di)))
    testfor(De.commutesWith(Di), AssumptionError,
            "Extra- and intracellular tensors do not commute "
            "(commutator {0:.3g})!".format(De.commutator(Di)))
    frames = De.frames
    le = np.einsum("mdi,mde,mei->mi", frames, De.tensors, frames)
    li = np.einsum("mdi,mde,mei->mi", frames, Di.tensors, frames)
    return TensorField.fromFrames(frames, le * li / (le + li))

# vim: set ts=4 sts=4 sw=4 tw=0:
