# -*- coding: utf-8 -*-
# fem/__init__.py

from .assembly import (assembleMass, assembleStiffness, assembleBoundaryMass,
                       lumpedMass, elementStiffness, boundaryLength,
                       tensorArray, isSymmetric)
from .linsolve import solveLinear, SolverOptions, relativeResidual

# vim: set ts=4 sts=4 sw=4 tw=0:
