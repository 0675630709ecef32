# -*- coding: utf-8 -*-
# fibers/__init__.py

from .laplace import (solveFiberLaplace, fibersFromPotential, FiberField,
                      elementGradients)
from .conductivity import TensorField, buildConductivity, harmonicMeanTensor

# vim: set ts=4 sts=4 sw=4 tw=0:
