# -*- coding: utf-8 -*-
# experiment/__init__.py

from .config import ExperimentConfig, loadConfig
from .model import HeartModel, coarseMesh, fineMesh
from .synthetic import generateSynthetic, addNoise, resampleTrace
from .reconstruct import runReconstruction, ReconstructionResult
from .rates import rateStudy, perturbationNorms, fitSlopes

# vim: set ts=4 sts=4 sw=4 tw=0:
