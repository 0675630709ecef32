# -*- coding: utf-8 -*-
# experiment/synthetic.py

"""
Synthetic measurements: the perturbed problem is solved on the fine
discretization, noise is added to the fine trace, which is then resampled
to the coarse time grid and coarse boundary nodes.
"""

import os
import logging
import numpy as np

from .. import log
from ..datafile import saveTrace, saveVtk, saveMesh
from ..monodomain import timeGrid
from ..utils import testfor
from ..utils.error import ParameterValueError
from .model import HeartModel, coarseMesh, fineMesh
from .provenance import writeProvenance, Manifest

MEASUREMENTS_FILE = "measurements.csv"
# noiseless unperturbed fine model, the inverse crime floor
NULL_FILE = "null.csv"
CONFIG_FILE = "config.ini"

def addNoise(trace, rho, seed = 0):
    """u + rho * eta with eta i.i.d. standard normal per node and time."""
    testfor(0. <= rho <= 1., ParameterValueError,
            "Noise level {0} outside [0, 1]!".format(rho))
    if rho == 0.:
        return trace.copy()
    rng = np.random.default_rng(seed)
    eta = rng.standard_normal(trace.values.shape)
    return trace.copy(values = trace.values + rho * eta)

def resampleTrace(trace, mesh, times, regions):
    """Fine trace on the coarse time grid and the coarse region nodes."""
    nodeIds = mesh.regionNodes(regions)
    return (trace.resampleTimes(times)
                 .resampleNodes(nodeIds, mesh.nodes[nodeIds]))

def generateSynthetic(config, outDir):
    """Writes the measured trace, the null experiment trace, the effective
    config and the provenance sidecar to *outDir*. Returns a dict of the
    written file names."""
    config.validate()
    manifest = Manifest(config)
    regions = config.measuredRegions()
    with log.stage("mesh"):
        fine = fineMesh(config)
        coarse = coarseMesh(config)
    with log.stage("fibers"):
        model = HeartModel(config, fine)
    with log.stage("forward"):
        perturbed = model.forward(config.dtFine(), config.inclusions,
                                  role = "synthetic")
        unperturbed = model.forward(config.dtFine(), role = "null")
    with log.stage("write"):
        times = timeGrid(config.dtCoarse(), config.endTime())
        measured = addNoise(model.trace(perturbed, regions),
                            config.noiseLevel(), config.seed())
        null = model.trace(unperturbed, regions)
        delta = np.abs(model.trace(perturbed, regions).values
                       - null.values).max()
        logging.info("largest trace perturbation by the inclusions: {0:.4g}"
                     .format(delta))
        files = dict(
            measurements = saveTrace(resampleTrace(measured, coarse, times,
                                                   regions),
                                     os.path.join(outDir, MEASUREMENTS_FILE)),
            null = saveTrace(resampleTrace(null, coarse, times, regions),
                             os.path.join(outDir, NULL_FILE)),
            config = config.toIni(os.path.join(outDir, CONFIG_FILE)))
        if config.vtk():
            indicator = model.indicator().elements if len(
                config.inclusions) else np.zeros(fine.triangleCount)
            cellData = model.cellData()
            cellData.update(indicator = indicator)
            pointData = model.pointData()
            pointData.update(uFinal = perturbed.u[-1],
                             wFinal = perturbed.w[-1])
            files["vtk"] = saveVtk(os.path.join(outDir, "fine_model.vtk"),
                                   fine, pointData, cellData, config.hash())
        if config.checkpoints():
            files["mesh"] = saveMesh(fine, os.path.join(outDir, "fine.mesh"))
            files["checkpoint"] = perturbed.hdfStore(
                os.path.join(outDir, "synthetic_state.h5"))
        files["provenance"] = writeProvenance(outDir, config,
            maxTracePerturbation = float(delta),
            fineMesh = dict(nodes = fine.nodeCount,
                            triangles = fine.triangleCount,
                            id = fine.identity()),
            coarseMesh = dict(nodes = coarse.nodeCount,
                              id = coarse.identity()))
        manifest.add(*files.values())
        files["manifest"] = manifest.write(outDir)
    return files

# vim: set ts=4 sts=4 sw=4 tw=0:
