# -*- coding: utf-8 -*-
# experiment/reconstruct.py

"""
One shot reconstruction on the coarse discretization: unperturbed forward
solve, adjoint driven by the boundary residual, topological gradient and
its minima. The same pipeline runs on the noiseless null experiment to
quantify the inverse crime floor the minima are judged against.
"""

import os
import logging

from .. import log
from ..adjoint import solveAdjoint, residualTrace
from ..datafile import CsvFile, CsvTable, loadTrace, saveVtk
from ..topo import (mismatchJ, assembleGradientField, locateMinima,
                    admissibleMask, LocalizationResult)
from ..utils import atomicOpen, formatFloat
from .model import HeartModel, coarseMesh
from .plotting import plotGradientField
from .provenance import checkProvenance, Manifest
from .synthetic import MEASUREMENTS_FILE, NULL_FILE

# inclusion radius where the first order expansion stops being reliable, cm
ASYMPTOTIC_RADIUS = 0.3

class ReconstructionResult(object):
    """Localization with the gradient fields and mismatch values of the
    measurement and of the null experiment."""

    def __init__(self, localization, field, floorField, J, floorJ,
                 confidenceFactor):
        self.localization = localization
        self.field = field
        self.floorField = floorField
        self.J = J
        self.floorJ = floorJ
        self.floor = floorField.maxAbs()
        self.confidenceFactor = confidenceFactor
        self.lowConfidence = not localization.isSignificant(
            self.floor, confidenceFactor)

    def report(self, config):
        best = self.localization.best
        lines = [
            "config_hash: {0}".format(config.hash()),
            "measured regions: {0}".format(", ".join(
                r.name for r in sorted(config.measuredRegions()))),
            "J: {0}".format(formatFloat(self.J)),
            "J_floor: {0}".format(formatFloat(self.floorJ)),
            "G_floor (max |G| of the null experiment): {0}"
                .format(formatFloat(self.floor)),
            "minimum: G = {0} at ({1}, {2}), node {3}".format(
                formatFloat(best.value), formatFloat(best.point[0]),
                formatFloat(best.point[1]), best.nodeId),
            "confidence: {0}".format("LOW-CONFIDENCE" if self.lowConfidence
                                     else "significant"),
        ]
        if self.lowConfidence:
            lines.append("  no minimum deeper than {0:g} times the floor, no "
                         "inclusion detected".format(self.confidenceFactor))
        for minimum in self.localization.minima[1:]:
            lines.append("further minimum #{0}: G = {1} at ({2}, {3})".format(
                minimum.rank, formatFloat(minimum.value),
                formatFloat(minimum.point[0]), formatFloat(minimum.point[1])))
        for inc, dist in zip(config.inclusions, self.localization.distances(
                                 [inc.center for inc in config.inclusions])):
            lines.append("true inclusion '{0}' at ({1}, {2}), r = {3}: "
                         "nearest minimum {4:.4f} cm away".format(inc.label,
                             inc.center[0], inc.center[1], inc.radius, dist))
            if inc.radius > ASYMPTOTIC_RADIUS:
                lines.append("  radius above {0} cm, the minimizer is an "
                             "initial guess only".format(ASYMPTOTIC_RADIUS))
        return "\n".join(lines) + "\n"

def _gradient(model, trajectory, simulated, measured, mask):
    config = model.config
    residual = residualTrace(measured, simulated)
    with log.stage("adjoint"):
        adjoint = solveAdjoint(model.mesh, model.K0, trajectory, residual,
                               config.measuredRegions(), config.ionic(),
                               config.solverOptions())
    with log.stage("gradient"):
        field = assembleGradientField(model.mesh, trajectory, adjoint,
                                      model.K0, model.K1, config.ionic(),
                                      mask = mask)
    return field, adjoint

def writeGradient(field, filename, configHash):
    nodes = field.mesh.nodes
    rows = [(i, float(nodes[i, 0]), float(nodes[i, 1]),
             float(field.values[i])) for i in range(field.mesh.nodeCount)]
    return CsvFile.writeData(filename, CsvTable(("node_id", "x", "y", "G"),
                             rows, dict(config_hash = configHash)))

def writeLocalization(result, filename, configHash):
    return CsvFile.writeData(filename, CsvTable(LocalizationResult.header,
                             result.rows(), dict(config_hash = configHash)))

def runReconstruction(config, dataDir, outDir = None):
    """Reconstructs from the measurements in *dataDir* written for the
    same configuration, results go to *outDir* (default: *dataDir*)."""
    if outDir is None:
        outDir = dataDir
    config.validate()
    configHash = config.hash()
    checkProvenance(dataDir, configHash)
    manifest = Manifest(config)
    measured = loadTrace(os.path.join(dataDir, MEASUREMENTS_FILE),
                         configHash)
    null = loadTrace(os.path.join(dataDir, NULL_FILE), configHash)
    with log.stage("mesh"):
        mesh = coarseMesh(config)
        mask = admissibleMask(mesh, config.separation(),
                              config.geometry().boundaryDistance)
    with log.stage("fibers"):
        model = HeartModel(config, mesh)
    with log.stage("forward"):
        trajectory = model.forward(config.dtCoarse(), role = "reconstruction")
        simulated = model.trace(trajectory)
    field, adjoint = _gradient(model, trajectory, simulated, measured, mask)
    floorField, _ = _gradient(model, trajectory, simulated, null, mask)
    regions = config.measuredRegions()
    with log.stage("localize"):
        localization = locateMinima(field, config.minimaCount(),
                                    config.minSeparation())
        result = ReconstructionResult(
            localization, field, floorField,
            mismatchJ(simulated, measured, mesh, regions),
            mismatchJ(simulated, null, mesh, regions),
            config.confidenceFactor())
    if result.lowConfidence:
        logging.warning("minimum G = {0:.4g} is not significant against the "
                        "floor {1:.4g}, LOW-CONFIDENCE"
                        .format(localization.value, result.floor))
    else:
        logging.info("inclusion located at ({0:.4f}, {1:.4f})"
                     .format(*localization.center))
    with log.stage("write"):
        path = lambda name: os.path.join(outDir, name)
        manifest.add(writeGradient(field, path("gradient.csv"), configHash),
                     writeLocalization(localization, path("localization.csv"),
                                       configHash))
        with atomicOpen(path("report.txt"), 'w') as fd:
            fd.write(result.report(config))
        manifest.add(path("report.txt"))
        if config.vtk():
            pointData = dict(G = field.values, floorG = floorField.values,
                             mask = field.mask, u = trajectory.u[-1],
                             Phi = adjoint.phi[0])
            pointData.update(model.pointData())
            manifest.add(saveVtk(path("reconstruction.vtk"), mesh, pointData,
                                 model.cellData(), configHash))
        if config.plots():
            manifest.add(plotGradientField(field, path("gradient.png"),
                                           config.inclusions, localization,
                                           title = "topological gradient"))
        manifest.write(outDir)
    return result

# vim: set ts=4 sts=4 sw=4 tw=0:
