# -*- coding: utf-8 -*-
# experiment/rates.py

"""
Convergence of the perturbation for shrinking inclusions: norms of the
potential difference against the inclusion area with fitted log-log
slopes, and the ratio of the actual change of the mismatch to its first
order prediction by the topological gradient.
"""

import os
import logging
import multiprocessing
import numpy as np

from .. import log
from ..adjoint import solveAdjoint, residualTrace
from ..datafile import CsvFile, CsvTable
from ..fem import assembleMass, assembleStiffness, SolverOptions
from ..monodomain import (AlievPanfilov, Inclusion, NewtonOptions,
                          indicatorField, solveForward, trapezoidWeights,
                          boundaryTrace)
from ..topo import mismatchJ, assembleGradientField
from ..utils import testfor, atomicOpen, formatFloat
from ..utils.error import ConfigurationError
from .model import HeartModel, fineMesh
from .plotting import plotRates
from .provenance import Manifest

HEADER = ("radius", "area", "norm_linf_l2", "norm_l2_h1", "norm_l2_l2", "J",
          "ratio")
NORMS = ("norm_linf_l2", "norm_l2_h1", "norm_l2_l2")

def _perturbedSolve(task):
    """Worker: one perturbed forward solve from plain arguments."""
    chi = indicatorField(task["mesh"], [task["inclusion"]],
                         task["separation"])
    trajectory = solveForward(task["mesh"], task["K0"], task["K1"], chi,
                              params = AlievPanfilov(**task["ionic"]),
                              u0 = task["u0"], w0 = task["w0"],
                              dt = task["dt"], endTime = task["endTime"],
                              newton = NewtonOptions(**task["newton"]),
                              solverOptions = SolverOptions(**task["solver"]),
                              metadata = dict(
                                  radius = task["inclusion"].radius))
    return trajectory, chi.area

def perturbationNorms(mesh, difference, dt):
    """L-infinity(L2), L2(H1) and L2(L2) space-time norms of a nodal field
    sequence, trapezoid rule in time."""
    M = assembleMass(mesh).tocsr()
    S = assembleStiffness(mesh).tocsr()
    l2 = np.einsum("ni,ni->n", difference, (M @ difference.T).T)
    h1 = l2 + np.einsum("ni,ni->n", difference, (S @ difference.T).T)
    weights = trapezoidWeights(len(difference) - 1, dt)
    return dict(norm_linf_l2 = float(np.sqrt(l2.max())),
                norm_l2_h1 = float(np.sqrt((weights * h1).sum())),
                norm_l2_l2 = float(np.sqrt((weights * l2).sum())))

def fitSlopes(areas, norms):
    """Least squares (slope, offset) of log(norm) over log(area)."""
    logArea = np.log(np.asarray(areas, dtype = float))
    return dict((name, tuple(float(c) for c in
                             np.polyfit(logArea, np.log(values), 1)))
                for name, values in norms.items())

def rateStudy(config, radii = None, outDir = None, threads = None):
    """Solves the unperturbed and the perturbed problems for every radius
    on the same fine discretization. Returns the table rows and the
    fitted slopes, writes CSV, summary and plot to *outDir* if given."""
    if radii is None:
        radii = config.radii()
    radii = [float(r) for r in radii]
    testfor(len(radii) >= 3, ConfigurationError,
            "A rate study needs at least three radii!")
    testfor(all(a > b > 0 for a, b in zip(radii[:-1], radii[1:])),
            ConfigurationError, "Radii have to be strictly decreasing!")
    config.validate()
    threads = threads or config.threads()
    center = config.center()
    inclusions = [Inclusion(center, r, label = "r{0:g}".format(r))
                  for r in radii]
    with log.stage("mesh"):
        mesh = fineMesh(config, inclusions[:1], radii = radii)
    with log.stage("fibers"):
        model = HeartModel(config, mesh)
    tasks = [dict(mesh = mesh, K0 = model.K0, K1 = model.K1, u0 = model.u0,
                  w0 = model.w0, dt = config.dtFine(),
                  endTime = config.endTime(), inclusion = inc,
                  separation = config.separation(),
                  ionic = config.ionic().values(),
                  newton = config.newton().values(),
                  solver = config.solverOptions().values())
             for inc in inclusions]
    with log.stage("forward"):
        unperturbed = model.forward(config.dtFine(), role = "rates")
        if threads > 1:
            with multiprocessing.Pool(min(threads, len(tasks))) as pool:
                results = pool.map(_perturbedSolve, tasks)
        else:
            results = [_perturbedSolve(task) for task in tasks]
    regions = config.measuredRegions()
    trace = lambda traj: boundaryTrace(traj, mesh, regions)
    # the largest inclusion provides the measurements
    measured = trace(results[0][0])
    unperturbedTrace = trace(unperturbed)
    with log.stage("adjoint"):
        adjoint = solveAdjoint(mesh, model.K0, unperturbed,
                               residualTrace(measured, unperturbedTrace),
                               regions, config.ionic(),
                               config.solverOptions())
    with log.stage("gradient"):
        field = assembleGradientField(mesh, unperturbed, adjoint, model.K0,
                                      model.K1, config.ionic(),
                                      separation = config.separation())
        gradientAtCenter = float(field.valueAt(center)[0])
    J0 = mismatchJ(unperturbedTrace, measured, mesh, regions)
    rows, norms = [], dict((name, []) for name in NORMS)
    for radius, (trajectory, area) in zip(radii, results):
        values = perturbationNorms(mesh, trajectory.u - unperturbed.u,
                                   config.dtFine())
        J = mismatchJ(trace(trajectory), measured, mesh, regions)
        ratio = (J - J0) / (area * gradientAtCenter)
        rows.append((radius, area) + tuple(values[n] for n in NORMS)
                    + (J, ratio))
        for name in NORMS:
            norms[name].append(values[name])
        logging.info("radius {0:g}: area {1:.4g}, L2(Q_T) {2:.4g}, ratio "
                     "{3:.4f}".format(radius, area, values["norm_l2_l2"],
                                      ratio))
    areas = [row[1] for row in rows]
    slopes = fitSlopes(areas, norms)
    if outDir is not None:
        with log.stage("write"):
            writeRates(config, rows, slopes, J0, gradientAtCenter, areas,
                       norms, outDir)
    return rows, slopes

def writeRates(config, rows, slopes, J0, gradientAtCenter, areas, norms,
               outDir):
    manifest = Manifest(config)
    path = lambda name: os.path.join(outDir, name)
    manifest.add(CsvFile.writeData(path("rates.csv"), CsvTable(HEADER, rows,
                     dict(config_hash = config.hash()))))
    lines = ["config_hash: {0}".format(config.hash()),
             "center: ({0}, {1})".format(*config.center()),
             "J(0): {0}".format(formatFloat(J0)),
             "G at the center: {0}".format(formatFloat(gradientAtCenter))]
    lines += ["slope of {0} over the area: {1:.4f}".format(name,
                                                           slopes[name][0])
              for name in NORMS]
    with atomicOpen(path("rates_summary.txt"), 'w') as fd:
        fd.write("\n".join(lines) + "\n")
    manifest.add(path("rates_summary.txt"))
    if config.plots():
        manifest.add(plotRates(areas, norms, slopes, path("rates.png")))
    manifest.write(outDir)

# vim: set ts=4 sts=4 sw=4 tw=0:
