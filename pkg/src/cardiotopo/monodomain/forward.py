# -*- coding: utf-8 -*-
# monodomain/forward.py

"""
Monodomain forward solver: P1 elements in space, implicit Euler in time
and Newton's method on every step. The recovery variable is eliminated
node by node inside the Newton iteration since its equation has no
spatial coupling. Reaction terms use the lumped mass.
"""

import time
import logging
import numpy as np
import scipy.sparse as sp

from ..bases.algorithm import AlgorithmBase, Parameter
from ..fem import assembleStiffness, lumpedMass, solveLinear
from ..utils import testfor
from ..utils.error import NewtonError, ConfigurationError, SolverError
from .ionic import AlievPanfilov, reactionEval
from .inclusion import Indicator
from .trajectory import StateTrajectory, timeGrid

# slack of the monitored invariant rectangle
S_MARGIN = 0.02

class NewtonOptions(AlgorithmBase):
    shortName = "Newton"
    parameters = (
        Parameter("tol", 1e-10, valueRange = (0., 1.), exclusive = True,
                  displayName = "maximum norm of the last increment"),
        Parameter("maxIterations", 20, valueRange = (1, 1000),
                  displayName = "iteration cap per time step"),
    )

NewtonOptions.factory()

def _prepare(mesh, K0, K1, chi):
    """Conductivity K_omega per element and the nodal reaction factor."""
    if chi is None:
        chi = Indicator.empty(mesh)
    testfor(len(chi) == mesh.triangleCount, ConfigurationError,
            "Indicator of {0} elements does not fit the mesh ({1})!"
            .format(len(chi), mesh.triangleCount))
    K = K0
    if not chi.isEmpty():
        testfor(K1 is not None, ConfigurationError,
                "An inclusion requires the ischemic conductivity K1!")
        K = K0.select(chi.elements, K1)
    return assembleStiffness(mesh, K), 1. - chi.nodal

def _monitor(params, step, u, w, exits):
    (ulo, uhi), (wlo, whi) = params.rectangle()
    if params.inRectangle(u, w, S_MARGIN):
        return
    if not len(exits):
        logging.warning("state left the invariant rectangle in step {0}: "
                        "u in [{1:.4f}, {2:.4f}], w in [{3:.4f}, {4:.4f}]"
                        .format(step, u.min(), u.max(), w.min(), w.max()))
    exits.append(dict(step = int(step), uMin = float(u.min()),
                      uMax = float(u.max()), wMin = float(w.min()),
                      wMax = float(w.max())))

def newtonStep(step, uPrev, wPrev, A, mass, factor, params, dt, newton,
               solverOptions = None):
    """Solves one implicit Euler step. Returns u, w and the list of
    increment norms."""
    u = uPrev.copy()
    increments = []
    for iteration in range(newton.maxIterations()):
        w, dwdu = params.eliminateW(u, wPrev, dt)
        f, g, fu, fw, gu, gw = reactionEval(u, w, params)
        residual = mass * (u - uPrev) / dt + A @ u + mass * factor * f
        jacobian = A + sp.diags(mass / dt + mass * factor * (fu + fw * dwdu))
        try:
            delta = solveLinear(jacobian.tocsc(), -residual, solverOptions)
        except SolverError as e:
            raise NewtonError(step, e.residual, iteration + 1)
        u += delta
        norm = float(np.abs(delta).max()) if len(delta) else 0.
        increments.append(norm)
        if norm <= newton.tol():
            w, _ = params.eliminateW(u, wPrev, dt)
            return u, w, increments
    raise NewtonError(step, float(np.abs(residual).max()), len(increments))

def solveForward(mesh, K0, K1 = None, chi = None, params = None, u0 = None,
                 w0 = None, dt = 0.05, endTime = 30., newton = None,
                 solverOptions = None, metadata = None):
    """Solves the monodomain system from (u0, w0) up to *endTime*.
    With an indicator *chi*, marked elements conduct by K1 and have no
    reaction. Returns a StateTrajectory whose metadata holds the Newton
    statistics and the invariant rectangle exits."""
    if params is None:
        params = AlievPanfilov()
    if newton is None:
        newton = NewtonOptions()
    u0 = np.zeros(mesh.nodeCount) if u0 is None else np.asarray(u0, float)
    w0 = np.zeros(mesh.nodeCount) if w0 is None else np.asarray(w0, float)
    testfor(u0.shape == w0.shape == (mesh.nodeCount,), ConfigurationError,
            "Initial state does not fit the mesh!")
    testfor(params.inRectangle(u0, w0), ConfigurationError,
            "Initial state outside the invariant rectangle!")
    times = timeGrid(dt, endTime)
    A, factor = _prepare(mesh, K0, K1, chi)
    mass = lumpedMass(mesh)
    u = np.empty((len(times), mesh.nodeCount))
    w = np.empty((len(times), mesh.nodeCount))
    u[0], w[0] = u0, w0
    iterations, increments, exits = [], [], []
    start = time.time()
    for n in range(1, len(times)):
        u[n], w[n], inc = newtonStep(n, u[n-1], w[n-1], A, mass, factor,
                                     params, dt, newton, solverOptions)
        iterations.append(len(inc))
        increments.append(inc)
        _monitor(params, n, u[n], w[n], exits)
        logging.debug("step {0}/{1}: {2} Newton iteration(s), last "
                      "increment {3:.2e}".format(n, len(times) - 1,
                                                 len(inc), inc[-1]))
    info = dict(metadata or {})
    info.update(params = params.values(), meshId = mesh.identity(),
                inclusions = [inc.toDict() for inc in
                              getattr(chi, "inclusions", ())],
                inclusionArea = getattr(chi, "area", 0.),
                newtonIterations = iterations, newtonIncrements = increments,
                rectangleExits = exits)
    logging.info("forward solve: {0} steps, {1:.2f} Newton iterations per "
                 "step, {2} rectangle exit(s), {3:.1f} s"
                 .format(len(times) - 1, np.mean(iterations), len(exits),
                         time.time() - start))
    return StateTrajectory(times, u, w, metadata = info)

def solveLinearizedForward(mesh, K0, trajectory, source, params = None,
                           solverOptions = None):
    """Linearization of the implicit Euler scheme around a stored
    unperturbed trajectory with the recovery variable eliminated.
    *source*: (N+1, nodes) nodal source s^n entering step n as M_L s^n.
    Returns the (N+1, nodes) potential perturbation, zero at t_0."""
    if params is None:
        params = AlievPanfilov()
    dt = trajectory.dt
    source = np.asarray(source, dtype = float)
    testfor(source.shape == trajectory.u.shape, ConfigurationError,
            "Source of shape {0} does not fit the trajectory {1}!"
            .format(source.shape, trajectory.u.shape))
    A = assembleStiffness(mesh, K0)
    mass = lumpedMass(mesh)
    du = np.zeros_like(trajectory.u)
    dw = np.zeros(mesh.nodeCount)
    for n in range(1, trajectory.stepCount + 1):
        f, g, fu, fw, gu, gw = reactionEval(trajectory.u[n], trajectory.w[n],
                                            params)
        denom = 1. / dt + gw
        # dw^n = (dw^{n-1} / dt - gu du^n) / denom
        diag = mass / dt + mass * (fu - fw * gu / denom)
        rhs = (mass * du[n-1] / dt - mass * fw * dw / (dt * denom)
               + mass * source[n])
        du[n] = solveLinear((A + sp.diags(diag)).tocsc(), rhs, solverOptions)
        dw = (dw / dt - gu * du[n]) / denom
    return du

# vim: set ts=4 sts=4 sw=4 tw=0:
