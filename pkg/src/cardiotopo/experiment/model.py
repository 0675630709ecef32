# -*- coding: utf-8 -*-
# experiment/model.py

"""
The discretized heart model of one mesh: fibers, conductivities, initial
state and the solves on it, set up from an ExperimentConfig.
"""

import logging
import numpy as np

from ..fibers import (solveFiberLaplace, fibersFromPotential, FiberField,
                      buildConductivity, harmonicMeanTensor)
from ..mesh import generateVentricleSection, RefinementZone
from ..monodomain import (initialStimulus, indicatorField, solveForward,
                          boundaryTrace)
from ..utils.error import ConfigurationError

# refinement zones reach this many inclusion radii
ZONE_FACTOR = 2.

def coarseMesh(config):
    return generateVentricleSection(config.geometry(), config.hCoarse(),
                                    separation = config.separation(),
                                    name = "coarse ventricle")

def fineMesh(config, inclusions = None, radii = None):
    """Fine mesh, refined around the inclusions. With *radii* given, each
    inclusion center gets a constrained circle per radius."""
    if inclusions is None:
        inclusions = config.inclusions
    zones = []
    for inc in inclusions:
        zoneRadii = radii if radii is not None else (inc.radius, )
        zones.append(RefinementZone(inc.center, zoneRadii,
                                    config.hInclusion()))
    return generateVentricleSection(config.geometry(), config.hFine(),
                                    refinement = zones,
                                    separation = config.separation(),
                                    name = "fine ventricle")

class HeartModel(object):
    """Mesh with fibers, healthy (K0) and ischemic (K1) conductivity and
    the initial state."""

    def __init__(self, config, mesh):
        self.config = config
        self.mesh = mesh
        self.fibers, self.potential = self._fibers()
        self.K0, self.K1 = self._conductivities()
        self.u0, self.w0 = initialStimulus(mesh, config.site(),
                                           config.radius(),
                                           config.amplitude())

    def _fibers(self):
        if self.config.fibers() == "uniform":
            return (FiberField.uniform(self.mesh,
                                       self.config.fiberDirection()), None)
        potential = solveFiberLaplace(self.mesh)
        return fibersFromPotential(self.mesh, potential), potential

    def _conductivities(self):
        config = self.config
        if config.enabled():
            De = buildConductivity(self.fibers, *config.extracellular())
            Di = buildConductivity(self.fibers, *config.intracellular())
            K0 = harmonicMeanTensor(De, Di)
            logging.info("healthy conductivity from the bidomain tensors: "
                         "{0}".format(K0.eigenvalues[0].tolist()))
        else:
            K0 = buildConductivity(self.fibers, *config.healthy())
        K1 = buildConductivity(self.fibers, *config.ischemic())
        K0.checkDominates(K1)
        return K0, K1

    def indicator(self, inclusions = None):
        if inclusions is None:
            inclusions = self.config.inclusions
        return indicatorField(self.mesh, inclusions,
                              self.config.separation())

    def forward(self, dt, inclusions = (), **metadata):
        """Forward solve, perturbed by *inclusions* if any."""
        chi = self.indicator(inclusions) if len(inclusions) else None
        metadata.setdefault("configHash", self.config.hash())
        return solveForward(self.mesh, self.K0, self.K1, chi,
                            params = self.config.ionic(), u0 = self.u0,
                            w0 = self.w0, dt = dt,
                            endTime = self.config.endTime(),
                            newton = self.config.newton(),
                            solverOptions = self.config.solverOptions(),
                            metadata = metadata)

    def trace(self, trajectory, regions = None):
        if regions is None:
            regions = self.config.measuredRegions()
        missing = set(regions) - self.mesh.regionsPresent()
        if missing:
            raise ConfigurationError("Measured region(s) {0} missing in the "
                                     "mesh!".format(", ".join(r.name for r
                                                              in missing)))
        return boundaryTrace(trajectory, self.mesh, regions,
                             configHash = self.config.hash())

    def pointData(self):
        """Nodal fields describing the model, for VTK output."""
        data = dict()
        if self.potential is not None:
            data["fiberPotential"] = self.potential
        data["u0"] = self.u0
        return data

    def cellData(self):
        return dict(fiber = self.fibers.fiber, normal = self.fibers.normal,
                    eigenvalues = self.K0.eigenvalues)

# vim: set ts=4 sts=4 sw=4 tw=0:
