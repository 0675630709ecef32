# -*- coding: utf-8 -*-
# monodomain/stimulus.py

import numpy as np

from ..utils import testfor, readOnly
from ..utils.error import ParameterValueError, ConfigurationError

def bump(s):
    """C2 cosine profile on [0, 1]: one at 0, zero for s >= 1 with
    vanishing first and second derivatives."""
    s = np.clip(np.asarray(s, dtype = float), 0., 1.)
    return np.where(s < 1., np.cos(.5 * np.pi * s)**4, 0.)

def initialStimulus(mesh, site, radius, amplitude = 1.):
    """Initial state (u0, w0) replacing an applied current: u0 is a
    smooth bump of the given amplitude on the disk, w0 is zero."""
    testfor(0. < amplitude <= 1., ParameterValueError,
            "Stimulus amplitude {0} outside (0, 1], the initial state would "
            "leave the invariant rectangle!".format(amplitude))
    testfor(radius > 0., ParameterValueError,
            "Stimulus radius has to be positive!")
    site = np.asarray(site, dtype = float)
    testfor(mesh.contains(site)[0]
            and mesh.boundaryDistance(site)[0] >= radius,
            ConfigurationError, "Stimulus disk around {0} with radius {1} "
            "is not inside the domain!".format(tuple(site), radius))
    dist = np.linalg.norm(mesh.nodes - site, axis = 1)
    u0 = amplitude * bump(dist / radius)
    testfor(u0.max() > 0., ConfigurationError,
            "Stimulus radius {0} does not cover any mesh node!"
            .format(radius))
    return readOnly(u0), readOnly(np.zeros(mesh.nodeCount))

# vim: set ts=4 sts=4 sw=4 tw=0:
