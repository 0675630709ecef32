# -*- coding: utf-8 -*-
# monodomain/trajectory.py

"""
Time indexed nodal fields of forward and adjoint solves with versioned
HDF5 checkpoints.
"""

import json
import numpy as np

from ..utils import testfor, readOnly
from ..utils.hdf import HDFMixin
from ..utils.error import GridMismatchError, ConfigurationError

def timeGrid(dt, endTime):
    """Uniform grid 0 = t_0 < ... < t_N = endTime, N = endTime / dt has to
    be integral."""
    testfor(dt > 0 and endTime > 0, ConfigurationError,
            "Time step and horizon have to be positive!")
    count = int(round(endTime / dt))
    testfor(count >= 1 and abs(count * dt - endTime) <= 1e-9 * endTime,
            ConfigurationError, "Horizon {0} is not a multiple of the time "
            "step {1}!".format(endTime, dt))
    return dt * np.arange(count + 1)

def trapezoidWeights(count, dt):
    """Weights of the trapezoidal rule on count+1 uniform time points."""
    weights = np.full(count + 1, float(dt))
    weights[[0, -1]] *= .5
    return weights

class Trajectory(HDFMixin):
    """Two nodal fields per time step on a uniform grid. Subclasses name
    the fields by *fieldNames*."""
    fieldNames = None
    _times = None
    _fields = None
    _metadata = None

    def __init__(self, times, first, second, metadata = None):
        times = np.asarray(times, dtype = float)
        testfor(times.ndim == 1 and len(times) >= 2, GridMismatchError,
                "A trajectory needs at least two time points!")
        steps = np.diff(times)
        testfor(np.all(steps > 0) and np.allclose(steps, steps[0],
                                                  rtol = 1e-9, atol = 0.),
                GridMismatchError, "Time grid is not uniform!")
        first, second = np.asarray(first), np.asarray(second)
        testfor(first.shape == second.shape and first.shape[0] == len(times),
                GridMismatchError, "Fields of shape {0} and {1} do not match "
                "{2} time points!".format(first.shape, second.shape,
                                          len(times)))
        self._times = readOnly(times)
        self._fields = (readOnly(first, dtype = float),
                        readOnly(second, dtype = float))
        self._metadata = dict(metadata or {})

    @property
    def times(self):
        return self._times

    @property
    def dt(self):
        return float(self._times[1] - self._times[0])

    @property
    def stepCount(self):
        return len(self._times) - 1

    @property
    def nodeCount(self):
        return self._fields[0].shape[1]

    @property
    def metadata(self):
        return self._metadata

    def field(self, name):
        return self._fields[self.fieldNames.index(name)]

    def checkGrid(self, other):
        """Raises GridMismatchError unless *other* (a trajectory or a time
        array) has the same time grid."""
        times = getattr(other, "times", other)
        testfor(len(times) == len(self.times)
                and np.allclose(times, self.times, rtol = 0., atol = 1e-9),
                GridMismatchError, "Time grids differ: {0} points up to {1} "
                "vs {2} points up to {3}".format(len(self.times),
                    self.times[-1], len(times), times[-1]))
        return self

    def hdfWrite(self, hdf):
        hdf.writeAttributes(dt = self.dt,
                            configHash = self.metadata.get("configHash"),
                            metadata = json.dumps(self.metadata,
                                                  sort_keys = True))
        hdf.writeDataset("times", self.times)
        for name, data in zip(self.fieldNames, self._fields):
            hdf.writeDataset(name, data)

    @classmethod
    def hdfRestore(cls, group):
        metadata = group.attrs.get("metadata", "{}")
        if isinstance(metadata, bytes):
            metadata = metadata.decode("utf8")
        return cls(group["times"][()],
                   *[group[name][()] for name in cls.fieldNames],
                   metadata = json.loads(metadata))

class StateTrajectory(Trajectory):
    """Potential u and recovery variable w of a forward solve."""
    hdfKind = "state"
    fieldNames = ("u", "w")

    @property
    def u(self):
        return self._fields[0]

    @property
    def w(self):
        return self._fields[1]

class AdjointTrajectory(Trajectory):
    """Adjoint states (Phi, Psi) on the forward time grid."""
    hdfKind = "adjoint"
    fieldNames = ("phi", "psi")

    @property
    def phi(self):
        return self._fields[0]

    @property
    def psi(self):
        return self._fields[1]

# vim: set ts=4 sts=4 sw=4 tw=0:
