# -*- coding: utf-8 -*-
# monodomain/trace.py

"""
Boundary traces: the potential on the nodes of a measured boundary part,
for every time step.
"""

import numpy as np
from scipy.spatial import cKDTree

from ..mesh import BoundaryRegion
from ..utils import testfor, readOnly, isFinite
from ..utils.error import GridMismatchError, ConfigurationError

class TraceSeries(object):
    """Potential values (times, nodes) on sorted boundary node ids with
    their coordinates. *configHash* names the configuration the values
    were produced with."""
    _nodeIds = None
    _coords = None
    _times = None
    _values = None
    configHash = None

    def __init__(self, nodeIds, coords, times, values, configHash = None):
        nodeIds = np.asarray(nodeIds, dtype = np.int64)
        order = np.argsort(nodeIds, kind = "stable")
        values = np.asarray(values, dtype = float)
        testfor(values.shape == (len(times), len(nodeIds)), GridMismatchError,
                "Trace values of shape {0} do not fit {1} times and {2} "
                "nodes!".format(values.shape, len(times), len(nodeIds)))
        testfor(len(np.unique(nodeIds)) == len(nodeIds), GridMismatchError,
                "Trace node ids are not unique!")
        testfor(isFinite(values), ConfigurationError,
                "Trace values have to be finite!")
        times = np.asarray(times, dtype = float)
        if len(times) > 1:
            steps = np.diff(times)
            testfor(np.all(steps > 0) and np.allclose(steps, steps[0],
                        rtol = 1e-9, atol = 0.), GridMismatchError,
                    "Trace time grid is not uniform!")
        self._nodeIds = readOnly(nodeIds[order])
        self._coords = readOnly(np.reshape(coords, (-1, 2))[order],
                                dtype = float)
        self._times = readOnly(times)
        self._values = readOnly(values[:, order])
        self.configHash = configHash

    @property
    def nodeIds(self):
        return self._nodeIds

    @property
    def coords(self):
        return self._coords

    @property
    def times(self):
        return self._times

    @property
    def values(self):
        return self._values

    @property
    def dt(self):
        return float(self._times[1] - self._times[0])

    def copy(self, values = None, configHash = None):
        """Same support, optionally other values or another hash."""
        return TraceSeries(self.nodeIds, self.coords, self.times,
                           self.values if values is None else values,
                           configHash or self.configHash)

    def checkCompatible(self, other):
        """Raises GridMismatchError unless node sets and time grids agree."""
        testfor(np.array_equal(self.nodeIds, other.nodeIds),
                GridMismatchError, "Traces are defined on different node "
                "sets ({0} vs {1} nodes)".format(len(self.nodeIds),
                                                 len(other.nodeIds)))
        testfor(len(self.times) == len(other.times)
                and np.allclose(self.times, other.times, rtol = 0.,
                                atol = 1e-9), GridMismatchError,
                "Traces have different time grids ({0} vs {1} points)"
                .format(len(self.times), len(other.times)))
        return self

    def restrict(self, nodeIds):
        """Trace on a subset of its nodes."""
        nodeIds = np.unique(nodeIds)
        index = np.searchsorted(self.nodeIds, nodeIds)
        testfor(np.all(index < len(self.nodeIds))
                and np.array_equal(self.nodeIds[np.minimum(index,
                    len(self.nodeIds) - 1)], nodeIds), GridMismatchError,
                "Restriction to nodes which are not part of the trace!")
        return TraceSeries(nodeIds, self.coords[index], self.times,
                           self.values[:, index], self.configHash)

    def resampleTimes(self, times):
        """Linear interpolation in time onto *times* within the grid."""
        times = np.asarray(times, dtype = float)
        testfor(times.min() >= self.times[0] - 1e-9
                and times.max() <= self.times[-1] + 1e-9, GridMismatchError,
                "Target grid [{0}, {1}] exceeds the trace grid [{2}, {3}]!"
                .format(times.min(), times.max(), self.times[0],
                        self.times[-1]))
        values = np.empty((len(times), len(self.nodeIds)))
        for j in range(len(self.nodeIds)):
            values[:, j] = np.interp(times, self.times, self.values[:, j])
        return TraceSeries(self.nodeIds, self.coords, times, values,
                           self.configHash)

    def resampleNodes(self, nodeIds, coords):
        """Values of the nearest trace node for each target node. The
        match is meant along boundary arc length; the Euclidean nearest
        node is the same one as long as both node sets sample the same
        boundary curves, closer to each other than to any other part of
        the boundary."""
        coords = np.reshape(coords, (-1, 2))
        _, nearest = cKDTree(self.coords).query(coords)
        return TraceSeries(nodeIds, coords, self.times,
                           self.values[:, nearest], self.configHash)

    def __len__(self):
        return len(self.nodeIds)

    def __str__(self):
        return ("Trace: {0} nodes, {1} times up to {2:g}"
                .format(len(self.nodeIds), len(self.times), self.times[-1]))

def boundaryTrace(trajectory, mesh, regions = BoundaryRegion.EPI,
                  configHash = None):
    """Potential of a forward trajectory on the nodes incident to the
    boundary edges of *regions*, no interpolation."""
    testfor(trajectory.nodeCount == mesh.nodeCount, GridMismatchError,
            "Trajectory of {0} nodes does not belong to the mesh of {1} "
            "nodes!".format(trajectory.nodeCount, mesh.nodeCount))
    nodeIds = mesh.regionNodes(regions)
    if configHash is None:
        configHash = trajectory.metadata.get("configHash")
    return TraceSeries(nodeIds, mesh.nodes[nodeIds], trajectory.times,
                       trajectory.u[:, nodeIds], configHash)

# vim: set ts=4 sts=4 sw=4 tw=0:
