# -*- coding: utf-8 -*-
# topo/localize.py

import logging
import numpy as np

from ..utils import testfor
from ..utils.error import ConfigurationError

class Minimum(object):
    """One reported minimum of the topological gradient."""
    rank = None
    nodeId = None
    point = None
    value = None
    distanceToBest = None

    def __init__(self, rank, nodeId, point, value, distanceToBest):
        self.rank = int(rank)
        self.nodeId = int(nodeId)
        self.point = tuple(float(c) for c in point)
        self.value = float(value)
        self.distanceToBest = float(distanceToBest)

    def row(self):
        return (self.rank, self.nodeId, self.point[0], self.point[1],
                self.value, self.distanceToBest)

    def __repr__(self):
        return ("Minimum(#{0} node {1} at ({2:.4f}, {3:.4f}), G = {4:.4g})"
                .format(self.rank, self.nodeId, self.point[0], self.point[1],
                        self.value))

class LocalizationResult(object):
    """Ranked minima, the first one is the global minimizer over the
    admissible nodes."""
    header = ("rank", "node_id", "x", "y", "G", "distance_to_best")

    def __init__(self, minima):
        self.minima = list(minima)

    @property
    def best(self):
        return self.minima[0]

    @property
    def center(self):
        return self.best.point

    @property
    def value(self):
        return self.best.value

    def rows(self):
        return [m.row() for m in self.minima]

    def isSignificant(self, floor, factor = 10.):
        """A localization is trustworthy if the minimum is negative and
        deeper than *factor* times the inverse crime floor."""
        return self.value < 0. and abs(self.value) >= factor * floor

    def distances(self, targets):
        """Distance of each target point to its nearest reported minimum."""
        points = np.array([m.point for m in self.minima])
        return [float(np.linalg.norm(points - np.asarray(t, dtype = float),
                                     axis = 1).min()) for t in targets]

    def __len__(self):
        return len(self.minima)

def localMinima(field):
    """Admissible nodes whose value is not above any admissible neighbor."""
    mask = field.mask
    adjacency = field.mesh.adjacency().tocoo()
    keep = mask[adjacency.row] & mask[adjacency.col]
    rows, cols = adjacency.row[keep], adjacency.col[keep]
    values = field.values
    isMin = mask.copy()
    higher = values[rows] > values[cols]
    isMin[rows[higher]] = False
    return np.flatnonzero(isMin)

def locateMinima(field, count = 1, minSeparation = 0.5):
    """Global minimizer of G over the mask plus up to count - 1 further
    local minima, each at least *minSeparation* away from all previously
    selected ones. Ties go to the lowest node id."""
    testfor(int(count) >= 1, ConfigurationError,
            "At least one minimum has to be requested!")
    testfor(field.mask.any(), ConfigurationError,
            "No admissible node left in the search mask!")
    candidates = localMinima(field)
    values = field.values[candidates]
    order = candidates[np.lexsort((candidates, values))]
    nodes = field.mesh.nodes
    chosen = []
    for node in order:
        if len(chosen) >= count:
            break
        if all(np.linalg.norm(nodes[node] - nodes[c]) >= minSeparation
               for c in chosen):
            chosen.append(node)
    best = nodes[chosen[0]]
    result = LocalizationResult(
        Minimum(rank + 1, node, nodes[node], field.values[node],
                np.linalg.norm(nodes[node] - best))
        for rank, node in enumerate(chosen))
    if len(chosen) < count:
        logging.info("only {0} of {1} separated minima found"
                     .format(len(chosen), count))
    return result

# vim: set ts=4 sts=4 sw=4 tw=0:
