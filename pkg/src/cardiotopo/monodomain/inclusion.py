# -*- coding: utf-8 -*-
# monodomain/inclusion.py

import numpy as np

from ..utils import testfor, readOnly
from ..utils.error import InclusionError

class Inclusion(object):
    """Disk shaped ischemic region."""
    center = None
    radius = None
    label = None

    def __init__(self, center, radius, label = None):
        self.center = tuple(float(c) for c in center)
        self.radius = float(radius)
        self.label = label
        testfor(len(self.center) == 2, InclusionError,
                "Inclusion center needs two coordinates!")
        testfor(self.radius > 0., InclusionError,
                "Inclusion radius has to be positive, got {0}!"
                .format(radius))

    def area(self):
        return np.pi * self.radius**2

    def contains(self, points):
        return (np.linalg.norm(np.atleast_2d(points) - self.center, axis = 1)
                < self.radius)

    def toDict(self):
        return dict(label = self.label, center = list(self.center),
                    radius = self.radius)

    def __repr__(self):
        return "Inclusion({0}, r={1})".format(self.center, self.radius)

    def __eq__(self, other):
        return (isinstance(other, Inclusion) and self.center == other.center
                and self.radius == other.radius)

    __hash__ = object.__hash__

def checkInclusions(inclusions, separation, boundaryDistance, contains):
    """Raises InclusionError unless every inclusion lies inside the domain
    at least *separation* away from its boundary and the inclusions are
    pairwise disjoint. *boundaryDistance* and *contains* take points."""
    for i, inc in enumerate(inclusions):
        testfor(bool(np.all(contains(inc.center))), InclusionError,
                "Center of {0} lies outside the domain!".format(inc))
        dist = float(np.min(boundaryDistance(inc.center)))
        testfor(dist >= separation + inc.radius, InclusionError,
                "{0} is {1:.3g} cm from the boundary, at least {2:.3g} "
                "required!".format(inc, dist, separation + inc.radius))
        for other in inclusions[:i]:
            gap = np.linalg.norm(np.subtract(inc.center, other.center))
            testfor(gap > inc.radius + other.radius, InclusionError,
                    "{0} overlaps {1}!".format(inc, other))

class Indicator(object):
    """Element wise 0/1 indicator of the inclusions, set by centroid
    membership, with its discrete area."""

    def __init__(self, mesh, elements, inclusions = ()):
        self._elements = readOnly(elements, dtype = float)
        self._inclusions = tuple(inclusions)
        self._area = float((mesh.areas() * self._elements).sum())
        self._nodal = readOnly(mesh.elementToNodeAverage() @ self._elements)

    @classmethod
    def empty(cls, mesh):
        return cls(mesh, np.zeros(mesh.triangleCount))

    @property
    def elements(self):
        return self._elements

    @property
    def inclusions(self):
        return self._inclusions

    @property
    def area(self):
        """Discrete area |omega_h|, sum of the marked triangle areas."""
        return self._area

    @property
    def nodal(self):
        """Area weighted average of the adjacent element indicators,
        consistent with the lumped mass."""
        return self._nodal

    def isEmpty(self):
        return not self._elements.any()

    def __len__(self):
        return len(self._elements)

def indicatorField(mesh, inclusions = (), separation = 0.3):
    """Marks the triangles whose centroid lies in one of the inclusions."""
    inclusions = list(inclusions)
    checkInclusions(inclusions, separation, mesh.boundaryDistance,
                    mesh.contains)
    marked = np.zeros(mesh.triangleCount, dtype = bool)
    centroids = mesh.centroids()
    for inc in inclusions:
        marked |= inc.contains(centroids)
    for inc in inclusions:
        testfor(inc.contains(centroids).any(), InclusionError,
                "{0} contains no triangle centroid, the mesh is too coarse!"
                .format(inc))
    return Indicator(mesh, marked, inclusions)

# vim: set ts=4 sts=4 sw=4 tw=0:
