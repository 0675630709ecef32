# -*- coding: utf-8 -*-
# mesh/ventricle.py

"""
Idealized horizontal section of both ventricles: the union of two disks
(left and right ventricle) with a circular left cavity and a crescent
shaped right cavity which wraps around the septum.
"""

import logging
import numpy as np

from ..bases.algorithm import AlgorithmBase, Parameter
from ..utils import testfor
from ..utils.error import GeometryError, MeshingError
from .mesh import BoundaryRegion
from .pslg import (Pslg, arcPoints, circlePoints, circleIntersections,
                   angleOf, maxAreaFor, maxEdgeLength, INTERIOR)

# edge length bound relative to the requested h
EDGE_BOUND = 1.5

def _lensArea(r1, r2, d):
    """Area of the intersection of two disks at distance d."""
    if d >= r1 + r2:
        return 0.
    if d <= abs(r1 - r2):
        return np.pi * min(r1, r2)**2
    a1 = np.arccos((d**2 + r1**2 - r2**2) / (2. * d * r1))
    a2 = np.arccos((d**2 + r2**2 - r1**2) / (2. * d * r2))
    kite = .5 * np.sqrt((-d + r1 + r2) * (d + r1 - r2)
                        * (d - r1 + r2) * (d + r1 + r2))
    return r1**2 * a1 + r2**2 * a2 - kite

def _ccwSpan(start, stop):
    """Stop angle > start reached counterclockwise."""
    return start + np.mod(stop - start, 2. * np.pi)

def _arcDistance(points, center, radius, start, stop):
    """Distance of points to the arc from *start* counterclockwise to
    *stop* (stop > start)."""
    delta = points - np.asarray(center)
    rho = np.linalg.norm(delta, axis = 1)
    phi = np.arctan2(delta[:, 1], delta[:, 0])
    onArc = np.mod(phi - start, 2. * np.pi) <= (stop - start)
    ends = np.asarray(center) + radius * np.array(
                ((np.cos(start), np.sin(start)), (np.cos(stop), np.sin(stop))))
    toEnds = np.min(np.linalg.norm(points[:, None, :] - ends[None],
                                   axis = 2), axis = 1)
    return np.where(onArc, np.abs(rho - radius), toEnds)

class RefinementZone(object):
    """Concentric circles around *center* which the mesh resolves
    conformingly, the enclosed disk gets edge length *h*."""
    center = None
    radii = None
    h = None

    def __init__(self, center, radii, h):
        self.center = tuple(float(c) for c in center)
        self.radii = tuple(sorted(float(r) for r in np.atleast_1d(radii)))
        self.h = float(h)
        testfor(len(self.radii) and self.radii[0] > 0 and self.h > 0,
                GeometryError, "Refinement zones need positive radii and h!")

    def __repr__(self):
        return "RefinementZone({0}, {1}, h={2})".format(
                    self.center, self.radii, self.h)

class VentricleGeometry(AlgorithmBase):
    """Dimensions of the ventricle section in cm."""
    shortName = "ventricle geometry"
    parameters = (
        Parameter("lvCenter", (0., 0.), displayName = "left ventricle center"),
        Parameter("lvRadius", 3.0, valueRange = (0., 1e3), exclusive = True,
                  displayName = "left ventricle outer radius", suffix = "cm"),
        Parameter("rvCenter", (2.4, 0.),
                  displayName = "right ventricle center"),
        Parameter("rvRadius", 2.2, valueRange = (0., 1e3), exclusive = True,
                  displayName = "right ventricle outer radius", suffix = "cm"),
        Parameter("lvCavityCenter", (0., 0.),
                  displayName = "left cavity center"),
        Parameter("lvCavityRadius", 1.5, valueRange = (0., 1e3),
                  exclusive = True, displayName = "left cavity radius",
                  suffix = "cm"),
        Parameter("rvCavityCenter", (2.8, 0.),
                  displayName = "right cavity center"),
        Parameter("rvCavityRadius", 1.0, valueRange = (0., 1e3),
                  exclusive = True, displayName = "right cavity radius",
                  suffix = "cm"),
        Parameter("septumRadius", 3.0, valueRange = (0., 1e3),
                  exclusive = True, suffix = "cm",
                  displayName = "radius of the septum surface of the "
                                "right cavity, around the left center"),
    )

    def _vec(self, name):
        return np.asarray(getattr(self, name)(), dtype = float)

    def outerArcs(self):
        """(center, radius, start, stop) of the epicardial arcs."""
        lvc, rvc = self._vec("lvCenter"), self._vec("rvCenter")
        upper, lower = circleIntersections(lvc, self.lvRadius(),
                                           rvc, self.rvRadius())
        lvStart = angleOf(lvc, upper)
        rvStart = angleOf(rvc, lower)
        return ((lvc, self.lvRadius(), lvStart,
                 _ccwSpan(lvStart, angleOf(lvc, lower))),
                (rvc, self.rvRadius(), rvStart,
                 _ccwSpan(rvStart, angleOf(rvc, upper))))

    def crescentArcs(self):
        """(center, radius, start, stop) of the right cavity arcs: the free
        wall arc of the cavity circle and the septal arc."""
        lvc, cc = self._vec("lvCenter"), self._vec("rvCavityCenter")
        upper, lower = circleIntersections(lvc, self.septumRadius(),
                                           cc, self.rvCavityRadius())
        freeStart = angleOf(cc, lower)
        septumStart = angleOf(lvc, lower)
        return ((cc, self.rvCavityRadius(), freeStart,
                 _ccwSpan(freeStart, angleOf(cc, upper))),
                (lvc, self.septumRadius(), septumStart,
                 _ccwSpan(septumStart, angleOf(lvc, upper))))

    def crescentHolePoint(self):
        lvc, cc = self._vec("lvCenter"), self._vec("rvCavityCenter")
        d = np.linalg.norm(cc - lvc)
        direction = (cc - lvc) / d
        return lvc + .5 * (self.septumRadius() + d
                           + self.rvCavityRadius()) * direction

    def check(self):
        """Raises GeometryError unless both cavities lie strictly inside
        the outer contour and do not touch each other."""
        lvc, rvc = self._vec("lvCenter"), self._vec("rvCenter")
        lvcc, cc = self._vec("lvCavityCenter"), self._vec("rvCavityCenter")
        # raises if the circles are disjoint or nested
        self.outerArcs()
        testfor(np.linalg.norm(lvcc - lvc) + self.lvCavityRadius()
                < min(self.septumRadius(), self.lvRadius()), GeometryError,
                "The left cavity (radius {0}) has to lie strictly inside the "
                "left ventricle and the septum!".format(self.lvCavityRadius()))
        d = np.linalg.norm(cc - lvc)
        testfor(d > 0 and abs(self.septumRadius() - self.rvCavityRadius())
                < d < self.septumRadius() + self.rvCavityRadius(),
                GeometryError, "The right cavity circle has to cross the "
                "septum circle to form a crescent!")
        boundary = self.crescentPoints(count = 720)
        testfor(self.outerMargin(boundary).min() > 0., GeometryError,
                "The right cavity reaches out of the outer contour!")
        return self

    def outerMargin(self, points):
        """Positive inside the union of both outer disks."""
        points = np.atleast_2d(points)
        lvc, rvc = self._vec("lvCenter"), self._vec("rvCenter")
        return np.maximum(
                self.lvRadius() - np.linalg.norm(points - lvc, axis = 1),
                self.rvRadius() - np.linalg.norm(points - rvc, axis = 1))

    def crescentPoints(self, count = 360):
        pts = []
        for center, r, start, stop in self.crescentArcs():
            angles = np.linspace(start, stop, count)
            pts.append(center + r * np.column_stack((np.cos(angles),
                                                     np.sin(angles))))
        return np.concatenate(pts)

    def area(self):
        """Exact area of the section."""
        lvc, rvc = self._vec("lvCenter"), self._vec("rvCenter")
        cc = self._vec("rvCavityCenter")
        union = (np.pi * (self.lvRadius()**2 + self.rvRadius()**2)
                 - _lensArea(self.lvRadius(), self.rvRadius(),
                             np.linalg.norm(rvc - lvc)))
        crescent = (np.pi * self.rvCavityRadius()**2
                    - _lensArea(self.septumRadius(), self.rvCavityRadius(),
                                np.linalg.norm(cc - lvc)))
        return float(union - np.pi * self.lvCavityRadius()**2 - crescent)

    def contains(self, points):
        """True for points strictly inside the section."""
        points = np.atleast_2d(np.asarray(points, dtype = float))
        lvc = self._vec("lvCenter")
        cc = self._vec("rvCavityCenter")
        inLvCavity = (np.linalg.norm(points - self._vec("lvCavityCenter"),
                                     axis = 1) <= self.lvCavityRadius())
        inCrescent = ((np.linalg.norm(points - cc, axis = 1)
                       <= self.rvCavityRadius())
                      & (np.linalg.norm(points - lvc, axis = 1)
                         >= self.septumRadius()))
        return (self.outerMargin(points) > 0) & ~inLvCavity & ~inCrescent

    def boundaryDistance(self, points):
        """Distance of points to the exact (curved) boundary."""
        points = np.atleast_2d(np.asarray(points, dtype = float))
        dist = [_arcDistance(points, *arc) for arc in
                self.outerArcs() + self.crescentArcs()]
        dist.append(np.abs(np.linalg.norm(
                        points - self._vec("lvCavityCenter"), axis = 1)
                    - self.lvCavityRadius()))
        return np.min(dist, axis = 0)

    def pslg(self, h):
        """Polygonalized boundary with spacing at most h."""
        lvArc, rvArc = self.outerArcs()
        freeArc, septumArc = self.crescentArcs()
        # the septal arc runs clockwise from the upper to the lower tip
        septum = arcPoints(septumArc[0], septumArc[1], septumArc[3],
                           septumArc[2], h)
        return (Pslg()
            .addPieces(((arcPoints(*lvArc, h = h), BoundaryRegion.EPI),
                        (arcPoints(*rvArc, h = h), BoundaryRegion.EPI)))
            .addLoop(circlePoints(self.lvCavityCenter(),
                                  self.lvCavityRadius(), h),
                     BoundaryRegion.ENDO_LV)
            .addPieces(((arcPoints(*freeArc, h = h), BoundaryRegion.ENDO_RV),
                        (septum, BoundaryRegion.ENDO_RV)))
            .addHole(self.lvCavityCenter())
            .addHole(self.crescentHolePoint()))

VentricleGeometry.factory()

def _gradingRadius(geometry, zone, separation):
    """Radius of the ring around a zone in which the edge length grows
    back to the global value."""
    center = np.asarray(zone.center)
    testfor(geometry.contains(center)[0], GeometryError,
            "Refinement zone center {0} lies outside the section!"
            .format(zone.center))
    gap = float(geometry.boundaryDistance(center)[0])
    rOut = zone.radii[-1]
    testfor(rOut < gap, GeometryError, "Refinement circle of radius {0} "
            "around {1} crosses the boundary!".format(rOut, zone.center))
    return rOut + min(rOut, .5 * separation, .45 * (gap - rOut))

def _addRefinement(pslg, zone, grading, h, marker):
    """Adds the circles of a refinement zone plus an outer grading ring,
    each enclosed annulus with its own area bound."""
    center = np.asarray(zone.center)
    inner = 0.
    for r in zone.radii + (grading, ):
        hr = zone.h if r <= zone.radii[-1] else min(2. * zone.h, h)
        pslg.addLoop(circlePoints(center, r, hr), INTERIOR)
        seedPoint = center + np.array((.5 * (inner + r), 0.))
        pslg.addRegion(seedPoint, marker, maxAreaFor(hr))
        inner = r
    return pslg

def generateVentricleSection(geometry = None, h = 0.1, refinement = None,
                             separation = 0.3, name = "ventricle"):
    """Triangulates the ventricle section with target edge length *h*.
    *refinement*: optional sequence of RefinementZone, their circles become
    interior constraints and the triangles inside carry the element
    marker 1, all others 0."""
    if geometry is None:
        geometry = VentricleGeometry()
    testfor(h > 0, GeometryError, "Target edge length h has to be positive!")
    geometry.check()
    refinement = tuple(refinement or ())
    grading = [_gradingRadius(geometry, z, separation) for z in refinement]
    for i in range(len(refinement)):
        for j in range(i):
            dist = np.linalg.norm(np.subtract(refinement[i].center,
                                              refinement[j].center))
            testfor(dist > grading[i] + grading[j], GeometryError,
                    "Refinement zones {0} and {1} overlap!"
                    .format(refinement[j], refinement[i]))
    mesh, longest = None, None
    for factor in (.4, .3, .2):
        pslg = geometry.pslg(h)
        for zone, rg in zip(refinement, grading):
            _addRefinement(pslg, zone, rg, h, 1)
        mesh = pslg.triangulate(maxAreaFor(h, factor), name = name)
        longest = maxEdgeLength(mesh)
        if longest <= EDGE_BOUND * h:
            break
        logging.debug("longest edge {0:.4g} > {1} h, retrying with a "
                      "tighter area bound".format(longest, EDGE_BOUND))
    else:
        logging.warning("Longest edge {0:.4g} exceeds {1} h = {2:.4g}!"
                        .format(longest, EDGE_BOUND, EDGE_BOUND * h))
    testfor(len(mesh.regionsPresent()) == len(BoundaryRegion), MeshingError,
            "Mesh boundary misses a region: {0}".format(
                BoundaryRegion.format(mesh.regionsPresent())))
    logging.info(u"generated {0}, h = {1}, area {2:.6g} (exact {3:.6g})"
                 .format(mesh, h, mesh.totalArea(), geometry.area()))
    return mesh

# vim: set ts=4 sts=4 sw=4 tw=0:
