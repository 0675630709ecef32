# -*- coding: utf-8 -*-
# mesh/pslg.py

"""
Planar straight line graphs made of polygonalized circular arcs and their
constrained Delaunay triangulation by *triangle*. Also provides the small
auxiliary meshes used by tests and the polarization oracle.
"""

import logging
import numpy as np
import triangle

from ..utils import testfor
from ..utils.error import GeometryError, MeshingError
from .mesh import Mesh, BoundaryRegion

# triangles with |area| below this fraction of the mean are degenerate
DEGENERATE_FRACTION = 1e-10
INTERIOR = 0 # segment marker of constraints inside the domain

def arcPoints(center, radius, start, stop, h, endpoint = False):
    """Points on the circle arc from angle *start* to *stop* (radians,
    counterclockwise for stop > start) with spacing at most *h*."""
    testfor(radius > 0 and h > 0, GeometryError,
            "Arc radius and spacing have to be positive!")
    count = max(1, int(np.ceil(radius * abs(stop - start) / h)))
    angles = np.linspace(start, stop, count + 1)
    if not endpoint:
        angles = angles[:-1]
    return (np.asarray(center, dtype = float)
            + radius * np.column_stack((np.cos(angles), np.sin(angles))))

def circlePoints(center, radius, h, minCount = 12):
    """Counterclockwise polygon of a full circle, spacing at most *h*."""
    count = max(minCount, int(np.ceil(2. * np.pi * radius / h)))
    return arcPoints(center, radius, 0., 2. * np.pi,
                     2. * np.pi * radius / count)

def circleIntersections(c1, r1, c2, r2):
    """Both intersection points of two circles, the one left of the line
    c1 -> c2 first. Raises GeometryError if they do not intersect."""
    c1, c2 = np.asarray(c1, dtype = float), np.asarray(c2, dtype = float)
    d = np.linalg.norm(c2 - c1)
    testfor(abs(r1 - r2) < d < r1 + r2, GeometryError,
            "Circles around {0} (r={1}) and {2} (r={3}) do not intersect!"
            .format(tuple(c1), r1, tuple(c2), r2))
    ex = (c2 - c1) / d
    ey = np.array((-ex[1], ex[0]))
    a = (d**2 + r1**2 - r2**2) / (2. * d)
    b = np.sqrt(max(r1**2 - a**2, 0.))
    return c1 + a * ex + b * ey, c1 + a * ex - b * ey

def angleOf(center, point):
    delta = np.asarray(point, dtype = float) - np.asarray(center, dtype = float)
    return np.arctan2(delta[1], delta[0])

class Pslg(object):
    """Collects vertices, marked segments, hole and region points.
    Closed loops are added as point sequences, the last point connects to
    the first one."""

    def __init__(self):
        self._vertices = []
        self._segments = []
        self._markers = []
        self._holes = []
        self._regions = []
        self._count = 0

    def addLoop(self, points, marker = INTERIOR):
        points = np.asarray(points, dtype = float)
        testfor(len(points) >= 3, GeometryError,
                "A closed loop needs at least three points!")
        n = len(points)
        idx = self._count + np.arange(n)
        self._vertices.append(points)
        self._segments.append(np.column_stack((idx, np.roll(idx, -1))))
        self._markers.append(np.full(n, int(marker)))
        self._count += n
        return self

    def addPieces(self, pieces):
        """Closed loop made of consecutive pieces, each a (points, marker)
        pair. The segment leaving a point carries the marker of its piece."""
        points = np.concatenate([p for p, m in pieces])
        markers = np.concatenate([np.full(len(p), int(m)) for p, m in pieces])
        n = len(points)
        idx = self._count + np.arange(n)
        self._vertices.append(points)
        self._segments.append(np.column_stack((idx, np.roll(idx, -1))))
        self._markers.append(markers)
        self._count += n
        return self

    def addHole(self, point):
        self._holes.append(np.asarray(point, dtype = float))
        return self

    def addRegion(self, point, attribute, maxArea):
        """Triangles of the region enclosing *point* get the element marker
        *attribute* and an area bound of *maxArea*."""
        self._regions.append((float(point[0]), float(point[1]),
                              float(attribute), float(maxArea)))
        return self

    def data(self):
        data = dict(vertices = np.concatenate(self._vertices),
                    segments = np.concatenate(self._segments),
                    segment_markers = np.concatenate(self._markers))
        if len(self._holes):
            data["holes"] = np.array(self._holes)
        if len(self._regions):
            data["regions"] = np.array(self._regions)
        return data

    def options(self, maxArea, minAngle = 30.):
        opts = "pq{0:g}AQ".format(minAngle)
        if len(self._regions):
            opts += "a" # regional area bounds
        if maxArea is not None:
            # triangle reads plain decimals only
            opts += "a{0:.12f}".format(maxArea)
        return opts

    def triangulate(self, maxArea, minAngle = 30., name = None):
        """Quality constrained Delaunay triangulation with area bound
        *maxArea*. Returns a Mesh whose boundary edges carry the markers
        of the segments they subdivide."""
        testfor(maxArea is None or maxArea > 0, GeometryError,
                "The area bound has to be positive!")
        opts = self.options(maxArea, minAngle)
        logging.debug("triangulating {0} vertices with options '{1}'"
                      .format(self._count, opts))
        try:
            result = triangle.triangulate(self.data(), opts)
        except Exception as e:
            raise MeshingError("Triangulation failed: {0}".format(e))
        if "triangles" not in result or not len(result["triangles"]):
            raise MeshingError("Triangulation produced no triangles!")
        return toMesh(result, name = name)

def _compact(vertices, triangles):
    """Removes vertices no triangle refers to."""
    used = np.zeros(len(vertices), dtype = bool)
    used[triangles.ravel()] = True
    newIndex = np.cumsum(used) - 1
    return vertices[used], newIndex[triangles], newIndex, used

def toMesh(result, name = None):
    """Builds a Mesh from the output dictionary of triangle.triangulate()."""
    vertices = np.asarray(result["vertices"], dtype = float)
    tris = np.asarray(result["triangles"], dtype = np.int64)
    vertices, tris, newIndex, used = _compact(vertices, tris)
    p = vertices[tris]
    twiceArea = ((p[:, 1, 0] - p[:, 0, 0]) * (p[:, 2, 1] - p[:, 0, 1])
                 - (p[:, 1, 1] - p[:, 0, 1]) * (p[:, 2, 0] - p[:, 0, 0]))
    degenerate = np.abs(twiceArea) <= DEGENERATE_FRACTION * np.abs(
                                                    twiceArea).mean()
    if degenerate.any():
        raise MeshingError("{0} degenerate triangle(s) near {1}!"
                           .format(degenerate.sum(),
                                   tuple(p[degenerate][0].mean(axis = 0))))
    flip = twiceArea < 0.
    tris[flip] = tris[flip][:, [0, 2, 1]]
    markers = None
    if result.get("triangle_attributes") is not None:
        markers = np.rint(np.ravel(result["triangle_attributes"])
                          ).astype(np.int64)
    # segment markers of the subdivided input segments
    segments = np.asarray(result.get("segments", np.zeros((0, 2))),
                          dtype = np.int64)
    segMarkers = np.ravel(result.get("segment_markers",
                                     np.zeros(len(segments))))
    lookup = dict()
    for (i, j), m in zip(segments, segMarkers):
        if not (used[i] and used[j]):
            continue
        i, j = newIndex[i], newIndex[j]
        lookup[(min(i, j), max(i, j))] = int(m)
    mesh = Mesh(vertices, tris, np.zeros((0, 2)), (), elementMarkers = markers,
                check = False)
    edges = mesh.topologicalBoundaryEdges()
    tags = np.array([lookup.get(tuple(e), INTERIOR) for e in edges.tolist()],
                    dtype = np.int64)
    if len(tags) and not np.isin(tags, [int(r) for r in BoundaryRegion]).all():
        raise MeshingError("{0} boundary edge(s) without region marker!"
                           .format((~np.isin(tags, [int(r) for r in
                                                    BoundaryRegion])).sum()))
    # orient boundary edges as in their triangle
    directed = set(map(tuple, mesh.directedEdges().tolist()))
    edges = np.array([e if tuple(e) in directed else e[::-1]
                      for e in edges.tolist()], dtype = np.int64
                     ).reshape(-1, 2)
    return Mesh(vertices, tris, edges, tags, elementMarkers = markers,
                name = name)

# auxiliary meshes

def unitSquare():
    """Two counterclockwise triangles on [0, 1]², all edges EPI."""
    nodes = ((0., 0.), (1., 0.), (1., 1.), (0., 1.))
    return Mesh(nodes, ((0, 1, 2), (0, 2, 3)),
                ((0, 1), (1, 2), (2, 3), (3, 0)), [BoundaryRegion.EPI] * 4,
                name = "unit square")

def rectangleMesh(width = 1., height = 1., nx = 10, ny = 10,
                  origin = (0., 0.), tags = None):
    """Structured mesh of a rectangle, every cell split along its diagonal.
    *tags*: boundary regions of the bottom, right, top and left sides,
    EPI on all sides by default."""
    testfor(nx >= 1 and ny >= 1 and width > 0 and height > 0, GeometryError,
            "Invalid rectangle dimensions!")
    if tags is None:
        tags = (BoundaryRegion.EPI,) * 4
    x = origin[0] + np.linspace(0., width, nx + 1)
    y = origin[1] + np.linspace(0., height, ny + 1)
    xx, yy = np.meshgrid(x, y)
    nodes = np.column_stack((xx.ravel(), yy.ravel()))
    index = np.arange((nx + 1) * (ny + 1)).reshape(ny + 1, nx + 1)
    a, b = index[:-1, :-1].ravel(), index[:-1, 1:].ravel()
    c, d = index[1:, 1:].ravel(), index[1:, :-1].ravel()
    tris = np.concatenate((np.column_stack((a, b, c)),
                           np.column_stack((a, c, d))))
    sides = (np.column_stack((index[0, :-1], index[0, 1:])),
             np.column_stack((index[:-1, -1], index[1:, -1])),
             np.column_stack((index[-1, 1:], index[-1, :-1])),
             np.column_stack((index[1:, 0], index[:-1, 0])))
    edges = np.concatenate(sides)
    edgeTags = np.concatenate([np.full(len(s), int(t))
                               for s, t in zip(sides, tags)])
    return Mesh(nodes, tris, edges, edgeTags, name = "rectangle")

def annulusMesh(inner, outer, h, innerTag = BoundaryRegion.ENDO_LV,
                outerTag = BoundaryRegion.EPI, center = (0., 0.)):
    """Unstructured mesh of the annulus inner < r < outer."""
    testfor(0 < inner < outer, GeometryError,
            "Annulus radii have to satisfy 0 < inner < outer!")
    pslg = (Pslg().addLoop(circlePoints(center, outer, h), outerTag)
                  .addLoop(circlePoints(center, inner, h), innerTag)
                  .addHole(center))
    return pslg.triangulate(maxAreaFor(h), name = "annulus")

def boxWithDisk(boxSize, radius, h, hDisk = None, center = (0., 0.)):
    """Square box of edge length *boxSize* containing a disk of *radius*
    resolved by conforming segments. Elements inside the disk carry the
    marker 1, an intermediate ring grades the size from *hDisk* to *h*."""
    if hDisk is None:
        hDisk = h
    half = .5 * boxSize
    testfor(radius > 0 and 2. * radius < half, GeometryError,
            "Disk does not fit into the box!")
    cx, cy = center
    corners = np.array(((cx - half, cy - half), (cx + half, cy - half),
                        (cx + half, cy + half), (cx - half, cy + half)))
    sides = [arcLine(corners[i], corners[(i + 1) % 4], h) for i in range(4)]
    ring = 2. * radius
    pslg = (Pslg().addLoop(np.concatenate(sides), BoundaryRegion.EPI)
                  .addLoop(circlePoints(center, radius, hDisk), INTERIOR)
                  .addLoop(circlePoints(center, ring, 2. * hDisk), INTERIOR)
                  .addRegion(center, 1, maxAreaFor(hDisk))
                  .addRegion((cx + 1.5 * radius, cy), 2,
                             maxAreaFor(2. * hDisk))
                  .addRegion((cx + .5 * (ring + half), cy), 0,
                             maxAreaFor(h)))
    return pslg.triangulate(maxAreaFor(h), name = "box with disk")

def arcLine(a, b, h):
    """Points from *a* to *b* (excluded) with spacing at most *h*."""
    a, b = np.asarray(a, dtype = float), np.asarray(b, dtype = float)
    count = max(1, int(np.ceil(np.linalg.norm(b - a) / h)))
    t = np.linspace(0., 1., count + 1)[:-1]
    return a + t[:, None] * (b - a)

def maxAreaFor(h, factor = .4):
    """Triangle area bound for a target edge length *h*. With 30 degree
    quality triangles a factor of 0.3 bounds the longest edge by 1.45 h,
    larger factors give fewer triangles with a few longer edges."""
    return factor * h**2

def maxEdgeLength(mesh):
    return float(mesh.edgeLengths().max())

# vim: set ts=4 sts=4 sw=4 tw=0:
