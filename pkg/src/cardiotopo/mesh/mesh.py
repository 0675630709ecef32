# -*- coding: utf-8 -*-
# mesh/mesh.py

"""
Triangle meshes with tagged boundary edges. A Mesh is immutable after
construction: its arrays are read-only copies and derived quantities are
computed once on first use.
"""

import enum
import hashlib
import numpy as np
import scipy.sparse as sp

from ..utils import readOnly, isString, testfor
from ..utils.error import ConfigurationError, ValidationError

class BoundaryRegion(enum.IntEnum):
    """Parts of the boundary, measurements are taken on a subset."""
    EPI = 1
    ENDO_LV = 2
    ENDO_RV = 3

    @classmethod
    def parse(cls, text):
        try:
            return cls[str(text).strip().upper()]
        except KeyError:
            raise ConfigurationError("Unknown boundary region '{0}', "
                    "expected one of {1}".format(text,
                        ", ".join(r.name for r in cls)))

    @classmethod
    def parseSet(cls, regions):
        """Accepts 'EPI, ENDO_LV', a single region or an iterable of both.
        Returns a non-empty frozenset."""
        if isinstance(regions, cls):
            regions = (regions, )
        elif isString(regions):
            regions = [r for r in regions.split(",") if len(r.strip())]
        result = frozenset(r if isinstance(r, cls) else cls.parse(r)
                           for r in regions)
        testfor(len(result) > 0, ConfigurationError,
                "An empty set of boundary regions was given!")
        return result

    @classmethod
    def format(cls, regions):
        return ", ".join(r.name for r in sorted(regions))

class Mesh(object):
    """P1 triangulation in the plane.

    - *nodes*: (N, 2) coordinates in cm
    - *triangles*: (M, 3) node indices, counterclockwise
    - *boundaryEdges*: (B, 2) node indices
    - *boundaryTags*: (B,) BoundaryRegion values of the boundary edges
    - *elementMarkers*: optional (M,) integer tags
    """
    _nodes = None
    _triangles = None
    _boundaryEdges = None
    _boundaryTags = None
    _elementMarkers = None
    _name = None

    def __init__(self, nodes, triangles, boundaryEdges, boundaryTags,
                 elementMarkers = None, name = None, check = True):
        self._nodes = readOnly(np.reshape(nodes, (-1, 2)), dtype = float)
        self._triangles = readOnly(np.reshape(triangles, (-1, 3)),
                                   dtype = np.int64)
        self._boundaryEdges = readOnly(np.reshape(boundaryEdges, (-1, 2)),
                                       dtype = np.int64)
        self._boundaryTags = readOnly(np.ravel(boundaryTags),
                                      dtype = np.int64)
        if elementMarkers is not None:
            self._elementMarkers = readOnly(np.ravel(elementMarkers),
                                            dtype = np.int64)
        self._name = name
        self._cache = dict()
        if check:
            from .validate import validate
            report = validate(self)
            if len(report):
                raise ValidationError(report)

    def _cached(self, key, func):
        if key not in self._cache:
            value = func()
            if isinstance(value, np.ndarray):
                value.setflags(write = False)
            self._cache[key] = value
        return self._cache[key]

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_cache"] = dict() # rebuilt on demand
        return state

    @property
    def name(self):
        return self._name

    @property
    def nodes(self):
        return self._nodes

    @property
    def triangles(self):
        return self._triangles

    @property
    def boundaryEdges(self):
        return self._boundaryEdges

    @property
    def boundaryTags(self):
        return self._boundaryTags

    @property
    def elementMarkers(self):
        return self._elementMarkers

    @property
    def nodeCount(self):
        return len(self._nodes)

    @property
    def triangleCount(self):
        return len(self._triangles)

    def identity(self):
        """Content hash, identifies the mesh in trajectory metadata."""
        def compute():
            sha = hashlib.sha256()
            for arr in (self.nodes, self.triangles, self.boundaryEdges,
                        self.boundaryTags):
                sha.update(np.ascontiguousarray(arr).tobytes())
            return sha.hexdigest()[:16]
        return self._cached("identity", compute)

    # element geometry

    def signedAreas(self):
        def compute():
            p = self.nodes[self.triangles]
            d1, d2 = p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]
            return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])
        return self._cached("signedAreas", compute)

    def areas(self):
        return np.abs(self.signedAreas())

    def totalArea(self):
        return float(self.areas().sum())

    def centroids(self):
        return self._cached("centroids",
                            lambda: self.nodes[self.triangles].mean(axis = 1))

    def basisGradients(self):
        """(M, 3, 2) constant gradients of the three P1 basis functions of
        each triangle."""
        def compute():
            p = self.nodes[self.triangles]
            x, y = p[:, :, 0], p[:, :, 1]
            twiceArea = 2. * self.signedAreas()
            b = np.stack((y[:, 1] - y[:, 2], y[:, 2] - y[:, 0],
                          y[:, 0] - y[:, 1]), axis = 1)
            c = np.stack((x[:, 2] - x[:, 1], x[:, 0] - x[:, 2],
                          x[:, 1] - x[:, 0]), axis = 1)
            return np.stack((b, c), axis = 2) / twiceArea[:, None, None]
        return self._cached("basisGradients", compute)

    def edgeLengths(self):
        """Lengths of all distinct edges."""
        edges = self.edges()
        return np.linalg.norm(self.nodes[edges[:, 1]]
                              - self.nodes[edges[:, 0]], axis = 1)

    # topology

    def directedEdges(self):
        """(3M, 2) edges as listed by the triangles, in their orientation."""
        t = self.triangles
        return np.concatenate((t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]))

    def edges(self):
        """Distinct undirected edges, sorted node pairs."""
        def compute():
            return np.unique(np.sort(self.directedEdges(), axis = 1),
                             axis = 0)
        return self._cached("edges", compute)

    def topologicalBoundaryEdges(self):
        """Sorted node pairs of edges adjacent to exactly one triangle."""
        def compute():
            edges, counts = np.unique(np.sort(self.directedEdges(), axis = 1),
                                      axis = 0, return_counts = True)
            return edges[counts == 1]
        return self._cached("topologicalBoundaryEdges", compute)

    def regionEdges(self, regions):
        """Boundary edges tagged with one of the given regions."""
        regions = BoundaryRegion.parseSet(regions)
        mask = np.isin(self.boundaryTags, [int(r) for r in regions])
        return self.boundaryEdges[mask]

    def regionNodes(self, regions):
        """Sorted node ids incident to boundary edges of the regions."""
        edges = self.regionEdges(regions)
        testfor(len(edges) > 0, ConfigurationError,
                "Mesh has no boundary edges in region(s) {0}!"
                .format(BoundaryRegion.format(
                    BoundaryRegion.parseSet(regions))))
        return np.unique(edges)

    def boundaryNodes(self):
        return self._cached("boundaryNodes",
                            lambda: np.unique(self.boundaryEdges))

    def regionsPresent(self):
        return frozenset(BoundaryRegion(int(t))
                         for t in np.unique(self.boundaryTags))

    def nodeElementMatrix(self):
        """Sparse (N, M) incidence matrix, entry 1 if a node belongs to a
        triangle."""
        def compute():
            m = self.triangleCount
            rows = self.triangles.ravel()
            cols = np.repeat(np.arange(m), 3)
            return sp.csr_matrix((np.ones(3 * m), (rows, cols)),
                                 shape = (self.nodeCount, m))
        return self._cached("nodeElementMatrix", compute)

    def adjacency(self):
        """Sparse symmetric node adjacency (edge graph) without diagonal."""
        def compute():
            e = self.edges()
            n = self.nodeCount
            ones = np.ones(len(e))
            a = sp.csr_matrix((ones, (e[:, 0], e[:, 1])), shape = (n, n))
            return (a + a.T).tocsr()
        return self._cached("adjacency", compute)

    def elementToNodeAverage(self, weighted = True):
        """Sparse (N, M) operator averaging element values to nodes,
        area weighted or plain over the adjacent elements."""
        key = "average{0}".format("Area" if weighted else "Plain")
        def compute():
            inc = self.nodeElementMatrix()
            if weighted:
                inc = inc @ sp.diags(self.areas())
            rowSum = np.asarray(inc.sum(axis = 1)).ravel()
            return (sp.diags(1. / rowSum) @ inc).tocsr()
        return self._cached(key, compute)

    def boundaryDistance(self, points = None, chunk = 2048):
        """Distance of points (default: all nodes) to the polygonal
        boundary of the mesh."""
        if points is None:
            points = self.nodes
        points = np.atleast_2d(np.asarray(points, dtype = float))
        edges = self.topologicalBoundaryEdges()
        a, b = self.nodes[edges[:, 0]], self.nodes[edges[:, 1]]
        ab = b - a
        abLen2 = np.maximum((ab**2).sum(axis = 1), 1e-300)
        result = np.empty(len(points))
        for start in range(0, len(points), chunk):
            p = points[start:start+chunk]
            ap = p[:, None, :] - a[None, :, :]
            t = np.clip((ap * ab[None]).sum(axis = 2) / abLen2[None], 0., 1.)
            closest = a[None] + t[..., None] * ab[None]
            dist = np.linalg.norm(p[:, None, :] - closest, axis = 2)
            result[start:start+chunk] = dist.min(axis = 1)
        return result

    # point location

    def triangulation(self):
        """matplotlib Triangulation of this mesh, for point location,
        interpolation and plots."""
        def compute():
            import matplotlib.tri as mtri
            return mtri.Triangulation(self.nodes[:, 0], self.nodes[:, 1],
                                      self.triangles)
        return self._cached("triangulation", compute)

    def locate(self, points):
        """Triangle index containing each point, -1 outside."""
        points = np.atleast_2d(np.asarray(points, dtype = float))
        finder = self._cached("trifinder",
                              lambda: self.triangulation().get_trifinder())
        return np.asarray(finder(points[:, 0], points[:, 1]))

    def contains(self, points):
        return self.locate(points) >= 0

    def interpolate(self, values, points):
        """P1 interpolation of nodal *values* at *points*, NaN outside."""
        import matplotlib.tri as mtri
        points = np.atleast_2d(np.asarray(points, dtype = float))
        interp = mtri.LinearTriInterpolator(self.triangulation(),
                                            np.asarray(values, dtype = float),
                                            trifinder = None)
        result = interp(points[:, 0], points[:, 1])
        return np.ma.filled(result.astype(float), np.nan)

    def __str__(self):
        return ("Mesh '{0}': {1} nodes, {2} triangles, {3} boundary edges"
                .format(self.name, self.nodeCount, self.triangleCount,
                        len(self.boundaryEdges)))

# vim: set ts=4 sts=4 sw=4 tw=0:
