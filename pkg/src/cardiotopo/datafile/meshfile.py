# -*- coding: utf-8 -*-
# datafile/meshfile.py

"""
Plain text mesh files::

    mesh 2d v1
    nodes N
    x y                  (N lines)
    triangles M
    i j k                (M lines, zero-based)
    boundary B
    i j TAG              (B lines, TAG one of EPI, ENDO_LV, ENDO_RV)

An optional ``markers M`` section with one integer per line follows.
"""

import numpy as np

from .asciifile import AsciiFile
from ..mesh.mesh import Mesh, BoundaryRegion
from ..utils import classproperty, formatFloat
from ..utils.error import ParseError, ValidationError

HEADER = "mesh 2d v1"

class MeshFile(AsciiFile):
    _lines = None
    _pos = 0

    @classproperty
    @classmethod
    def fileFilter(cls):
        return (("text mesh", "mesh"),)

    # writing

    @classmethod
    def formatData(cls, mesh, **kwargs):
        out = [HEADER, "nodes {0}".format(mesh.nodeCount)]
        out += ["{0} {1}".format(formatFloat(x), formatFloat(y))
                for x, y in mesh.nodes]
        out.append("triangles {0}".format(mesh.triangleCount))
        out += ["{0} {1} {2}".format(*t) for t in mesh.triangles.tolist()]
        out.append("boundary {0}".format(len(mesh.boundaryEdges)))
        out += ["{0} {1} {2}".format(i, j, BoundaryRegion(int(tag)).name)
                for (i, j), tag in zip(mesh.boundaryEdges.tolist(),
                                       mesh.boundaryTags)]
        if mesh.elementMarkers is not None:
            out.append("markers {0}".format(len(mesh.elementMarkers)))
            out += [str(m) for m in mesh.elementMarkers.tolist()]
        return cls.newline.join(out)

    # reading

    def _next(self):
        try:
            number, line = next(self._lines)
        except StopIteration:
            raise ParseError("unexpected end of file", self.filename,
                             self._pos + 1)
        self._pos = number
        return number, line.split()

    def _section(self, name, optional = False):
        try:
            number, fields = self._next()
        except ParseError:
            if optional:
                return None
            raise
        if len(fields) != 2 or fields[0] != name:
            raise ParseError("expected '{0} <count>', got '{1}'"
                             .format(name, " ".join(fields)),
                             self.filename, number)
        try:
            count = int(fields[1])
        except ValueError:
            count = -1
        if count < 0:
            raise ParseError("invalid {0} count '{1}'".format(name, fields[1]),
                             self.filename, number)
        return count

    def _rows(self, count, width, dataType):
        rows = []
        for _ in range(count):
            number, fields = self._next()
            if len(fields) != width:
                raise ParseError("expected {0} fields, got {1}"
                                 .format(width, len(fields)),
                                 self.filename, number)
            rows.append(self.readTuple(fields, dataType = dataType,
                                       lineNumber = number))
        return rows

    def _tag(self, text):
        try:
            return int(BoundaryRegion[text])
        except KeyError:
            raise ParseError("unknown boundary tag '{0}'".format(text),
                             self.filename, self._pos)

    def parseLines(self, asciiLines, **kwargs):
        self._lines = iter(self.contentLines(asciiLines))
        number, fields = self._next()
        if " ".join(fields) != HEADER:
            raise ParseError("expected header '{0}'".format(HEADER),
                             self.filename, number)
        nodes = self._rows(self._section("nodes"), 2, float)
        triangles = self._rows(self._section("triangles"), 3, int)
        count = self._section("boundary")
        edges, tags = [], []
        for _ in range(count):
            number, fields = self._next()
            if len(fields) != 3:
                raise ParseError("expected 'i j TAG'", self.filename, number)
            edges.append(self.readTuple(fields[:2], dataType = int,
                                        lineNumber = number))
            tags.append(self._tag(fields[2]))
        markers = None
        count = self._section("markers", optional = True)
        if count is not None:
            markers = [m[0] for m in self._rows(count, 1, int)]
        try:
            self._data = Mesh(np.array(nodes, dtype = float).reshape(-1, 2),
                              np.array(triangles, dtype = np.int64),
                              np.array(edges, dtype = np.int64),
                              np.array(tags, dtype = np.int64),
                              elementMarkers = markers, name = self.name)
        except ValidationError as e:
            raise ValidationError(e.report, "Invalid mesh in '{0}'"
                                  .format(self.filename))

def loadMesh(filename):
    """Reads a mesh file, raises ParseError or ValidationError."""
    return MeshFile.load(filename)

def saveMesh(mesh, filename):
    return MeshFile.writeData(filename, mesh)

# vim: set ts=4 sts=4 sw=4 tw=0:
