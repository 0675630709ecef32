# -*- coding: utf-8 -*-
# datafile/vtkfile.py

"""
Legacy ASCII VTK unstructured grids with nodal and element fields, for
external visualization. The title line carries the config hash.
"""

import logging
import meshio
import numpy as np

from .datafile import DataFile
from ..utils import classproperty, atomicPath, openFile, testfor
from ..utils.error import FileError, GridMismatchError

TITLE = "cardiotopo config_hash={0}"

class VtkData(object):
    """A mesh with named point and cell arrays."""

    def __init__(self, mesh, pointData = None, cellData = None,
                 configHash = None):
        self.mesh = mesh
        self.pointData = dict()
        self.cellData = dict()
        self.configHash = configHash
        for name, values in (pointData or {}).items():
            self.addPointData(name, values)
        for name, values in (cellData or {}).items():
            self.addCellData(name, values)

    @staticmethod
    def _padded(values):
        """Vectors become 3D, booleans become integers."""
        values = np.asarray(values)
        if values.dtype == bool:
            values = values.astype(np.int32)
        if values.ndim == 2 and values.shape[1] == 2:
            values = np.pad(values, ((0, 0), (0, 1)), "constant")
        return values

    def addPointData(self, name, values):
        testfor(len(values) == self.mesh.nodeCount, GridMismatchError,
                "Point field '{0}' of length {1} for {2} nodes!"
                .format(name, len(values), self.mesh.nodeCount))
        self.pointData[name] = self._padded(values)
        return self

    def addCellData(self, name, values):
        testfor(len(values) == self.mesh.triangleCount, GridMismatchError,
                "Cell field '{0}' of length {1} for {2} triangles!"
                .format(name, len(values), self.mesh.triangleCount))
        self.cellData[name] = self._padded(values)
        return self

    def toMeshio(self):
        points = np.pad(self.mesh.nodes, ((0, 0), (0, 1)), "constant")
        return meshio.Mesh(points, [("triangle", self.mesh.triangles)],
                           point_data = self.pointData,
                           cell_data = dict((name, [values]) for name, values
                                            in self.cellData.items()))

class VtkFile(DataFile):

    @classproperty
    @classmethod
    def fileFilter(cls):
        return (("legacy VTK", "vtk"),)

    def readFile(self, **kwargs):
        try:
            grid = meshio.read(self.filename, file_format = "vtk")
        except Exception as e:
            raise FileError("Could not read VTK file: {0}".format(e),
                            self.filename)
        with openFile(self.filename, 'r') as fd:
            fd.readline()
            title = fd.readline().strip()
        key, sep, value = title.partition("config_hash=")
        self._data = dict(points = grid.points, cells = grid.cells_dict,
                          pointData = grid.point_data,
                          cellData = dict((k, v[0]) for k, v
                                          in grid.cell_data.items()),
                          configHash = value if sep else None)

    @classmethod
    def writeFile(cls, filename, data, **kwargs):
        with atomicPath(filename) as tmpName:
            meshio.write(tmpName, data.toMeshio(), file_format = "vtk",
                         binary = False)
            with openFile(tmpName, 'r') as fd:
                lines = fd.readlines()
            # second line of a legacy file is a free text title
            lines[1] = TITLE.format(data.configHash) + "\n"
            with openFile(tmpName, 'w') as fd:
                fd.writelines(lines)
        logging.debug("wrote {0}: {1} point and {2} cell field(s)"
                      .format(filename, len(data.pointData),
                              len(data.cellData)))

def saveVtk(filename, mesh, pointData = None, cellData = None,
            configHash = None):
    return VtkFile.writeData(filename, VtkData(mesh, pointData, cellData,
                                               configHash))

# vim: set ts=4 sts=4 sw=4 tw=0:
