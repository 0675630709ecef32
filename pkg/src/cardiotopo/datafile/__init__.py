# -*- coding: utf-8 -*-
# datafile/__init__.py

__all__ = ["DataFile", "AsciiFile", "MeshFile", "loadMesh", "saveMesh",
           "TraceFile", "loadTrace", "saveTrace", "CsvFile", "CsvTable",
           "VtkFile", "VtkData", "saveVtk"]

from .datafile import DataFile
from .asciifile import AsciiFile
from .meshfile import MeshFile, loadMesh, saveMesh
from .csvfile import CsvFile, CsvTable
from .tracefile import TraceFile, loadTrace, saveTrace
from .vtkfile import VtkFile, VtkData, saveVtk

# vim: set ts=4 sw=4 sts=4 tw=0:
