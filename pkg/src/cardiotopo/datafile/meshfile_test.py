# -*- coding: utf-8 -*-
# datafile/meshfile_test.py

import os
import shutil
import tempfile
import numpy as np
from nose.tools import assert_raises

from .meshfile import MeshFile, loadMesh, saveMesh
from ..mesh import rectangleMesh, annulusMesh, BoundaryRegion
from ..utils.error import ParseError, ValidationError, FileError

TMPDIR = None

def setup_module():
    global TMPDIR
    TMPDIR = tempfile.mkdtemp(prefix = "cardiotopo_meshfile_")

def teardown_module():
    shutil.rmtree(TMPDIR, ignore_errors = True)

def _path(name):
    return os.path.join(TMPDIR, name)

def _writeText(name, lines):
    with open(_path(name), 'w') as fd:
        fd.write("\n".join(lines) + "\n")
    return _path(name)

SQUARE = ["mesh 2d v1", "nodes 4", "0 0", "1 0", "1 1", "0 1",
          "triangles 2", "0 1 2", "0 2 3", "boundary 4", "0 1 EPI",
          "1 2 ENDO_LV", "2 3 EPI", "3 0 EPI"]

def testReadText():
    mesh = loadMesh(_writeText("square.mesh", SQUARE))
    assert mesh.nodeCount == 4 and mesh.triangleCount == 2
    assert mesh.name == "square"
    assert mesh.regionNodes(BoundaryRegion.ENDO_LV).tolist() == [1, 2]
    assert mesh.elementMarkers is None

def testRoundTripExact():
    tags = (BoundaryRegion.EPI, BoundaryRegion.ENDO_RV, BoundaryRegion.EPI,
            BoundaryRegion.ENDO_LV)
    # coordinates without a short decimal representation
    mesh = rectangleMesh(1. / 3., np.pi, 3, 5, origin = (.1, -.7),
                         tags = tags)
    other = loadMesh(saveMesh(mesh, _path("rect.mesh")))
    assert np.array_equal(other.nodes, mesh.nodes)
    assert np.array_equal(other.triangles, mesh.triangles)
    assert np.array_equal(other.boundaryTags, mesh.boundaryTags)
    assert other.identity() == mesh.identity()

def testMarkersKept():
    mesh = annulusMesh(1., 2., .5)
    marked = type(mesh)(mesh.nodes, mesh.triangles, mesh.boundaryEdges,
                        mesh.boundaryTags,
                        elementMarkers = np.arange(mesh.triangleCount) % 2)
    other = loadMesh(saveMesh(marked, _path("marked.mesh")))
    assert np.array_equal(other.elementMarkers, marked.elementMarkers)

def testCommentsAndBlankLines():
    lines = ["# exported by hand", ""] + SQUARE[:6] + ["", "# tris"] \
            + SQUARE[6:]
    assert loadMesh(_writeText("comments.mesh", lines)).triangleCount == 2

def _parseErrorLine(lines, name):
    with assert_raises(ParseError) as ctx:
        loadMesh(_writeText(name, lines))
    return ctx.exception.lineNumber

def testParseErrors():
    assert _parseErrorLine(["mesh 3d v1"] + SQUARE[1:], "header.mesh") == 1
    assert _parseErrorLine(SQUARE[:3] + ["1 zero"] + SQUARE[4:],
                           "value.mesh") == 4
    assert _parseErrorLine(SQUARE[:7] + ["0 1"] + SQUARE[8:],
                           "fields.mesh") == 8
    assert _parseErrorLine(SQUARE[:11] + ["1 2 SEPTUM"] + SQUARE[12:],
                           "tag.mesh") == 12
    assert _parseErrorLine(SQUARE[:6] + ["triangles -2"], "count.mesh") == 7
    # truncated file
    assert _parseErrorLine(SQUARE[:-1], "short.mesh") == len(SQUARE)

def testInvalidMesh():
    lines = list(SQUARE)
    lines[8] = "0 3 2" # clockwise
    with assert_raises(ValidationError) as ctx:
        loadMesh(_writeText("clockwise.mesh", lines))
    assert "clockwise.mesh" in str(ctx.exception)

def testMissingFile():
    with assert_raises(FileError):
        loadMesh(_path("missing.mesh"))
    with assert_raises(FileError):
        saveMesh(rectangleMesh(), _path("nodir/rect.mesh"))

def testFileFilter():
    assert MeshFile.extensions == ("mesh",)

# vim: set ts=4 sts=4 sw=4 tw=0:
