# -*- coding: utf-8 -*-
# mesh/validate_test.py

import numpy as np

from .mesh import Mesh, BoundaryRegion
from .pslg import unitSquare, rectangleMesh
from .validate import validate

def _unchecked(nodes, triangles, edges, tags, markers = None):
    return Mesh(nodes, triangles, edges, tags, elementMarkers = markers,
                check = False)

SQUARE = ((0., 0.), (1., 0.), (1., 1.), (0., 1.))
EPI = int(BoundaryRegion.EPI)

def testValidMeshes():
    assert validate(unitSquare()) == []
    assert validate(rectangleMesh(3., 1., 9, 3)) == []

def testIndexOutOfRange():
    mesh = _unchecked(SQUARE, ((0, 1, 2), (0, 2, 4)),
                      ((0, 1), (1, 2), (2, 3), (3, 0)), [EPI] * 4)
    report = validate(mesh)
    assert len(report) == 1 and report[0].startswith("indices")

def testMissingBoundaryTag():
    mesh = _unchecked(SQUARE, ((0, 1, 2), (0, 2, 3)),
                      ((0, 1), (1, 2), (2, 3)), [EPI] * 3)
    report = validate(mesh)
    assert any("without tag" in line for line in report)

def testInteriorEdgeTagged():
    mesh = _unchecked(SQUARE, ((0, 1, 2), (0, 2, 3)),
                      ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)), [EPI] * 5)
    assert any("not on the boundary" in line for line in validate(mesh))

def testUnknownTag():
    mesh = _unchecked(SQUARE, ((0, 1, 2), (0, 2, 3)),
                      ((0, 1), (1, 2), (2, 3), (3, 0)), [EPI, EPI, 7, EPI])
    assert any("unknown region tag" in line for line in validate(mesh))

def testNonConforming():
    # hanging node 4 on the diagonal
    nodes = SQUARE + ((.5, .5),)
    mesh = _unchecked(nodes, ((0, 1, 2), (0, 4, 3), (4, 2, 3)),
                      ((0, 1), (1, 2), (2, 3), (3, 0)), [EPI] * 4)
    assert len(validate(mesh)) > 0

def testUnusedNodeAndMarkers():
    nodes = SQUARE + ((2., 2.),)
    mesh = _unchecked(nodes, ((0, 1, 2), (0, 2, 3)),
                      ((0, 1), (1, 2), (2, 3), (3, 0)), [EPI] * 4,
                      markers = (0, 1, 1))
    report = validate(mesh)
    assert any("not used" in line for line in report)
    assert any(line.startswith("markers") for line in report)

def testNonFiniteCoordinates():
    nodes = np.array(SQUARE)
    nodes[2, 0] = np.nan
    mesh = _unchecked(nodes, ((0, 1, 2), (0, 2, 3)),
                      ((0, 1), (1, 2), (2, 3), (3, 0)), [EPI] * 4)
    assert validate(mesh)[0].startswith("coordinates")

def testNoTriangles():
    mesh = _unchecked(SQUARE, np.zeros((0, 3)), np.zeros((0, 2)), ())
    assert validate(mesh) == ["conformity: mesh has no triangles"]

# vim: set ts=4 sts=4 sw=4 tw=0:
