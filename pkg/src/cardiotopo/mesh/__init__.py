# -*- coding: utf-8 -*-
# mesh/__init__.py

from .mesh import Mesh, BoundaryRegion
from .validate import validate
from .pslg import (Pslg, unitSquare, rectangleMesh, annulusMesh, boxWithDisk,
                   maxEdgeLength)
from .ventricle import (VentricleGeometry, RefinementZone,
                        generateVentricleSection)

# vim: set ts=4 sts=4 sw=4 tw=0:
