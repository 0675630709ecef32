# -*- coding: utf-8 -*-
# mesh/validate.py

import numpy as np

def _orientationReport(mesh, limit):
    area = mesh.signedAreas()
    bad = np.flatnonzero(~(area > 0.))
    if not len(bad):
        return []
    return ["orientation: {0} triangle(s) with nonpositive signed area, "
            "e.g. {1}".format(len(bad), ", ".join(str(i)
                                                  for i in bad[:limit]))]

def _indexReport(mesh):
    n = mesh.nodeCount
    report = []
    for name, arr in (("triangles", mesh.triangles),
                      ("boundary", mesh.boundaryEdges)):
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            report.append("indices: {0} reference nodes outside [0, {1})"
                          .format(name, n))
    return report

def _conformityReport(mesh, limit):
    report = []
    t = mesh.triangles
    degenerate = ((t[:, 0] == t[:, 1]) | (t[:, 1] == t[:, 2])
                  | (t[:, 0] == t[:, 2]))
    if degenerate.any():
        report.append("conformity: {0} triangle(s) repeat a node"
                      .format(degenerate.sum()))
    _, counts = np.unique(np.sort(t, axis = 1), axis = 0,
                          return_counts = True)
    if (counts > 1).any():
        report.append("conformity: {0} duplicated triangle(s)"
                      .format((counts > 1).sum()))
    # each directed edge at most once, interior edges in opposite directions
    directed = mesh.directedEdges()
    _, dcounts = np.unique(directed, axis = 0, return_counts = True)
    if (dcounts > 1).any():
        report.append("conformity: {0} edge(s) listed twice with the same "
                      "orientation".format((dcounts > 1).sum()))
    edges, ucounts = np.unique(np.sort(directed, axis = 1), axis = 0,
                               return_counts = True)
    if (ucounts > 2).any():
        bad = edges[ucounts > 2][:limit]
        report.append("conformity: {0} edge(s) shared by more than two "
                      "triangles, e.g. {1}".format((ucounts > 2).sum(),
                          ", ".join("({0} {1})".format(*e) for e in bad)))
    used = np.zeros(mesh.nodeCount, dtype = bool)
    used[t.ravel()] = True
    if not used.all():
        report.append("conformity: {0} node(s) not used by any triangle"
                      .format((~used).sum()))
    return report

def _boundaryReport(mesh, limit):
    from .mesh import BoundaryRegion
    report = []
    tags = mesh.boundaryTags
    if len(tags) != len(mesh.boundaryEdges):
        return ["boundary: {0} edges but {1} tags"
                .format(len(mesh.boundaryEdges), len(tags))]
    known = np.isin(tags, [int(r) for r in BoundaryRegion])
    if not known.all():
        report.append("boundary: {0} edge(s) with unknown region tag"
                      .format((~known).sum()))
    given = np.sort(mesh.boundaryEdges, axis = 1)
    uniq, counts = np.unique(given, axis = 0, return_counts = True)
    if (counts > 1).any():
        report.append("boundary: {0} edge(s) tagged more than once"
                      .format((counts > 1).sum()))
    topo = mesh.topologicalBoundaryEdges()
    asSet = lambda arr: set(map(tuple, arr.tolist()))
    missing = asSet(topo) - asSet(uniq)
    extra = asSet(uniq) - asSet(topo)
    if missing:
        report.append("boundary: {0} topological boundary edge(s) without "
                      "tag, e.g. {1}".format(len(missing),
                          ", ".join(str(e) for e in sorted(missing)[:limit])))
    if extra:
        report.append("boundary: {0} tagged edge(s) not on the boundary, "
                      "e.g. {1}".format(len(extra),
                          ", ".join(str(e) for e in sorted(extra)[:limit])))
    return report

def validate(mesh, limit = 5):
    """Checks the mesh invariants and returns a list of human readable
    violations, empty if the mesh is valid. Never raises on bad data."""
    report = []
    if not np.isfinite(mesh.nodes).all():
        report.append("coordinates: {0} non-finite node coordinate(s)"
                      .format((~np.isfinite(mesh.nodes)).sum()))
    if (mesh.elementMarkers is not None
        and len(mesh.elementMarkers) != mesh.triangleCount):
        report.append("markers: {0} element markers for {1} triangles"
                      .format(len(mesh.elementMarkers), mesh.triangleCount))
    indexReport = _indexReport(mesh)
    report += indexReport
    if len(indexReport) or not mesh.triangleCount:
        if not mesh.triangleCount:
            report.append("conformity: mesh has no triangles")
        return report # topology checks need valid indices
    report += _orientationReport(mesh, limit)
    report += _conformityReport(mesh, limit)
    report += _boundaryReport(mesh, limit)
    return report

# vim: set ts=4 sts=4 sw=4 tw=0:
