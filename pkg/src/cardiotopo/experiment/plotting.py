# -*- coding: utf-8 -*-
# experiment/plotting.py

"""
Static PNG figures of the results, no interactive backend.
"""

import numpy as np
import matplotlib
matplotlib.use("Agg") # before pyplot is imported
import matplotlib.pyplot as plt
import matplotlib.tri as mtri

from ..utils import atomicPath

def _save(fig, filename):
    with atomicPath(filename) as tmpName:
        fig.savefig(tmpName, dpi = 150, format = "png")
    plt.close(fig)
    return filename

def plotGradientField(field, filename, inclusions = (), minima = None,
                      title = None):
    """Filled contours of G over the mesh, admissible region only, with
    the true inclusions as circles and the reported minima as crosses."""
    mesh = field.mesh
    values = np.where(field.mask, field.values, np.nan)
    fig, ax = plt.subplots(figsize = (7, 6))
    valid = field.mask[mesh.triangles].all(axis = 1)
    if valid.any():
        admissible = mtri.Triangulation(mesh.nodes[:, 0], mesh.nodes[:, 1],
                                        mesh.triangles, mask = ~valid)
        contours = ax.tricontourf(admissible, np.nan_to_num(values),
                                  levels = 30, cmap = "viridis")
        fig.colorbar(contours, ax = ax, label = "G")
    ax.triplot(mesh.triangulation(), color = "0.85", linewidth = .2)
    for inc in inclusions:
        ax.add_patch(plt.Circle(inc.center, inc.radius, fill = False,
                                color = "red", linewidth = 1.5))
    if minima is not None:
        for m in minima.minima:
            ax.plot(*m.point, marker = "x", color = "white", markersize = 9,
                    markeredgewidth = 2)
            ax.annotate(str(m.rank), m.point, color = "white",
                        xytext = (4, 4), textcoords = "offset points")
    ax.set_aspect("equal")
    ax.set_xlabel("x (cm)")
    ax.set_ylabel("y (cm)")
    if title:
        ax.set_title(title)
    return _save(fig, filename)

def plotRates(areas, norms, slopes, filename):
    """Log-log plot of the perturbation norms over the inclusion area with
    the fitted power laws. *norms*: dict of name to values."""
    fig, ax = plt.subplots(figsize = (6, 5))
    areas = np.asarray(areas, dtype = float)
    for name, values in norms.items():
        line, = ax.loglog(areas, values, "o", label = "{0} (slope {1:.2f})"
                          .format(name, slopes[name][0]))
        slope, offset = slopes[name]
        ax.loglog(areas, np.exp(offset) * areas**slope, "--",
                  color = line.get_color())
    ax.set_xlabel("inclusion area (cm$^2$)")
    ax.set_ylabel("norm of the potential perturbation")
    ax.grid(True, which = "both", alpha = .3)
    ax.legend()
    return _save(fig, filename)

# vim: set ts=4 sts=4 sw=4 tw=0:
