# -*- coding: utf-8 -*-
# monodomain/ionic.py

import numpy as np

from ..bases.algorithm import AlgorithmBase, Parameter

class AlievPanfilov(AlgorithmBase):
    r"""Two variable phenomenological ionic model with the reaction terms

    :math:`f(u, w) = A u (u - a) (u - 1) + u w`

    :math:`g(u, w) = \epsilon (A u (u - 1 - a) + w)`

    of the system :math:`\partial_t u + f = \nabla \cdot K \nabla u`,
    :math:`\partial_t w + g = 0`.
    """
    shortName = "Aliev-Panfilov"
    parameters = (
        Parameter("excitation", 8.0, valueRange = (0., 1e6),
                  exclusive = True, displayName = "excitation strength A"),
        Parameter("threshold", 0.15, valueRange = (0., 1.),
                  exclusive = True, displayName = "excitation threshold a"),
        Parameter("recovery", 0.05, valueRange = (0., 1e6),
                  exclusive = True, displayName = "recovery rate epsilon"),
    )

    def wMax(self):
        """Upper w bound of the invariant rectangle."""
        return self.excitation() * (self.threshold() + 1.)**2 / 4.

    def rectangle(self):
        """Invariant rectangle ((uMin, uMax), (wMin, wMax)) of the
        model, states starting inside stay inside."""
        return ((0., 1.), (0., self.wMax()))

    def inRectangle(self, u, w, margin = 0.):
        (ulo, uhi), (wlo, whi) = self.rectangle()
        return bool(np.all(u >= ulo - margin) and np.all(u <= uhi + margin)
                    and np.all(w >= wlo - margin)
                    and np.all(w <= whi + margin))

    def f(self, u, w):
        A, a = self.excitation(), self.threshold()
        return A * u * (u - a) * (u - 1.) + u * w

    def g(self, u, w):
        A, a, eps = self.excitation(), self.threshold(), self.recovery()
        return eps * (A * u * (u - 1. - a) + w)

    def eliminateW(self, u, wPrev, dt):
        """Implicit Euler step of the w equation solved for w, with the
        derivative dw/du."""
        A, a, eps = self.excitation(), self.threshold(), self.recovery()
        denom = 1. + dt * eps
        w = (wPrev - dt * eps * A * u * (u - 1. - a)) / denom
        dwdu = -dt * eps * A * (2. * u - 1. - a) / denom
        return w, dwdu

AlievPanfilov.factory()

def reactionEval(u, w, params = None):
    """Reaction terms and their exact partial derivatives:
    (f, g, f_u, f_w, g_u, g_w)."""
    if params is None:
        params = AlievPanfilov()
    A, a, eps = params.excitation(), params.threshold(), params.recovery()
    u = np.asarray(u, dtype = float)
    w = np.asarray(w, dtype = float)
    f = A * u * (u - a) * (u - 1.) + u * w
    g = eps * (A * u * (u - 1. - a) + w)
    fu = A * (3. * u**2 - 2. * (1. + a) * u + a) + w
    fw = u
    gu = eps * A * (2. * u - 1. - a)
    gw = eps * np.ones_like(w)
    return f, g, fu, fw, gu, gw

# vim: set ts=4 sts=4 sw=4 tw=0:
