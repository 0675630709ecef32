# -*- coding: utf-8 -*-
# monodomain/ionic_test.py

import numpy as np

from .ionic import AlievPanfilov, reactionEval

def testDefaults():
    params = AlievPanfilov()
    assert params.values() == dict(excitation = 8., threshold = .15,
                                   recovery = .05)
    assert abs(params.wMax() - 8. * 1.15**2 / 4.) < 1e-15
    assert params.rectangle()[0] == (0., 1.)

def testRestStates():
    params = AlievPanfilov()
    for u in (0., params.threshold(), 1.):
        f, g, fu, fw, gu, gw = reactionEval(u, 0., params)
        assert abs(f) < 1e-15
    assert params.f(0., 0.) == 0. and params.g(0., 0.) == 0.

def testDerivatives():
    params = AlievPanfilov(excitation = 6., threshold = .2, recovery = .1)
    rng = np.random.default_rng(3)
    u, w = rng.uniform(-.1, 1.1, 50), rng.uniform(0., 2., 50)
    f, g, fu, fw, gu, gw = reactionEval(u, w, params)
    assert np.allclose(f, params.f(u, w)) and np.allclose(g, params.g(u, w))
    h = 1e-6
    for exact, func, du, dw in ((fu, params.f, h, 0.), (fw, params.f, 0., h),
                                (gu, params.g, h, 0.), (gw, params.g, 0., h)):
        numeric = (func(u + du, w + dw) - func(u - du, w - dw)) / (2. * h)
        assert np.allclose(exact, numeric, rtol = 1e-6, atol = 1e-8)

def testEliminateW():
    params = AlievPanfilov()
    dt = .05
    u = np.linspace(0., 1., 11)
    wPrev = np.linspace(0., 2., 11)
    w, dwdu = params.eliminateW(u, wPrev, dt)
    # implicit Euler step of dw/dt + g(u, w) = 0
    assert np.allclose((w - wPrev) / dt + params.g(u, w), 0., atol = 1e-13)
    h = 1e-6
    numeric = (params.eliminateW(u + h, wPrev, dt)[0]
               - params.eliminateW(u - h, wPrev, dt)[0]) / (2. * h)
    assert np.allclose(dwdu, numeric, atol = 1e-8)

def testInRectangle():
    params = AlievPanfilov()
    assert params.inRectangle(np.array((0., 1.)), np.array((0., 2.)))
    assert not params.inRectangle(np.array((1.01, .5)), np.zeros(2))
    assert params.inRectangle(np.array((1.01, .5)), np.zeros(2),
                              margin = .02)
    assert not params.inRectangle(np.zeros(2), np.array((0., 2.7)))

# vim: set ts=4 sts=4 sw=4 tw=0:
