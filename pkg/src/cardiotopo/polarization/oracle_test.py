# -*- coding: utf-8 -*-
# polarization/oracle_test.py

import numpy as np
from nose.tools import raises
from nose.plugins.attrib import attr

from .oracle import transmissionOracle
from .polarization import polarizationDisk
from ..utils.error import OracleError

def _rotation(degrees):
    a = np.radians(degrees)
    return np.array(((np.cos(a), -np.sin(a)), (np.sin(a), np.cos(a))))

def _agree(K0, K1, tol = .02, **kwargs):
    expected = polarizationDisk(K0, K1)
    M = transmissionOracle(K0, K1, **kwargs)
    scale = np.abs(expected).max()
    assert np.abs(M - expected).max() <= tol * scale, (M, expected)
    return M

@attr('slow')
def testIsotropicAgreement():
    M = _agree(1.2 * np.eye(2), .2308 * np.eye(2))
    assert abs(M[0, 0] - 1.6774) < .02 * 1.6774

@attr('slow')
def testAnisotropicAgreement():
    _agree(np.diag((1.2, .2538)), np.diag((.2308, .0062)))

@attr('slow')
def testRotatedAgreement():
    for degrees in (30., 60.):
        R = _rotation(degrees)
        _agree(R @ np.diag((1.2, .2538)) @ R.T,
               R @ np.diag((.2308, .0062)) @ R.T)

@attr('slow')
def testScaleInvariance():
    K0, K1 = np.diag((1.2, .2538)), np.diag((.2308, .0062))
    small = transmissionOracle(K0, K1, radius = .5)
    large = transmissionOracle(K0, K1, radius = 1.)
    assert np.abs(small - large).max() <= .01 * np.abs(large).max()

@raises(OracleError)
def testBoxTooSmall():
    transmissionOracle(np.eye(2), .5 * np.eye(2), radius = 1., boxSize = 10.)

@raises(OracleError)
def testUnderResolved():
    transmissionOracle(np.eye(2), .5 * np.eye(2), radius = 1., hOracle = .2)

# vim: set ts=4 sts=4 sw=4 tw=0:
