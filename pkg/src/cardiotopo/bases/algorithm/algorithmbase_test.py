# -*- coding: utf-8 -*-
# bases/algorithm/algorithmbase_test.py

from nose.tools import raises, assert_raises

from .algorithmbase import AlgorithmNameError, AlgorithmParameterError
from . import AlgorithmBase, Parameter, ValueRangeError

Threshold = Parameter("threshold", 0.15, valueRange = (0., 1.),
                      exclusive = True)
Steepness = Parameter("steepness", 8.0, valueRange = (0., 100.))

@raises(AlgorithmNameError)
def testFactoryRequired():
    class Kinetics(AlgorithmBase):
        pass
    Kinetics()

def testNoParameters():
    class Kinetics(AlgorithmBase):
        pass
    assert Kinetics.factory("kinetics")().params() == []

@raises(AlgorithmParameterError)
def testParameterTypesOnly():
    class Kinetics(AlgorithmBase):
        pass
    Kinetics.factory("kinetics", "threshold")

def testTypeVsInstance():
    class Kinetics(AlgorithmBase):
        pass
    ktype = Kinetics.factory("kinetics", Threshold)
    kinst = ktype()
    assert ktype.name() == kinst.name() == "kinetics"
    assert type(ktype.threshold) is type
    assert type(kinst.threshold) is Threshold
    kinst.threshold.setValue(0.13)
    assert ktype.threshold.value() == 0.15
    assert ktype().threshold() == 0.15

def testDeclaredParameters():
    class Kinetics(AlgorithmBase):
        shortName = "AP"
        parameters = (Threshold, Steepness)
    class Scaled(Kinetics):
        parameters = (Parameter("scale", 2.0, valueRange = (0., 10.)),
                      Steepness)
    Kinetics.factory()
    Scaled.factory()
    assert Kinetics.name() == "AP"
    assert Kinetics().paramNames() == ["threshold", "steepness"]
    assert Scaled().paramNames() == ["threshold", "steepness", "scale"]

def testConfigure():
    class Kinetics(AlgorithmBase):
        pass
    ktype = Kinetics.factory("kinetics", Threshold, Steepness)
    kinst = ktype(threshold = 0.1)
    assert kinst.values() == {"threshold": 0.1, "steepness": 8.0}
    with assert_raises(ValueRangeError):
        kinst.configure(threshold = 1.)
    with assert_raises(AlgorithmParameterError):
        kinst.configure(epsilon = 0.01)
    assert "threshold: 0.1" in str(kinst)

def testEquality():
    class Kinetics(AlgorithmBase):
        pass
    ktype = Kinetics.factory("kinetics", Threshold)
    assert ktype() == ktype()
    assert ktype(threshold = 0.2) != ktype()

# vim: set ts=4 sts=4 sw=4 tw=0:
