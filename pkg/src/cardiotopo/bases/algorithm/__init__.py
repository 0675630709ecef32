# -*- coding: utf-8 -*-
# bases/algorithm/__init__.py

from .algorithmbase import AlgorithmBase
from .parameter import (ParameterBase, ParameterFloat, ParameterNumerical,
                        ParameterBoolean, ParameterVector, ParameterString,
                        ParameterError, ParameterNameError, ValueRangeError)
from .parameter import factory as Parameter

# vim: set ts=4 sts=4 sw=4 tw=0:
