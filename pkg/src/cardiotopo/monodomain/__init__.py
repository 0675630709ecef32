# -*- coding: utf-8 -*-
# monodomain/__init__.py

from .ionic import AlievPanfilov, reactionEval
from .stimulus import initialStimulus
from .inclusion import Inclusion, Indicator, indicatorField, checkInclusions
from .trajectory import (StateTrajectory, AdjointTrajectory, timeGrid,
                         trapezoidWeights)
from .forward import solveForward, solveLinearizedForward, NewtonOptions
from .trace import TraceSeries, boundaryTrace

# vim: set ts=4 sts=4 sw=4 tw=0:
