# -*- coding: utf-8 -*-
# adjoint/__init__.py

from .adjoint import solveAdjoint, residualTrace

# vim: set ts=4 sts=4 sw=4 tw=0:
