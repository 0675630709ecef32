# -*- coding: utf-8 -*-
# topo/__init__.py

from .gradient import (mismatchJ, assembleGradientField, GradientField,
                       admissibleMask)
from .localize import locateMinima, LocalizationResult, Minimum

# vim: set ts=4 sts=4 sw=4 tw=0:
