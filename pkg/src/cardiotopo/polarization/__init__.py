# -*- coding: utf-8 -*-
# polarization/__init__.py

from .polarization import polarizationDisk, polarizationField
from .oracle import transmissionOracle

# vim: set ts=4 sts=4 sw=4 tw=0:
