# -*- coding: utf-8 -*-
# log/__init__.py

from .log import (timestampFormat, timestamp, timestampFormatted, formatter,
                  addHandler, removeHandler, addLogFile)
from .stage import stage

# vim: set ts=4 sw=4 sts=4 tw=0:
