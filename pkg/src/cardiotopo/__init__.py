# -*- coding: utf-8 -*-
# __init__.py

"""
Detection of small ischemic inclusions in a 2D cardiac section from
boundary potentials, based on the topological gradient of a monodomain
mismatch functional.
"""

__version__ = "0.3.0"

# vim: set ts=4 sts=4 sw=4 tw=0:
