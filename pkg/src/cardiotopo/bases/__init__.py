# -*- coding: utf-8 -*-
# bases/__init__.py

# vim: set ts=4 sts=4 sw=4 tw=0:
