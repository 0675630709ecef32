#!/usr/bin/env python

import sys
import multiprocessing
from .main import main

if __name__ == "__main__":
    multiprocessing.freeze_support()
    sys.exit(main())

# vim: set ts=4 sts=4 sw=4 tw=0:
