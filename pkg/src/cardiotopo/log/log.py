# -*- coding: utf-8 -*-
# log/log.py

"""
Log handlers for the console and the per run log file.
"""

import os
import time
import logging

FORMATTER = logging.Formatter(
                fmt='%(asctime)s %(levelname)-8s %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S')

def formatter():
    """ISO 8601 time stamps, level and message."""
    return FORMATTER

def timestampFormat():
    """The log time format with characters safe for file names.
    >>> timestampFormat()
    '%Y-%m-%d_%H-%M-%S'
    """
    return str(FORMATTER.datefmt).translate(str.maketrans(" :", "_-"))

def timestamp():
    return time.localtime()

def timestampFormatted(ts = None):
    """
    >>> timestampFormatted() == time.strftime("%Y-%m-%d_%H-%M-%S")
    True
    """
    return time.strftime(timestampFormat(), ts or timestamp())

def addHandler(handler, level = logging.NOTSET):
    """Attaches the handler to the root logger with the common format."""
    if handler is None:
        return
    handler.setFormatter(FORMATTER)
    handler.setLevel(level)
    rootLogger = logging.getLogger()
    rootLogger.addHandler(handler)
    rootLogger.setLevel(logging.NOTSET)

def removeHandler(handler):
    logging.getLogger().removeHandler(handler)
    try:
        handler.close()
    except Exception:
        pass

def addLogFile(directory, prefix = "cardiotopo"):
    """Everything of this run goes to <prefix>_<timestamp>.log in
    *directory*. Returns the handler for removeHandler()."""
    filename = os.path.join(directory, "{0}_{1}.log"
                            .format(prefix, timestampFormatted()))
    handler = logging.FileHandler(filename, encoding = "utf8")
    addHandler(handler, logging.DEBUG)
    return handler

if __name__ == "__main__":
    import doctest
    doctest.testmod()

# vim: set ts=4 sts=4 sw=4 tw=0:
