# -*- coding: utf-8 -*-
# log/stage.py

import time
import logging
import contextlib

from ..utils.error import AppError, StageError

@contextlib.contextmanager
def stage(name):
    """Logs duration of a pipeline stage and labels errors raised in it."""
    logging.info("stage '{0}' started".format(name))
    start = time.time()
    try:
        yield
    except StageError:
        raise
    except AppError as e:
        logging.error("stage '{0}' failed: {1}".format(name, e))
        raise StageError(name, e)
    logging.info("stage '{0}' finished in {1:.2f} s"
                 .format(name, time.time() - start))

# vim: set ts=4 sts=4 sw=4 tw=0:
