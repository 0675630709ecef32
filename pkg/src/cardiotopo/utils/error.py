# -*- coding: utf-8 -*-
# utils/error.py

"""
Error classes. Everything raised on purpose by this package derives from
AppError, so the command line front end can report it without traceback.
"""

class AppError(Exception):
    msg = ""
    """
    General error with descriptive message to be forwarded and shown to
    the user.
    """
    def __init__(self, msg = ""):
        Exception.__init__(self, self.getMessage(msg))

    @classmethod
    def getMessage(cls, msg = ""):
        if len(msg) == 0:
            return cls.msg
        return msg

class FileError(AppError):
    def __init__(self, msg, fn):
        self.filename = fn
        AppError.__init__(self,
            "{0}\n\n'{1}'".format(msg, fn))

class ParseError(FileError):
    """Malformed input file, reports the offending line (1-based)."""
    def __init__(self, msg, fn, lineNumber = None):
        self.lineNumber = lineNumber
        if lineNumber is not None:
            msg = "line {0}: {1}".format(lineNumber, msg)
        FileError.__init__(self, msg, fn)

class GeometryError(AppError):
    msg = "Invalid geometry parameters!"

class MeshingError(AppError):
    msg = "Triangulation failed!"

class ValidationError(AppError):
    """A mesh violates its invariants. *report* lists all violations."""
    def __init__(self, report, msg = "Mesh validation failed"):
        self.report = list(report)
        AppError.__init__(self, "{0}:\n  {1}".format(
            msg, "\n  ".join(self.report)))

class ConfigurationError(AppError):
    pass

class ParameterValueError(AppError):
    pass

class DegenerateGradientError(AppError):
    def __init__(self, element, norm):
        self.element = element
        AppError.__init__(self,
            "Potential gradient vanishes on element {0} (|grad| = {1:.3g})!"
            .format(element, norm))

class AssumptionError(AppError):
    pass

class InclusionError(AppError):
    pass

class SolverError(AppError):
    """Linear solver failure, *residual* is the final relative residual."""
    def __init__(self, msg = "", residual = None):
        self.residual = residual
        if residual is not None:
            msg = "{0} (relative residual {1:.3e})".format(msg, residual)
        AppError.__init__(self, msg)

class NewtonError(SolverError):
    def __init__(self, step, residual, iterations):
        self.step = step
        SolverError.__init__(self,
            "Newton iteration did not converge in time step {0} "
            "after {1} iterations".format(step, iterations),
            residual = residual)

class GridMismatchError(AppError):
    pass

class ProvenanceError(AppError):
    pass

class OracleError(AppError):
    pass

class StageError(AppError):
    """An AppError re-raised by the pipeline with the failing stage name."""
    def __init__(self, stage, error):
        self.stage = stage
        self.cause = error
        AppError.__init__(self, "[{0}] {1}: {2}".format(
            stage, type(error).__name__, error))

# vim: set ts=4 sts=4 sw=4 tw=0:
