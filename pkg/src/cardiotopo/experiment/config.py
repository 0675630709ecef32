# -*- coding: utf-8 -*-
# experiment/config.py

"""
Experiment configuration: every setting is a parameter declared with its
default and range in *experimentparameters.json*, grouped in sections.
Config files are INI files with the same sections plus one
``[inclusion <label>]`` section per inclusion::

    [measurement]
    regions = EPI, ENDO_LV

    [inclusion septum]
    center = 2.25, 0.0
    radius = 0.15
"""

import os
import json
import hashlib
import logging
import configparser

from ..bases.algorithm import AlgorithmBase, Parameter, ParameterError
from ..mesh import BoundaryRegion, VentricleGeometry
from ..monodomain import AlievPanfilov, Inclusion, NewtonOptions
from ..monodomain.inclusion import checkInclusions
from ..fem import SolverOptions
from ..utils import testfor, atomicOpen, formatFloat
from ..utils.error import ConfigurationError, ParseError, FileError

PARAM_DEF_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                              "experimentparameters.json")
INCLUSION_PREFIX = "inclusion"
# output switches and the worker count do not change results
HASH_EXCLUDE = ("output.vtk", "output.plots", "output.checkpoints",
                "run.threads")

def loadParameters(filename = PARAM_DEF_FILE):
    """Parameter types from the JSON definitions and the section of each
    parameter by name."""
    try:
        with open(filename, 'r') as jfile:
            definitions = json.load(jfile)
    except (IOError, ValueError) as e:
        raise FileError("Could not load parameter definitions: {0}"
                        .format(e), filename)
    parameters, sections = [], dict()
    for section, entries in definitions.items():
        for name, attributes in entries.items():
            attributes = dict(attributes)
            default = attributes.pop("default")
            if isinstance(default, list):
                default = tuple(default)
            parameters.append(Parameter(name, default, **attributes))
            sections[name] = section
            logging.debug("parameter {0}.{1} defined".format(section, name))
    return parameters, sections

class ExperimentConfig(AlgorithmBase):
    """All settings of a synthetic experiment or reconstruction run and
    the list of inclusions."""
    shortName = "experiment"
    parameters, sections = loadParameters()

    def __init__(self, inclusions = (), **values):
        self.inclusions = list(inclusions)
        super(ExperimentConfig, self).__init__(**values)

    @classmethod
    def sectionNames(cls):
        names = []
        for p in cls.params():
            section = cls.sections[p.name()]
            if section not in names:
                names.append(section)
        return names

    @classmethod
    def paramsOf(cls, section):
        return [p.name() for p in cls.params()
                if cls.sections[p.name()] == section]

    # reading and writing

    @classmethod
    def fromIni(cls, filename):
        """Reads an INI file, unknown sections and keys are refused."""
        parser = configparser.ConfigParser(interpolation = None)
        parser.optionxform = str # keys are case sensitive
        try:
            with open(filename, 'r') as fd:
                parser.read_file(fd)
        except IOError:
            raise FileError("Could not read config file!", filename)
        except configparser.MissingSectionHeaderError as e:
            raise ParseError("entry outside of a section", filename,
                             e.lineno)
        except configparser.ParsingError as e:
            lineNumber = e.errors[0][0] if len(e.errors) else None
            raise ParseError("malformed config file", filename, lineNumber)
        except configparser.Error as e:
            raise ParseError(str(e).splitlines()[0], filename,
                             getattr(e, "lineno", None))
        config = cls()
        for section in parser.sections():
            items = parser.items(section)
            if section.startswith(INCLUSION_PREFIX + " "):
                config.inclusions.append(
                    cls._parseInclusion(section, dict(items), filename))
                continue
            testfor(section in cls.sectionNames(), ConfigurationError,
                    "Unknown section [{0}] in '{1}'".format(section, filename))
            for key, text in items:
                testfor(key in cls.paramsOf(section), ConfigurationError,
                        "Unknown key '{0}' in section [{1}] of '{2}'"
                        .format(key, section, filename))
                param = getattr(config, key)
                param.setValue(param.parse(text))
        logging.info("loaded config '{0}' with {1} inclusion(s)"
                     .format(filename, len(config.inclusions)))
        return config

    @staticmethod
    def _parseInclusion(section, items, filename):
        label = section[len(INCLUSION_PREFIX):].strip()
        testfor(set(items) == set(("center", "radius")), ConfigurationError,
                "Section [{0}] of '{1}' needs exactly the keys center and "
                "radius".format(section, filename))
        try:
            center = [float(v) for v in items["center"].split(",")]
            radius = float(items["radius"])
        except ValueError:
            raise ConfigurationError("Section [{0}] of '{1}': center or "
                                     "radius is not numeric"
                                     .format(section, filename))
        return Inclusion(center, radius, label = label)

    def listing(self):
        """Canonical 'section.key = value' lines of all settings."""
        lines = ["{0}.{1} = {2}".format(self.sections[p.name()], p.name(),
                                         p.format())
                 for p in self.params()]
        for inc in self.inclusions:
            lines.append("inclusion.{0} = {1}, {2}, {3}".format(inc.label,
                formatFloat(inc.center[0]), formatFloat(inc.center[1]),
                formatFloat(inc.radius)))
        return lines

    def hash(self):
        """Provenance key: SHA-256 of the canonical listing without the
        settings which do not change any result."""
        text = "\n".join(sorted(line for line in self.listing()
                                if line.split(" = ")[0] not in HASH_EXCLUDE))
        return hashlib.sha256(text.encode("utf8")).hexdigest()

    def toIni(self, filename):
        out = []
        for section in self.sectionNames():
            out.append("[{0}]".format(section))
            out += ["{0} = {1}".format(name, getattr(self, name).format())
                    for name in self.paramsOf(section)]
            out.append("")
        for inc in self.inclusions:
            out += ["[{0} {1}]".format(INCLUSION_PREFIX, inc.label),
                    "center = {0}, {1}".format(formatFloat(inc.center[0]),
                                               formatFloat(inc.center[1])),
                    "radius = {0}".format(formatFloat(inc.radius)), ""]
        with atomicOpen(filename, 'w') as fd:
            fd.write("\n".join(out))
        return filename

    # typed views of the settings

    def geometry(self):
        return VentricleGeometry(**dict((name, self.value(name))
                                        for name in self.paramsOf("geometry")))

    def ionic(self):
        return AlievPanfilov(**dict((name, self.value(name))
                                    for name in self.paramsOf("ionic")))

    def newton(self):
        return NewtonOptions(tol = self.newtonTol(),
                             maxIterations = self.newtonMaxIterations())

    def solverOptions(self):
        return SolverOptions(method = self.solver())

    def measuredRegions(self):
        return BoundaryRegion.parseSet(self.regions())

    def value(self, name):
        """Value of the parameter *name*."""
        return getattr(self, name)()

    # checks

    def validate(self):
        """Cross field checks, raises ConfigurationError or one of the
        geometry and inclusion errors before anything is solved."""
        testfor(self.hFine() < self.hCoarse(), ConfigurationError,
                "The fine mesh size {0} has to be below the coarse one {1}!"
                .format(self.hFine(), self.hCoarse()))
        testfor(self.hInclusion() <= self.hFine(), ConfigurationError,
                "The inclusion mesh size has to be at most the fine one!")
        testfor(self.dtFine() < self.dtCoarse(), ConfigurationError,
                "The fine time step {0} has to be below the coarse one {1}!"
                .format(self.dtFine(), self.dtCoarse()))
        for dt in (self.dtCoarse(), self.dtFine()):
            count = self.endTime() / dt
            testfor(abs(count - round(count)) <= 1e-9 * count,
                    ConfigurationError, "The time horizon {0} is not a "
                    "multiple of the time step {1}!".format(self.endTime(), dt))
        healthy, ischemic = self.healthy(), self.ischemic()
        testfor(all(k > 0 for k in healthy + ischemic), ConfigurationError,
                "Conductivities have to be positive!")
        testfor(ischemic[0] <= healthy[0] and ischemic[1] <= healthy[1],
                ConfigurationError, "The ischemic conductivity {0} exceeds "
                "the healthy one {1}!".format(ischemic, healthy))
        testfor(healthy[0] >= healthy[1] and ischemic[0] >= ischemic[1],
                ConfigurationError, "Conductivities along fibers have to be "
                "at least the transverse ones!")
        radii = self.radii()
        testfor(all(a > b for a, b in zip(radii[:-1], radii[1:]))
                and min(radii) > 0, ConfigurationError,
                "Rate study radii have to be positive and strictly "
                "decreasing!")
        self.measuredRegions()
        geometry = self.geometry().check()
        checkInclusions(self.inclusions, self.separation(),
                        geometry.boundaryDistance, geometry.contains)
        labels = [inc.label for inc in self.inclusions]
        testfor(len(set(labels)) == len(labels), ConfigurationError,
                "Inclusion labels have to be unique!")
        return self

ExperimentConfig.factory()

def loadConfig(filename = None, **overrides):
    """Config from file (defaults without one), values given by keyword
    override the file."""
    config = ExperimentConfig() if filename is None else (
        ExperimentConfig.fromIni(filename))
    for key, value in overrides.items():
        if value is None:
            continue
        try:
            config.configure(**{key: value})
        except ParameterError as e:
            raise ConfigurationError(str(e))
    return config

# vim: set ts=4 sts=4 sw=4 tw=0:
