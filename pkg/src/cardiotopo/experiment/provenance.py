# -*- coding: utf-8 -*-
# experiment/provenance.py

"""
Records tying output files to the configuration they were made with:
the provenance sidecar of synthetic data and the manifest of a run.
"""

import os
import sys
import json
import time

from .. import __version__
from ..utils import atomicOpen, testfor
from ..utils.error import ProvenanceError, FileError

PROVENANCE_FILE = "provenance.json"
MANIFEST_FILE = "manifest.txt"

def writeProvenance(outDir, config, **info):
    """Writes the sidecar with config hash, seed, noise and discretization
    settings and the inclusions, plus further *info*."""
    record = dict(configHash = config.hash(), seed = config.seed(),
                  noiseLevel = config.noiseLevel(),
                  fine = dict(h = config.hFine(), dt = config.dtFine(),
                              hInclusion = config.hInclusion()),
                  coarse = dict(h = config.hCoarse(), dt = config.dtCoarse()),
                  inclusions = [inc.toDict() for inc in config.inclusions],
                  version = __version__)
    record.update(info)
    filename = os.path.join(outDir, PROVENANCE_FILE)
    with atomicOpen(filename, 'w') as fd:
        fd.write(json.dumps(record, indent = 2, sort_keys = True) + "\n")
    return filename

def readProvenance(dirOrFile):
    filename = dirOrFile
    if os.path.isdir(filename):
        filename = os.path.join(filename, PROVENANCE_FILE)
    try:
        with open(filename, 'r') as fd:
            return json.load(fd)
    except (IOError, ValueError) as e:
        raise FileError("Could not read provenance record: {0}".format(e),
                        filename)

def checkProvenance(dirOrFile, configHash):
    """Raises ProvenanceError unless the recorded hash is *configHash*."""
    record = readProvenance(dirOrFile)
    testfor(record.get("configHash") == configHash, ProvenanceError,
            "Data in '{0}' was made with config hash {1}, the running config "
            "has {2}!".format(dirOrFile, record.get("configHash"),
                              configHash))
    return record

class Manifest(object):
    """Command, version, config hash, seed, timestamps and the written
    files of one run."""

    def __init__(self, config, command = None):
        self.command = command or " ".join(sys.argv)
        self.configHash = config.hash()
        self.seed = config.seed()
        self.started = time.strftime("%Y-%m-%d %H:%M:%S")
        self.files = []

    def add(self, *filenames):
        for filename in filenames:
            if filename is not None and filename not in self.files:
                self.files.append(filename)
        return filenames[0] if len(filenames) == 1 else filenames

    def write(self, outDir):
        filename = os.path.join(outDir, MANIFEST_FILE)
        lines = ["command: {0}".format(self.command),
                 "version: {0}".format(__version__),
                 "config_hash: {0}".format(self.configHash),
                 "seed: {0}".format(self.seed),
                 "started: {0}".format(self.started),
                 "finished: {0}".format(time.strftime("%Y-%m-%d %H:%M:%S")),
                 "files:"]
        for path in self.files:
            size = os.path.getsize(path) if os.path.exists(path) else 0
            lines.append("  {0} {1}".format(os.path.relpath(path, outDir),
                                            size))
        with atomicOpen(filename, 'w') as fd:
            fd.write("\n".join(lines) + "\n")
        return filename

# vim: set ts=4 sts=4 sw=4 tw=0:
