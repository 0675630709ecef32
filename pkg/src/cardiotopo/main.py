# -*- coding: utf-8 -*-
# main.py

import sys
import os
import os.path
import argparse
import logging
import traceback

from . import log, __version__
from .bases.algorithm import ParameterError
from .utils.error import AppError, ValidationError

def _config(args, dataDir = None):
    from .experiment import loadConfig
    from .experiment.synthetic import CONFIG_FILE
    filename = args.config
    if filename is None and dataDir is not None:
        # reconstruction defaults to the config stored with the data
        candidate = os.path.join(dataDir, CONFIG_FILE)
        if os.path.isfile(candidate):
            filename = candidate
    return loadConfig(filename, seed = args.seed, threads = args.threads)

def runMesh(args):
    from .datafile import loadMesh, saveMesh, saveVtk
    from .mesh import maxEdgeLength
    if args.validate is not None:
        try:
            mesh = loadMesh(args.validate)
        except ValidationError as e:
            for line in e.report:
                print(line)
            raise
        print("{0}: valid, max edge {1:.4g}".format(mesh,
                                                     maxEdgeLength(mesh)))
        return
    from .experiment import coarseMesh, fineMesh
    config = _config(args)
    config.validate()
    with log.stage("mesh"):
        meshes = dict(coarse = coarseMesh(config), fine = fineMesh(config))
    with log.stage("write"):
        for name, mesh in sorted(meshes.items()):
            saveMesh(mesh, os.path.join(args.out, name + ".mesh"))
            if config.vtk():
                saveVtk(os.path.join(args.out, name + ".vtk"), mesh,
                        configHash = config.hash())
            logging.info(str(mesh))

def runFibers(args):
    from .datafile import saveVtk
    from .experiment import HeartModel, coarseMesh
    config = _config(args)
    config.validate()
    with log.stage("mesh"):
        mesh = coarseMesh(config)
    with log.stage("fibers"):
        model = HeartModel(config, mesh)
    with log.stage("write"):
        saveVtk(os.path.join(args.out, "fibers.vtk"), mesh,
                model.pointData(), model.cellData(), config.hash())

def runForward(args):
    from .datafile import saveTrace, saveVtk
    from .experiment import HeartModel, coarseMesh, fineMesh
    config = _config(args)
    config.validate()
    with log.stage("mesh"):
        mesh = fineMesh(config) if args.fine else coarseMesh(config)
    with log.stage("fibers"):
        model = HeartModel(config, mesh)
    dt = config.dtFine() if args.fine else config.dtCoarse()
    with log.stage("forward"):
        trajectory = model.forward(dt, config.inclusions, role = "forward")
    with log.stage("write"):
        saveTrace(model.trace(trajectory), os.path.join(args.out,
                                                        "trace.csv"))
        if config.vtk():
            pointData = model.pointData()
            pointData.update(u = trajectory.u[-1], w = trajectory.w[-1])
            saveVtk(os.path.join(args.out, "forward.vtk"), mesh, pointData,
                    model.cellData(), config.hash())
        if config.checkpoints():
            trajectory.hdfStore(os.path.join(args.out, "forward_state.h5"))

def runSynth(args):
    from .experiment import generateSynthetic
    files = generateSynthetic(_config(args), args.out)
    for key, filename in sorted(files.items()):
        logging.info("{0}: {1}".format(key, filename))

def runNoise(args):
    from .datafile import loadTrace, saveTrace
    from .experiment import addNoise
    config = _config(args)
    trace = loadTrace(args.input)
    level = config.noiseLevel() if args.level is None else args.level
    saveTrace(addNoise(trace, level, config.seed()),
              os.path.join(args.out, args.output))

def runReconstruct(args):
    from .experiment import runReconstruction
    config = _config(args, args.data)
    result = runReconstruction(config, args.data, args.out)
    sys.stdout.write(result.report(config))

def runRates(args):
    from .experiment import rateStudy
    rows, slopes = rateStudy(_config(args), args.radii, args.out,
                             args.threads)
    for name, (slope, _) in sorted(slopes.items()):
        print("{0}: slope {1:.4f}".format(name, slope))

def makeParser():
    parser = argparse.ArgumentParser(prog = "cardiotopo",
        description = "Detection of ischemic regions in a cardiac "
                      "cross section from boundary potentials")
    parser.add_argument("--version", action = "version",
                        version = "%(prog)s " + __version__)
    parser.add_argument("-c", "--config", metavar = "FILE",
                        help = "INI file with the experiment settings, "
                               "defaults are used for missing keys")
    parser.add_argument("-o", "--out", metavar = "DIR", default = ".",
                        help = "Output directory, created if missing")
    parser.add_argument("-s", "--seed", type = int,
                        help = "Seed of the noise generator")
    parser.add_argument("-t", "--threads", type = int,
                        help = "Worker processes for independent runs")
    parser.add_argument("-v", "--verbose", action = "store_true",
                        help = "Log debug messages to the console")
    commands = parser.add_subparsers(dest = "command", metavar = "COMMAND")
    commands.required = True
    cmd = commands.add_parser("mesh", help = "Generate the coarse and the "
                              "fine mesh or validate a mesh file")
    cmd.add_argument("--validate", metavar = "FILE",
                     help = "Validate the given mesh file and print the "
                            "report")
    cmd.set_defaults(func = runMesh)
    cmd = commands.add_parser("fibers", help = "Fiber field and "
                              "conductivity of the coarse mesh")
    cmd.set_defaults(func = runFibers)
    cmd = commands.add_parser("forward", help = "Forward solve with the "
                              "configured inclusions")
    cmd.add_argument("--fine", action = "store_true",
                     help = "Use the fine discretization")
    cmd.set_defaults(func = runForward)
    cmd = commands.add_parser("synth", help = "Generate synthetic "
                              "measurements")
    cmd.set_defaults(func = runSynth)
    cmd = commands.add_parser("noise", help = "Add Gaussian noise to a "
                              "trace file")
    cmd.add_argument("input", metavar = "TRACE", help = "Trace CSV file")
    cmd.add_argument("--level", type = float,
                     help = "Noise level in [0, 1], defaults to the config")
    cmd.add_argument("--output", default = "noisy.csv", metavar = "NAME",
                     help = "Name of the file written to the output "
                            "directory")
    cmd.set_defaults(func = runNoise)
    cmd = commands.add_parser("reconstruct", help = "Locate inclusions "
                              "from synthetic measurements")
    cmd.add_argument("data", metavar = "DIR",
                     help = "Directory written by 'synth'")
    cmd.set_defaults(func = runReconstruct)
    cmd = commands.add_parser("rates", help = "Convergence study for "
                              "shrinking inclusions")
    cmd.add_argument("--radii", type = float, nargs = "+", metavar = "R",
                     help = "Inclusion radii, strictly decreasing")
    cmd.set_defaults(func = runRates)
    return parser

def main(argv = None):
    args = makeParser().parse_args(argv)
    console = logging.StreamHandler(sys.stderr)
    log.addHandler(console, logging.DEBUG if args.verbose else logging.INFO)
    logFile = None
    try:
        if not os.path.isdir(args.out):
            os.makedirs(args.out)
        logFile = log.addLogFile(args.out)
        logging.info("cardiotopo {0}: {1}".format(__version__, args.command))
        args.func(args)
    except (AppError, ParameterError) as e:
        logging.error(str(e))
        return 1
    except Exception:
        # show detailed error traceback if there was one
        logging.error(traceback.format_exc())
        return 2
    finally:
        if logFile is not None:
            log.removeHandler(logFile)
        log.removeHandler(console)
    return 0

# vim: set ts=4 sts=4 sw=4 tw=0:
