# -*- coding: utf-8 -*-
# bases/algorithm/algorithmbase.py

from ...utils import testfor, assertName
from ...utils.mixedmethod import mixedmethod
from .parameter import ParameterBase

class AlgorithmError(Exception):
    pass

class AlgorithmNameError(AlgorithmError):
    pass

class AlgorithmParameterError(AlgorithmError):
    pass

# factory() installs the parameter types as class attributes, __init__()
# replaces them by instances. A changed type value is the default for all
# instances created afterwards:
#   AlievPanfilov.threshold.setValue(0.1)   # class default
#   model = AlievPanfilov()
#   model.threshold.setValue(0.13)          # this instance only

class AlgorithmBase(object):
    """Base class for parameterized models and configurations."""
    _name = None # used in logs and files
    _parameters = None # parameter types on the class, instances on objects

    @classmethod
    def setName(cls, name):
        assertName(name, AlgorithmNameError)
        cls._name = name

    @classmethod
    def name(cls):
        return cls._name

    @classmethod
    def setParams(cls, *parameters):
        cls._parameters = []
        for i, p in enumerate(parameters):
            testfor(isinstance(p, type) and issubclass(p, ParameterBase),
                    AlgorithmParameterError, "{name}: parameter {index} is "
                    "not a ParameterBase type but {type}!"
                    .format(name = cls.__name__, index = i, type = p))
            cls.setParam(p)

    @mixedmethod
    def setParam(selforcls, p):
        """Adds the parameter as attribute named like it, an existing one
        of that name is replaced in place."""
        names = [q.name() for q in selforcls._parameters]
        if p.name() in names:
            selforcls._parameters[names.index(p.name())] = p
        else:
            selforcls._parameters.append(p)
        setattr(selforcls, p.name(), p)

    @mixedmethod
    def params(selforcls):
        return list(selforcls._parameters or ())

    @mixedmethod
    def paramNames(selforcls):
        return [p.name() for p in selforcls.params()]

    @classmethod
    def factory(cls, name = None, *parameters):
        """Sets the class up with the given parameter types. Without any,
        the *parameters* declared by the class and its bases are used,
        base classes first."""
        if name is None:
            name = getattr(cls, "shortName", cls.__name__)
        cls.setName(name)
        if not len(parameters):
            parameters = []
            for baseCls in reversed(cls.__mro__):
                names = [p.name() for p in parameters]
                declared = baseCls.__dict__.get("parameters", ())
                parameters += [p for p in declared if p.name() not in names]
        cls.setParams(*parameters)
        return cls

    def __init__(self, **values):
        """Every instance owns its parameters, keyword arguments set their
        values."""
        testfor(self._name is not None, AlgorithmNameError,
                "{0} has no name, call factory() first!"
                .format(type(self).__name__))
        testfor(self._parameters is not None, AlgorithmParameterError,
                "{0} has no parameters, call factory() first!"
                .format(type(self).__name__))
        paramTypes = self.params()
        self._parameters = []
        for ptype in paramTypes:
            self.setParam(ptype())
        self.configure(**values)

    def configure(self, **values):
        """Sets the values of the named parameters."""
        for key, value in values.items():
            p = getattr(self, key, None)
            testfor(isinstance(p, ParameterBase), AlgorithmParameterError,
                    "{0} has no parameter '{1}'!".format(self.name(), key))
            p.setValue(value)
        return self

    def values(self):
        """Parameter values by name, in declaration order."""
        return dict((p.name(), p.value()) for p in self.params())

    def __str__(self):
        return "\n".join([self.name()] +
                         [u"  {0}".format(p) for p in self.params()])

    def __eq__(self, other):
        return (isinstance(other, type(self))
                and self.name() == other.name()
                and self.params() == other.params())

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = object.__hash__

# vim: set ts=4 sts=4 sw=4 tw=0:
