# -*- coding: utf-8 -*-
# bases/algorithm/parameter.py

"""
This module defines a generic parameter class for algorithms and
configurations. Create sub classes by calling factory() in this module.
It creates a new sub class type which inherits ParameterBase::

>>> from cardiotopo.bases.algorithm.parameter import factory
>>> ParamType = factory("threshold", 0.15, valueRange = (0., 1.))

Created a new type ThresholdParameter:

>>> ParamType.__name__
'ThresholdParameter'

Using methods on instances work as usual:

>>> p = ParamType()
>>> p.name(), p.value()
('threshold', 0.15)
>>> p.setValue(0.2)
>>> p.value()
0.2

Values outside of the range are refused, they are not clipped:

>>> p.setValue(1.5)
Traceback (most recent call last):
...
cardiotopo.bases.algorithm.parameter.ValueRangeError: threshold: value 1.5 not in [0.0, 1.0]

Changing class default affects new instances only:

>>> ParamType.setValue(0.1)
>>> p.value(), ParamType().value()
(0.2, 0.1)
"""

from ...utils import (isString, isNumber, isList, isSet, testfor,
                      assertName, isCallable)
from ...utils.mixedmethod import mixedmethod
from ...utils.classproperty import classproperty

# avoid inf/nan showing up in value ranges
RANGE_LIMIT = 1e200

class ParameterError(Exception):
    pass

class DefaultValueError(ParameterError):
    pass

class ParameterNameError(ParameterError):
    pass

class ValueRangeError(ParameterError):
    pass

class SuffixError(ParameterError):
    pass

class VectorSizeError(ParameterError):
    pass

def _makeGetter(varName):
    def getter(selforcls):
        return getattr(selforcls, varName)
    return mixedmethod(getter)

def _makeSetter(varName):
    def setter(selforcls, value):
        setattr(selforcls, varName, value)
    return mixedmethod(setter)

def _setterName(attrName):
    return "set" + attrName[0].upper() + attrName[1:]

class ParameterBase(object):
    """A named setting with its default, limits and the text form used in
    config files. Types are created by factory(), instances carry values
    which may deviate from the type default."""

    @classmethod
    def addAttributes(cls, dictionary, *names, **namesAndValues):
        """Declares attributes in the class body *dictionary*, in order.
        Every attribute gets a private slot, a getter and, except *name*, a
        setter. Setters of later attributes may rely on earlier ones."""
        names += tuple(namesAndValues.keys())
        for attrName in names:
            varName = "_" + attrName
            dictionary[varName] = namesAndValues.get(attrName, None)
            dictionary[attrName] = _makeGetter(varName)
            if attrName != "name":
                dictionary[_setterName(attrName)] = _makeSetter(varName)
        dictionary["_attributeNames"] = names

    addAttributes.__func__(None, locals(), "name", "value", "displayName")

    @classmethod
    def attributeNames(cls):
        """Declared attribute names of this type and its bases, base class
        attributes first."""
        names = []
        for baseCls in reversed(cls.__mro__):
            names += [n for n in getattr(baseCls, "_attributeNames", ())
                      if n not in names]
        return names

    @mixedmethod
    def attributes(selforcls, exclude = None):
        """Attribute values which differ from the generic base type, with
        the base type as *cls*."""
        typ = selforcls if isinstance(selforcls, type) else type(selforcls)
        # factory() derives exactly once from a generic base
        base = typ.__mro__[1]
        res = dict(cls = base)
        exclude = exclude if (isList(exclude) or isSet(exclude)) else ()
        for name in selforcls.attributeNames():
            if name in exclude:
                continue
            value = getattr(selforcls, name)()
            if value != getattr(base, name)():
                res[name] = value
        return res

    @mixedmethod
    def setAttributes(selforcls, **kwargs):
        """Applies the given attribute values in declaration order."""
        for key in selforcls.attributeNames():
            setter = getattr(selforcls, _setterName(key), None)
            if key in kwargs and isCallable(setter):
                setter(kwargs[key])
        return selforcls

    @classmethod
    def setName(cls, name):
        """Types only, instances keep the name of their type."""
        assertName(name, ParameterNameError)
        cls._name = str(name).translate(str.maketrans("", "", ' \t\n\r'))

    @mixedmethod
    def setValue(selforcls, newValue):
        testfor(newValue is not None,
                DefaultValueError, "Default value is mandatory!")
        selforcls._value = newValue

    @mixedmethod
    def setDisplayName(selforcls, newName):
        if not isString(newName) or not len(newName):
            newName = selforcls.name()
        if newName is not None:
            selforcls._displayName = str(newName)

    @mixedmethod
    def parse(selforcls, text):
        """Converts the text of a config file entry to a value."""
        return str(text).strip()

    @mixedmethod
    def format(selforcls, value = None):
        """Text for a config file entry, parse() reads it back."""
        if value is None:
            value = selforcls.value()
        return str(value)

    @classproperty
    @classmethod
    def dtype(cls):
        return str

    @classmethod
    def isDataType(cls, value):
        return isinstance(value, cls.dtype)

    def __str__(self):
        return u"{0}: {1}".format(self.displayName() or self.name(),
                                  self.format())

    __repr__ = __str__

    def __eq__(self, other):
        return (isinstance(other, type(self).__mro__[1])
                and self.dtype == other.dtype
                and self.attributes() == other.attributes())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, self.name()))

    def __call__(self):
        """Shortcut for value()."""
        return self.value()

class ParameterBoolean(ParameterBase):
    _true = ("1", "yes", "true", "on")
    _false = ("0", "no", "false", "off")

    @mixedmethod
    def parse(selforcls, text):
        text = str(text).strip().lower()
        testfor(text in selforcls._true + selforcls._false, ValueRangeError,
                "{0}: expected a boolean, got '{1}'"
                .format(selforcls.name(), text))
        return text in selforcls._true

    @mixedmethod
    def format(selforcls, value = None):
        if value is None:
            value = selforcls.value()
        return "true" if value else "false"

    @classproperty
    @classmethod
    def dtype(cls):
        return bool

class ParameterString(ParameterBase):
    """
    String-based parameter with a fixed set of choices in *valueRange*.
    """
    ParameterBase.addAttributes(locals(), "valueRange")

    @mixedmethod
    def setValue(selforcls, newValue):
        choices = selforcls.valueRange()
        testfor(not len(choices) or newValue in choices, ValueRangeError,
                "{0}: '{1}' is not one of {2}"
                .format(selforcls.name(), newValue, ", ".join(choices)))
        super(ParameterString, selforcls).setValue(newValue)

    @mixedmethod
    def setValueRange(selforcls, newRange):
        testfor(isList(newRange), ValueRangeError,
                "A value range for a string type parameter has to be a list!")
        testfor(all([isString(v) for v in newRange]), ValueRangeError,
                "A value range for a string has to be a list of strings!")
        selforcls._valueRange = tuple(newRange)
        testfor(selforcls.value() in selforcls._valueRange, ValueRangeError,
                "{0}: default '{1}' is not one of the choices"
                .format(selforcls.name(), selforcls.value()))

    @mixedmethod
    def valueRange(selforcls):
        if selforcls._valueRange is None:
            return ()
        return selforcls._valueRange

    @classmethod
    def isDataType(cls, value):
        return isString(value)

class ParameterNumerical(ParameterBase):
    """Integer parameter limited to *valueRange*. With *exclusive* set, the
    limits themselves are not admissible."""
    ParameterBase.addAttributes(locals(), "valueRange", "suffix",
                                exclusive = False)

    @mixedmethod
    def setValue(selforcls, newValue):
        if newValue is None:
            return # ignore
        testfor(isNumber(newValue), DefaultValueError,
                u"{0}: a value has to be numerical! ({1})"
                .format(selforcls.name(), newValue))
        newValue = selforcls.dtype(newValue)
        testfor(selforcls.isInRange(newValue), ValueRangeError,
                "{0}: value {1} not in {2}{3}, {4}{5}".format(
                    selforcls.name(), newValue,
                    "(" if selforcls.exclusive() else "[",
                    selforcls.min(), selforcls.max(),
                    ")" if selforcls.exclusive() else "]"))
        super(ParameterNumerical, selforcls).setValue(newValue)

    @mixedmethod
    def isInRange(selforcls, value):
        lo, hi = selforcls.valueRange()
        if lo is None:
            return True
        if selforcls.exclusive():
            return lo < value < hi
        return lo <= value <= hi

    @mixedmethod
    def setValueRange(selforcls, newRange):
        testfor(isList(newRange), ValueRangeError,
                "A value range is mandatory for a numerical parameter!")
        testfor(len(newRange) == 2, ValueRangeError,
                "A value range has to consist of two values!")
        testfor(all([isNumber(v) for v in newRange]), ValueRangeError,
                "A value range has to consist of numbers only!")
        minVal, maxVal = min(newRange), max(newRange)
        minVal = max(minVal, -RANGE_LIMIT)
        maxVal = min(maxVal,  RANGE_LIMIT)
        selforcls._valueRange = (selforcls.dtype(minVal),
                                 selforcls.dtype(maxVal))
        # the current value has to comply with the new limits
        selforcls.setValue(selforcls.value())

    @mixedmethod
    def setExclusive(selforcls, exclusive):
        selforcls._exclusive = bool(exclusive)
        if selforcls._valueRange is not None:
            selforcls.setValue(selforcls.value())

    @mixedmethod
    def setSuffix(selforcls, newSuffix):
        if newSuffix is None:
            return
        testfor(isString(newSuffix) and len(newSuffix) > 0,
                SuffixError, "Parameter suffix has to be some text!")
        selforcls._suffix = newSuffix

    @mixedmethod
    def valueRange(selforcls):
        if selforcls._valueRange is None:
            return (None, None)
        return selforcls._valueRange

    @mixedmethod
    def min(selforcls):
        return selforcls.valueRange()[0]

    @mixedmethod
    def max(selforcls):
        return selforcls.valueRange()[1]

    @mixedmethod
    def parse(selforcls, text):
        try:
            value = float(str(text).strip())
        except ValueError:
            raise ValueRangeError("{0}: expected a number, got '{1}'"
                                  .format(selforcls.name(), text))
        if selforcls.dtype is int:
            testfor(value == int(value), ValueRangeError,
                    "{0}: expected an integer, got '{1}'"
                    .format(selforcls.name(), text))
        return selforcls.dtype(value)

    @classproperty
    @classmethod
    def dtype(cls):
        return int

    @classmethod
    def isDataType(cls, value):
        """ParameterNumerical is a fallback for all number not being float."""
        return isNumber(value) and not isinstance(value, float)

    def __str__(self):
        return (super(ParameterNumerical, self).__str__()
                + u" in [{0}, {1}]".format(*self.valueRange())
                + (u" {0}".format(self.suffix()) if self.suffix() else ""))

class ParameterFloat(ParameterNumerical):

    @mixedmethod
    def format(selforcls, value = None):
        if value is None:
            value = selforcls.value()
        return repr(float(value))

    @classproperty
    @classmethod
    def dtype(cls):
        return float

    @classmethod
    def isDataType(cls, value):
        return isinstance(value, float)

class ParameterVector(ParameterBase):
    """Fixed-size tuple of floats, e.g. a point in the plane."""
    ParameterBase.addAttributes(locals(), size = 2)

    @mixedmethod
    def setValue(selforcls, newValue):
        testfor(isList(newValue) and all(isNumber(v) for v in newValue),
                DefaultValueError, "{0}: expected a sequence of numbers!"
                .format(selforcls.name()))
        newValue = tuple(float(v) for v in newValue)
        size = selforcls.size()
        testfor(size is None or len(newValue) == size, VectorSizeError,
                "{0}: expected {1} values, got {2}"
                .format(selforcls.name(), size, len(newValue)))
        super(ParameterVector, selforcls).setValue(newValue)

    @mixedmethod
    def setSize(selforcls, size):
        selforcls._size = size
        if selforcls._value is not None:
            selforcls.setValue(selforcls._value)

    @mixedmethod
    def parse(selforcls, text):
        try:
            return tuple(float(v) for v in str(text).split(",")
                         if len(v.strip()))
        except ValueError:
            raise ValueRangeError("{0}: expected comma separated numbers, "
                                  "got '{1}'".format(selforcls.name(), text))

    @mixedmethod
    def format(selforcls, value = None):
        if value is None:
            value = selforcls.value()
        return ", ".join(repr(float(v)) for v in value)

    @classproperty
    @classmethod
    def dtype(cls):
        return tuple

    @classmethod
    def isDataType(cls, value):
        return (isList(value) and len(value) > 0
                and all(isNumber(v) for v in value))

def factory(name, value, paramTypes = None, **kwargs):
    """
    Generates a new Parameter type derived from one of the predefined
    base classes choosen by the supplied value: a bool gives a
    ParameterBoolean, a float a ParameterFloat, an int a ParameterNumerical,
    a sequence of numbers a ParameterVector and a string a ParameterString
    if a list of choices is given as *valueRange*, a ParameterBase otherwise.

    - *name*: short name of the new parameter without spaces
    - *value*: default value from which the type is derived if cls is not given

    Optional arguments:

    - *paramTypes*:  tuple of available parameter types instead of the default
    - *cls*:         forces a certain Parameter type.
    - *description*: Updates the __doc__ attribute.
    """
    kwargs.update(name = name, value = value)
    assertName(name, ParameterNameError)
    cls = kwargs.pop("cls", None) # remove 'cls' keyword before forwarding
    if paramTypes is None:
        paramTypes = (ParameterBoolean, ParameterFloat,
                      ParameterNumerical, ParameterVector)
    if not (isinstance(cls, type) and issubclass(cls, ParameterBase)):
        for cls in paramTypes:
            if cls.isDataType(value):
                break
        else:
            cls = ParameterBase
            if isString(value) and kwargs.get("valueRange") is not None:
                cls = ParameterString
    clsdict = dict()
    description = kwargs.pop("description", None)
    if isString(description) and len(description) > 0:
        clsdict['__doc__'] = description
    typeName = (str(name[0].upper() + name[1:])
                .translate(str.maketrans("", "", ' \t\n\r'))
                + "Parameter")
    NewType = type(typeName, (cls,), clsdict)
    NewType.setName(name)
    if "size" in kwargs and hasattr(NewType, "setSize"):
        # the size constrains the value, set it first
        NewType.setSize(kwargs.pop("size"))
    return NewType.setAttributes(**kwargs)

if __name__ == "__main__":
    import doctest
    doctest.testmod()

# vim: set ts=4 sts=4 sw=4 tw=0:
