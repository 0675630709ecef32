# -*-coding: utf8-*-
# utils/mixedmethod.py

"""This module implements a mixedmethod() decorator for class definitions.

A method decorated with @classmethod ignores instance data. A method
decorated with @mixedmethod receives the class when called on the class
and the instance when called on an instance. Parameter types use this to
keep class level defaults (changing a default affects all parameters
created later) next to per instance values::

    >>> class Threshold(object):
    ...     _value = 0.15
    ...     @mixedmethod
    ...     def setValue(selforcls, value):
    ...         selforcls._value = value
    >>> t = Threshold()
    >>> t.setValue(0.2)
    >>> Threshold._value, t._value
    (0.15, 0.2)
"""

from functools import partial

class mixedmethod(object):
    """Binds the wrapped function to the instance if there is one, to the
    class otherwise."""
    def __init__(self, func):
        self.func = func
        self.__doc__ = getattr(func, "__doc__", None)

    def __get__(self, instance, cls):
        if instance is None:
            return partial(self.func, cls)
        return partial(self.func, instance)

if __name__ == '__main__':
    import doctest
    doctest.testmod()

# vim: set ts=4 sts=4 sw=4 tw=0:
