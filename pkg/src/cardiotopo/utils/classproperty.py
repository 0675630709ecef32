# -*- coding: utf-8 -*-
# utils/classproperty.py

class classproperty(property):
    """
    Read-only property evaluated on the class, stack it on a classmethod:
    ::

        @classproperty
        @classmethod
        def dtype(cls):
            return float
    """
    def __get__(self, cls, owner):
        return self.fget.__get__(None, owner)()

# vim: set ts=4 sts=4 sw=4 tw=0:
