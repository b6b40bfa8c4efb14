# -*- coding: utf-8 -*-
"""Exceptions raised by :mod:`glwf`.

Every failure caused by invalid mathematical input is a :exc:`GLWFError`,
which the command line interface reports as a *domain error* (exit status 1).
"""

__all__ = [
    'GLWFError', 'ParseError', 'SizeMismatchError', 'InvalidPartitionError',
    'OrbitLabelError', 'AmbiguousNumeralError', 'IncompatibleAutomorphismError',
    'LineMismatchError', 'SupportMismatchError', 'BackendValidationError', 'DescriptorError',
]


class GLWFError(ValueError):
    """Base class of all domain errors."""


class ParseError(GLWFError):
    """Malformed textual or JSON input."""


class SizeMismatchError(GLWFError):
    """Two objects which must live over the same ``n`` do not."""


class InvalidPartitionError(GLWFError):
    """Parts of a partition or composition violate its invariants."""


class OrbitLabelError(GLWFError):
    """Invalid nilpotent orbit label."""


class AmbiguousNumeralError(OrbitLabelError):
    """Spaltenstein duality produced a very even partition from a label without a numeral."""


class IncompatibleAutomorphismError(OrbitLabelError):
    """Outer automorphism does not fit the factors of a product label."""


class LineMismatchError(GLWFError):
    """Segments from different cuspidal lines were mixed where one line is required."""


class SupportMismatchError(GLWFError):
    """Multisegments were compared over different supports."""


class BackendValidationError(GLWFError):
    """A multiplicity backend produced a matrix failing its consistency checks."""


class DescriptorError(GLWFError):
    """Pure type descriptor does not match the data it is applied to."""
