# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" Exceptions raised by the symadapt package.

Every class carries the ``exit_code`` that the command line interface
returns when the error reaches it.

"""


class SymadaptError(Exception):
    """ Base class of the package errors.

    """
    exit_code = 1


class UsageError(SymadaptError):
    exit_code = 2


class ParseError(SymadaptError):
    """ Malformed input text.

    Attributes
    ----------
    line : int
        One-based line number of the offending input line (``None`` when
        the error is not tied to a line).

    """
    exit_code = 3

    def __init__(self, message, line=None):
        if line is not None:
            message = 'line {0}: {1}'.format(line, message)
        super(ParseError, self).__init__(message)
        self.line = line


class DimensionError(SymadaptError, ValueError):
    exit_code = 4


class CapacityError(SymadaptError):
    exit_code = 4


class ContractError(SymadaptError):
    exit_code = 4


class LabelingError(SymadaptError):
    exit_code = 4


class MismatchError(SymadaptError):
    """ Observed values disagree with the expected ones.

    Attributes
    ----------
    offenders : list
        The entries that failed the comparison.

    """
    exit_code = 5

    def __init__(self, message, offenders=()):
        super(MismatchError, self).__init__(message)
        self.offenders = list(offenders)
