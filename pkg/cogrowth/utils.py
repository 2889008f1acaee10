""" Shared exceptions and small input helpers"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import io
import os

__all__ = ['CogrowthError',
           'WordError',
           'CGViolation',
           'InvolutionError',
           'HorizonError',
           'BudgetExceeded',
           'CheckFailure',
           'read_lines']


class CogrowthError(Exception):
    """ Base class for every error raised by the package"""


class WordError(CogrowthError, ValueError):
    """ A word is malformed: bad letter, wrong rank, or not reduced"""


class CGViolation(CogrowthError, ValueError):
    """ An increment stream breaks the CG conditions at ``index``"""

    def __init__(self, message, index):
        super().__init__('%s (at index %d)' % (message, index))
        self.index = index


class InvolutionError(CogrowthError, ValueError):
    """ A transition breaks involution or determinism

    ``edge`` is the offending (source, letter, target) triple."""

    def __init__(self, message, edge):
        super().__init__('%s: %r' % (message, edge))
        self.edge = edge


class HorizonError(CogrowthError):
    """ The query needs data beyond the safe or materialised horizon"""


class BudgetExceeded(HorizonError):
    """ A resource cap was hit; ``progress`` describes what was done"""

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress or {}


class CheckFailure(CogrowthError):
    """ An inequality that always holds was found violated"""


def read_lines(path):
    """
    Read the meaningful lines of a fixture file

    Parameters
    ----------

    path - str - file with one item per line; '#' starts a comment

    Returns
    -------

    list of stripped, non-empty lines with comments removed
    """
    if not os.path.isfile(path):
        raise FileNotFoundError('missing fixture: %s' % path)
    lines = []
    with io.open(path, encoding='utf-8') as fh:
        for line in fh:
            line = line.split('#', 1)[0].strip()
            if line:
                lines.append(line)
    return lines
