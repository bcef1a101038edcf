#!/usr/bin/env python

#   MpZeta 1.0, boundary terms and mean-periodicity of zeta functions.
#               Copyright (C) 2022  The MpZeta developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#      the Free Software Foundation, either version 3 of the License, or
#                  (at your option) any later version.
#
#     This program is distributed in the hope that it will be useful,
#     but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#              GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see https://www.gnu.org/licenses/.


"""Exceptions raised by the numerical routines.

All numerical failures derive from ``NumericalError``, which the command-line interface maps onto exit code 2.
Usage errors (bad labels, malformed files) are plain ``ValueError`` or ``IOError`` instances.
"""

import numpy as np


__all__ = [
    "NumericalError", "PoleError", "DomainError", "PrecisionLossError",
    "ConvergenceError", "NotFoundError", "CertificationError", "check_finite"
]


class NumericalError(ArithmeticError):
    """Base class of all numerical failures."""
    pass


class PoleError(NumericalError, ValueError):
    """A function was evaluated at (or numerically on top of) one of its poles."""
    pass


class DomainError(NumericalError, ValueError):
    """An argument lies outside the domain of a real function."""
    pass


class PrecisionLossError(NumericalError):
    """The requested accuracy cannot be reached along the available evaluation path."""
    pass


class ConvergenceError(NumericalError):
    """A series or quadrature did not converge within its truncation budget."""
    pass


class NotFoundError(NumericalError):
    """A search was exhausted.

    Parameters
    ----------
    message : str
        Description of the failed search.
    best : object, optional
        The best value reached before giving up.
    """
    def __init__(self, message, best=None):
        NumericalError.__init__(self, message)
        self.best = best


class CertificationError(NumericalError):
    """A convolutor cannot be used to certify a boundary term at the requested point."""
    pass


def check_finite(value, what="result"):
    """Raise ``NumericalError`` when ``value`` contains NaN or infinity, return it unchanged otherwise."""
    if not np.all(np.isfinite(value)):
        raise NumericalError("Non-finite %s encountered." % what)
    return value
