#!/usr/bin/env python3

# -*- coding: utf-8 -*-

# Copyright (C) 2020  Doguhan Sariturk
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


class LRCError(Exception):
    """Base class for all PyLRC errors."""


class InputError(LRCError, ValueError):
    """An argument is out of range or inconsistent with the others."""


class ParseError(LRCError, ValueError):
    """A pattern description or an artifact file could not be parsed.

    Parameters
    ----------
    message : str
        What went wrong.

    line : int, optional
        1-based line number in the parsed text.

    position : int, optional
        0-based character offset inside the line (or the whole text for
        single line inputs).
    """

    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class PreconditionError(LRCError):
    """An input failed the property a builder requires.

    Parameters
    ----------
    message : str
        What was required.

    certificate : Certificate, optional
        The witness returned by the verifier that refused the input.
    """

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class GuardError(LRCError):
    """An exact search is estimated too large to run without ``force``.

    Parameters
    ----------
    estimate : float
        The estimated search magnitude.

    guard : float
        The threshold that was exceeded.
    """

    def __init__(self, estimate, guard):
        self.estimate = estimate
        self.guard = guard
        super().__init__(f"Estimated search magnitude {estimate:.3g} exceeds the guard {guard:.3g}; "
                         f"pass force=True to run anyway.")
