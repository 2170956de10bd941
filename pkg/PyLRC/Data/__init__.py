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

from PyLRC.Core.Pattern import parse_pattern
from PyLRC.Data.Patterns import _pattern_data
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def Pattern(name):
    """Catalogue pattern by name, e.g. ``Pattern("Tp")``.

    Parameters
    ----------
    name : str
        One of the keys of ``PyLRC.Data.Patterns._pattern_data``.

    Returns
    -------
    PatternGraph

    Raises
    ------
    InputError
        If the name is not in the catalogue.
    """
    if name not in _pattern_data:
        raise InputError(f"Unknown pattern '{name}'. Known: {', '.join(sorted(_pattern_data))}.")
    return parse_pattern(_pattern_data[name]["text"])


def pattern_names():
    return sorted(_pattern_data)
