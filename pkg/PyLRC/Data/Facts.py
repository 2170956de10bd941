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

# Proven lower-bound exponents b with g(n, H) = Omega(n^b), quoted as notes only.
_cited_bounds = {
        "C4": (1 / 3, "g(n,C4) = Omega(n^(1/3)), cited"),
        "P4": (1 / 5, "g(n,P4) = Omega(n^(1/5)), cited"),
        "nice": (1 / 6, "nice graphs: g(n,H) = Omega(n^(1/6))"),
}

BOUNDED_CONSTANT = 5


def even_cycle_exponent(length):
    """Exponent ``1 - 2 / (l + 1)`` for the cycle of length ``2 l``."""
    ell = length // 2
    return 1 - 2 / (ell + 1)


def even_clique_exponent(r):
    """Exponent ``1 - 4 / (r + 2)`` for ``K_r`` with ``r >= 4`` even."""
    return 1 - 4 / (r + 2)
