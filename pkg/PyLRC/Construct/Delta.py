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

import numpy as np

from PyLRC.Core.Colouring import HypergraphColouring
from PyLRC.Core.Indexing import colex_subsets, label_length
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"


def delta(x, y):
    """Least coordinate where the bit sequences ``x`` and ``y`` differ.

    Raises
    ------
    InputError
        If the sequences are equal or have different lengths.
    """
    if len(x) != len(y):
        raise InputError("delta needs two labels of the same length.")
    for i, (a, b) in enumerate(zip(x, y)):
        if a != b:
            return i
    raise InputError("delta is undefined for equal labels.")


def delta_matrix(n):
    """``D[i, j] = delta(label(i), label(j))`` for the binary labelling of ``[n]``.

    With least-significant-bit-first labels this is the number of trailing
    zeros of ``i XOR j``. The diagonal is ``-1``.
    """
    vertices = np.arange(n, dtype=np.int64)
    xor = vertices[:, None] ^ vertices[None, :]
    lowest = xor & -xor
    D = np.full((n, n), -1, dtype=np.int64)
    off = xor != 0
    D[off] = np.log2(lowest[off]).round().astype(np.int64)
    return D


def mtf_edge_colouring(n):
    """Edge colouring of ``K_n`` by ``delta`` with no monochromatic triangle.

    Returns
    -------
    HypergraphColouring
        The colouring as an ``r = 2`` hypergraph colouring (colex order over
        pairs) with ``ceil(log2 n)`` colours, so it can be checked as a
        ``(3, 2)``-colouring.

    Raises
    ------
    InputError
        If ``n < 2``.
    """
    if n < 2:
        raise InputError("mtf_edge_colouring needs n >= 2.")
    D = delta_matrix(n)
    pairs = colex_subsets(n, 2)
    return HypergraphColouring(n, 2, label_length(n), D[pairs[:, 0], pairs[:, 1]])
