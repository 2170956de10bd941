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

import logging

import numpy as np

from PyLRC.Construct.Gamma import require_pq
from PyLRC.Core.Colouring import KWColouring
from PyLRC.Core.Indexing import binomial_table, colex_subsets
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def construct_kw(n, w, gamma):
    """Bounded-weight version of the path construction.

    ``f_v(x) = gamma(x + v)`` for ``v`` outside ``x`` and the reserved colour
    ``gamma.k`` for ``v`` in ``x``. For ``w = 2`` this is the non-incident rule
    of :func:`PyLRC.Construct.Local.construct_p3`.

    Parameters
    ----------
    n : int
        Ground-set size, at least ``w + 2``.

    w : int
        Weight bound, at least 2.

    gamma : HypergraphColouring
        A ``(w + 2, w + 1)``-colouring of the ``(w + 1)``-subsets of ``[n]``.

    Raises
    ------
    InputError
        If ``w < 2`` or ``n < w + 2``.

    PreconditionError
        If ``gamma`` fails its ``(w + 2, w + 1)`` property.
    """
    if w < 2 or n < w + 2:
        raise InputError(f"construct_kw needs w >= 2 and n >= w + 2, got w={w}, n={n}.")
    require_pq(gamma, n, w + 1, w + 2, w + 1)
    subsets = colex_subsets(n, w)
    table = binomial_table(n, w + 1)
    vertices = np.arange(n)[:, None, None]
    position = np.arange(1, w + 1)[None, None, :]
    # element s of x sits one place later in x + v when s > v
    shifted = position + (subsets[None, :, :] > vertices)
    ranks = table[np.broadcast_to(subsets[None, :, :], shifted.shape), shifted].sum(axis=-1)
    below = (subsets[None, :, :] < vertices).sum(axis=-1)
    ranks = ranks + table[np.arange(n)[:, None], below + 1]
    member = (subsets[None, :, :] == vertices).any(axis=-1)
    colours = np.where(member, gamma.k, gamma.values[np.where(member, 0, ranks)])
    logger.info("construct_kw(n=%d, w=%d): %d colours", n, w, gamma.k + 1)
    return KWColouring(n, w, gamma.k + 1, colours)
