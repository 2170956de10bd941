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

from PyLRC.Core.Certificate import KWViolation
from PyLRC.Core.Indexing import colex_subsets, subset_rank_array
from PyLRC.Core.Pattern import copy_batches
from PyLRC.Data import Pattern
from PyLRC.Errors import InputError
from PyLRC.Verify.PQ import distinct_counts

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def kw_triples(paths, common):
    """The sets ``ab + S``, ``bc + S``, ``cd + S`` as sorted rows.

    Parameters
    ----------
    paths : np.ndarray
        ``N x 4`` array of paths ``a-b-c-d``.

    common : np.ndarray
        ``N x (w - 2)`` array of the matching sets ``S``.

    Returns
    -------
    np.ndarray
        ``N x 3 x w`` array.
    """
    pairs = np.stack([paths[:, 0:2], paths[:, 1:3], paths[:, 2:4]], axis=1)
    extra = np.broadcast_to(common[:, None, :], (len(common), 3, common.shape[1]))
    return np.sort(np.concatenate([pairs, extra], axis=2), axis=2)


def verify_kw(K, w=None):
    """Check the triple form of the bounded-weight locality property.

    For every path ``a-b-c-d`` and every ``(w - 2)``-set ``S`` avoiding it, the
    sets ``ab + S``, ``bc + S`` and ``cd + S`` must get three colours under
    ``f_a`` or under ``f_d``. Paths come in copy order and, for each path,
    the sets ``S`` in colex order.

    Parameters
    ----------
    K : KWColouring

    w : int, optional
        Expected weight; defaults to ``K.w``.

    Returns
    -------
    KWViolation or None

    Raises
    ------
    InputError
        If ``w`` disagrees with the colouring or ``n < 4``.
    """
    w = K.w if w is None else w
    if w != K.w:
        raise InputError(f"Colouring has weight {K.w}, expected {w}.")
    if K.n < 4:
        raise InputError("verify_kw needs n >= 4.")
    commons = colex_subsets(K.n, w - 2)
    checked = 0
    for paths in copy_batches(Pattern("P3"), K.n):
        rows = np.repeat(paths, len(commons), axis=0)
        sets = np.tile(commons, (len(paths), 1))
        disjoint = ~(rows[:, :, None] == sets[:, None, :]).any(axis=(1, 2))
        rows, sets = rows[disjoint], sets[disjoint]
        ranks = subset_rank_array(kw_triples(rows, sets), K.n)
        at_a = distinct_counts(K.table[rows[:, 0][:, None], ranks]) == 3
        at_d = distinct_counts(K.table[rows[:, 3][:, None], ranks]) == 3
        bad = np.flatnonzero(~(at_a | at_d))
        checked += len(rows)
        if bad.size:
            path = tuple(int(v) for v in rows[bad[0]])
            common = tuple(int(v) for v in sets[bad[0]])
            logger.info("verify_kw: path %s with S=%s is rainbow in neither end row", path, common)
            return KWViolation(path, common)
    logger.info("verify_kw: %d path/set combinations pass", checked)
    return None
