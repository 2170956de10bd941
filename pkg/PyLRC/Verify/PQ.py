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
from itertools import combinations

import numpy as np

from PyLRC import Config
from PyLRC.Core.Certificate import PoorPSet
from PyLRC.Core.Indexing import binom, colex_subsets, subset_rank_array
from PyLRC.Core.Shards import map_shards
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def member_ranks(psets, r, n):
    """Colex ranks of the ``r``-subsets of each row of ``psets``, in local lex order."""
    psets = np.asarray(psets, dtype=np.int64)
    local = np.array(list(combinations(range(psets.shape[1]), r)), dtype=np.int64)
    return subset_rank_array(psets[:, local], n)


def distinct_counts(values):
    """Number of distinct entries in each row of a 2-D array."""
    ordered = np.sort(values, axis=1)
    return 1 + np.count_nonzero(ordered[:, 1:] != ordered[:, :-1], axis=1)


def _first_poor(shard):
    values, r, n, q, psets = shard
    counts = distinct_counts(values[member_ranks(psets, r, n)])
    poor = np.flatnonzero(counts < q)
    return None if poor.size == 0 else (tuple(int(v) for v in psets[poor[0]]), int(counts[poor[0]]))


def verify_pq(G, p, q, jobs=1):
    """Check that every ``p``-set spans at least ``q`` colours under ``G``.

    Parameters
    ----------
    G : HypergraphColouring
        Colouring of the ``r``-subsets of ``[n]``.

    p : int
        Size of the inspected sets, ``r < p <= n``.

    q : int
        Required number of colours, at most ``C(p, r)``.

    jobs : int
        Worker processes.

    Returns
    -------
    PoorPSet or None
        The first poor ``p``-set in colex order with its colour count.

    Raises
    ------
    InputError
        If ``p`` or ``q`` is out of range.
    """
    if not G.r < p <= G.n:
        raise InputError(f"verify_pq needs r < p <= n, got r={G.r}, p={p}, n={G.n}.")
    if not 1 <= q <= binom(p, G.r):
        raise InputError(f"q must lie in [1, C({p}, {G.r})], got {q}.")
    psets = colex_subsets(G.n, p)
    step = max(1, Config.COPY_BATCH // binom(p, G.r))
    shards = ((G.values, G.r, G.n, q, psets[start:start + step]) for start in range(0, len(psets), step))
    for result in map_shards(_first_poor, shards, jobs):
        if result is not None:
            logger.info("verify_pq: %s spans %d < %d colours", result[0], result[1], q)
            return PoorPSet(result[0], result[1], p, q)
    logger.info("verify_pq: all %d %d-sets span >= %d colours", len(psets), p, q)
    return None
