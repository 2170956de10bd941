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
import math
from itertools import count

import numpy as np

from PyLRC import Config
from PyLRC.Core.Colouring import LocalColouringCollection
from PyLRC.Core.Indexing import edge_count, edge_index_array
from PyLRC.Core.Pattern import copy_batches
from PyLRC.Errors import GuardError, InputError
from PyLRC.Search.Budget import BudgetExhausted, NodeMeter, SearchBudget, SearchResult, SearchStatus

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def g_estimate(n, k):
    """Search magnitude ``n C(n, 2) log2(max(k, 2))`` compared against the guard."""
    return n * edge_count(n) * math.log2(max(k, 2))


def _watch_lists(H, n):
    """For every cell ``v * C(n, 2) + e``, the (copy slot, other cells) pairs it takes part in."""
    m = edge_count(n)
    copies = np.concatenate(list(copy_batches(H, n)))
    pattern_edges = np.array(H.edges, dtype=np.int64)
    images = edge_index_array(copies[:, pattern_edges[:, 0]], copies[:, pattern_edges[:, 1]], n)
    h = H.vertex_count
    watch = [[] for _ in range(n * m)]
    for c, (copy, image) in enumerate(zip(copies.tolist(), images.tolist())):
        for t, v in enumerate(copy):
            cells = [v * m + e for e in image]
            for a, cell in enumerate(cells):
                watch[cell].append((c * h + t, cells[:a] + cells[a + 1:]))
    return watch, len(copies)


def g_feasible(n, H, k, budget=None, symmetry=True):
    """Decide whether some ``k``-colour collection on ``K_n`` is local for ``H``.

    Cells of the ``n x C(n, 2)`` grid are filled row by row. A copy whose every
    row already repeats a colour on its edges ends the branch at once. With
    ``symmetry`` a cell may use a colour at most one above the largest colour
    already used in its row.

    Parameters
    ----------
    n : int
        Host size.

    H : PatternGraph
        Pattern with at least two edges and at most ``n`` vertices.

    k : int
        Number of colours.

    budget : SearchBudget, optional

    symmetry : bool
        Apply per-row colour symmetry breaking.

    Returns
    -------
    SearchResult
        FEASIBLE with a witness collection, INFEASIBLE after an exhausted tree,
        or UNKNOWN when the budget ran out.

    Raises
    ------
    InputError
        On a pattern with fewer than two edges, more than ``n`` vertices, or ``k < 1``.

    GuardError
        If the estimated magnitude exceeds ``Config.SEARCH_GUARD`` and the
        budget does not force the run.
    """
    if H.edge_count < 2:
        raise InputError(f"Locality needs a pattern with at least 2 edges, got {H.edge_count}.")
    if H.vertex_count > n:
        raise InputError(f"Pattern on {H.vertex_count} vertices does not fit in K_{n}.")
    if k < 1:
        raise InputError("k must be positive.")
    budget = budget or SearchBudget()
    estimate = g_estimate(n, k)
    if estimate > Config.SEARCH_GUARD and not budget.force:
        raise GuardError(estimate, Config.SEARCH_GUARD)
    m = edge_count(n)
    if k >= m:
        witness = LocalColouringCollection(n, k, np.tile(np.arange(m), (n, 1)))
        return SearchResult(SearchStatus.FEASIBLE, k, witness, 0, 0.0, estimate)
    if k < H.edge_count:
        # no row can be rainbow on more edges than colours
        return SearchResult(SearchStatus.INFEASIBLE, k, None, 0, 0.0, estimate)

    watch, copies = _watch_lists(H, n)
    h = H.vertex_count
    cells = n * m
    assign = [-1] * cells
    pairs = [0] * (copies * h)
    colliding = [0] * copies
    logs = [None] * cells
    trial = [0] * (cells + 1)
    rowmax = [-1] * (cells + 1)
    meter = NodeMeter(budget)

    def place(i, colour):
        assign[i] = colour
        log = []
        dead = False
        for slot, others in watch[i]:
            hits = sum(1 for o in others if assign[o] == colour)
            if hits:
                pairs[slot] += hits
                log.append((slot, hits))
                if pairs[slot] == hits:
                    colliding[slot // h] += 1
                    dead = dead or colliding[slot // h] == h
        logs[i] = log
        return not dead

    def remove(i):
        for slot, hits in logs[i]:
            if pairs[slot] == hits:
                colliding[slot // h] -= 1
            pairs[slot] -= hits
        assign[i] = -1
        logs[i] = None

    status = SearchStatus.INFEASIBLE
    i = 0
    try:
        while True:
            if i == cells:
                status = SearchStatus.FEASIBLE
                break
            limit = min(k, rowmax[i] + 2) if symmetry else k
            placed = False
            while trial[i] < limit:
                colour = trial[i]
                trial[i] += 1
                meter.tick()
                if place(i, colour):
                    placed = True
                    break
                remove(i)
            if placed:
                i += 1
                trial[i] = 0
                rowmax[i] = -1 if i % m == 0 else max(rowmax[i - 1], assign[i - 1])
                continue
            trial[i] = 0
            i -= 1
            if i < 0:
                break
            remove(i)
    except BudgetExhausted:
        status = SearchStatus.UNKNOWN

    witness = None
    if status is SearchStatus.FEASIBLE:
        witness = LocalColouringCollection(n, k, np.array(assign, dtype=np.int64).reshape(n, m))
    logger.info("g_feasible(n=%d, %s, k=%d): %s after %d nodes", n, H, k, status.value, meter.nodes)
    return SearchResult(status, k, witness, meter.nodes, meter.elapsed, estimate)


def g_exact_min(n, H, budget=None, symmetry=True):
    """Smallest ``k`` for which :func:`g_feasible` succeeds, trying ``k = 1, 2, ...``.

    Returns
    -------
    SearchResult
        FEASIBLE with the minimum and its witness, or UNKNOWN at the first
        ``k`` whose search ran out of budget. ``nodes`` sums over all ``k``.

    Raises
    ------
    GuardError
        As :func:`g_feasible`, for the first ``k`` above the guard.
    """
    nodes = 0
    elapsed = 0.0
    for k in count(1):
        result = g_feasible(n, H, k, budget, symmetry)
        nodes += result.nodes
        elapsed += result.elapsed
        if result.status is not SearchStatus.INFEASIBLE:
            return SearchResult(result.status, k, result.witness, nodes, elapsed, result.estimate)
