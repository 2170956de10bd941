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
from PyLRC.Core.Colouring import HypergraphColouring
from PyLRC.Core.Indexing import binom, colex_subsets
from PyLRC.Errors import GuardError, InputError
from PyLRC.Search.Budget import BudgetExhausted, NodeMeter, SearchBudget, SearchResult, SearchStatus
from PyLRC.Verify.PQ import member_ranks

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def pq_estimate(n, r, k):
    return binom(n, r) * math.log2(max(k, 2))


def pq_feasible(n, r, p, q, k, budget=None, symmetry=True):
    """Decide whether ``k`` colours admit a ``(p, q)``-colouring of the ``r``-subsets of ``[n]``.

    Subsets are coloured in colex order. A branch ends as soon as some
    ``p``-set cannot reach ``q`` colours even if each of its uncoloured
    subsets took a new colour. With ``symmetry`` a subset may use a colour at
    most one above the largest colour used so far.

    Returns
    -------
    SearchResult

    Raises
    ------
    InputError
        Unless ``2 <= r < p <= n``, ``1 <= q <= C(p, r)`` and ``k >= 1``.

    GuardError
        If ``C(n, r) log2(max(k, 2))`` exceeds the guard without ``force``.
    """
    if not 2 <= r < p <= n:
        raise InputError(f"pq search needs 2 <= r < p <= n, got r={r}, p={p}, n={n}.")
    if not 1 <= q <= binom(p, r) or k < 1:
        raise InputError(f"Need 1 <= q <= C({p}, {r}) and k >= 1.")
    budget = budget or SearchBudget()
    estimate = pq_estimate(n, r, k)
    if estimate > Config.SEARCH_GUARD and not budget.force:
        raise GuardError(estimate, Config.SEARCH_GUARD)
    if k < q:
        return SearchResult(SearchStatus.INFEASIBLE, k, None, 0, 0.0, estimate)

    members = member_ranks(colex_subsets(n, p), r, n)
    cells = binom(n, r)
    containing = [[] for _ in range(cells)]
    for index, row in enumerate(members.tolist()):
        for rank in row:
            containing[rank].append(index)
    counts = [dict() for _ in range(len(members))]
    open_cells = [members.shape[1]] * len(members)
    assign = [-1] * cells
    trial = [0] * (cells + 1)
    top = [-1] * (cells + 1)
    meter = NodeMeter(budget)

    def place(i, colour):
        assign[i] = colour
        alive = True
        for ps in containing[i]:
            seen = counts[ps]
            seen[colour] = seen.get(colour, 0) + 1
            open_cells[ps] -= 1
            if len(seen) + min(open_cells[ps], k - len(seen)) < q:
                alive = False
        return alive

    def remove(i):
        colour = assign[i]
        for ps in containing[i]:
            seen = counts[ps]
            seen[colour] -= 1
            if not seen[colour]:
                del seen[colour]
            open_cells[ps] += 1
        assign[i] = -1

    status = SearchStatus.INFEASIBLE
    i = 0
    try:
        while True:
            if i == cells:
                status = SearchStatus.FEASIBLE
                break
            limit = min(k, top[i] + 2) if symmetry else k
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
                top[i] = max(top[i - 1], assign[i - 1])
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
        witness = HypergraphColouring(n, r, k, np.array(assign, dtype=np.int64))
    logger.info("pq_feasible(n=%d, r=%d, p=%d, q=%d, k=%d): %s after %d nodes",
                n, r, p, q, k, status.value, meter.nodes)
    return SearchResult(status, k, witness, meter.nodes, meter.elapsed, estimate)


def pq_exact_min(n, r, p, q, budget=None, symmetry=True):
    """Smallest ``k`` with a ``(p, q)``-colouring of the ``r``-subsets of ``[n]``, trying ``k = 1, 2, ...``.

    Returns
    -------
    SearchResult
        FEASIBLE with the minimum and a witness, or UNKNOWN.
    """
    nodes = 0
    elapsed = 0.0
    for k in count(1):
        result = pq_feasible(n, r, p, q, k, budget, symmetry)
        nodes += result.nodes
        elapsed += result.elapsed
        if result.status is not SearchStatus.INFEASIBLE:
            return SearchResult(result.status, k, result.witness, nodes, elapsed, result.estimate)
