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
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from PyLRC import Config
from PyLRC.Core.Certificate import ScramblingViolation
from PyLRC.Core.Colouring import OrderFamily
from PyLRC.Core.Indexing import binom, colex_subsets
from PyLRC.Errors import InputError
from PyLRC.Search.Budget import BudgetExhausted, NodeMeter, SearchBudget, SearchResult, SearchStatus

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)

# Exact minimisation enumerates all n! orders.
MAX_EXACT_N = 8


def _check_arity(n, k):
    if not 1 <= k <= n:
        raise InputError(f"Arity must satisfy 1 <= k <= n, got k={k}, n={n}.")


def coverage(ranks, subsets):
    """``covered[S, t]``: element ``subsets[S, t]`` is the maximum of ``S`` in some order.

    Parameters
    ----------
    ranks : np.ndarray
        ``M x n`` position table of an order family.

    subsets : np.ndarray
        Sorted ``k``-subsets, one per row.
    """
    covered = np.zeros(subsets.shape, dtype=bool)
    if len(ranks):
        top = ranks[:, subsets].argmax(axis=2)
        rows = np.broadcast_to(np.arange(len(subsets))[None, :], top.shape)
        covered[rows.ravel(), top.ravel()] = True
    return covered


def verify_scrambling(F, k):
    """Check that every element of every ``k``-set is its maximum in some order.

    Parameters
    ----------
    F : OrderFamily

    k : int
        Arity, ``1 <= k <= F.n``.

    Returns
    -------
    ScramblingViolation or None
        The first uncovered pair, ``k``-sets in colex order and elements
        ascending, as ``(s, rest of S ascending)``.

    Raises
    ------
    InputError
        If ``k`` is out of range.
    """
    _check_arity(F.n, k)
    subsets = colex_subsets(F.n, k)
    covered = coverage(F.ranks, subsets)
    missing = np.argwhere(~covered)
    if missing.size == 0:
        logger.debug("verify_scrambling: %d orders are %d-scrambling on [%d]", F.M, k, F.n)
        return None
    row, position = missing[0]
    subset = [int(v) for v in subsets[row]]
    top = subset.pop(position)
    return ScramblingViolation((top, *subset))


def verify_scrambling_naive(F, k):
    """Independent check over all ordered ``k``-tuples of distinct elements."""
    _check_arity(F.n, k)
    for elements in permutations(range(F.n), k):
        if not any(all(order.index(elements[0]) > order.index(x) for x in elements[1:])
                   for order in (list(row) for row in F.orders)):
            return ScramblingViolation(tuple(elements))
    return None


@dataclass(frozen=True)
class ScramblingResult:
    """Outcome of :func:`scrambling_random`.

    ``family`` holds every order drawn; ``violation`` is the last failure when
    the rounds ran out.
    """

    family: OrderFamily
    violation: ScramblingViolation = None
    rounds: int = 0

    @property
    def success(self):
        return self.violation is None

    @property
    def M(self):
        return self.family.M


def scrambling_random(n, k, seed=None, max_rounds=None):
    """Append seeded uniformly random orders until the family is ``k``-scrambling.

    Parameters
    ----------
    n, k : int
        Ground-set size and arity, ``1 <= k <= n``.

    seed : int, optional
        Seed of ``numpy.random.default_rng``; ``Config.DEFAULT_SEED`` if omitted.

    max_rounds : int, optional
        Orders to draw at most; ``Config.SCRAMBLING_ROUNDS`` if omitted.

    Returns
    -------
    ScramblingResult

    Raises
    ------
    InputError
        If ``k`` is out of range.
    """
    _check_arity(n, k)
    seed = Config.DEFAULT_SEED if seed is None else seed
    max_rounds = Config.SCRAMBLING_ROUNDS if max_rounds is None else max_rounds
    rng = np.random.default_rng(seed)
    family = OrderFamily(n, np.zeros((0, n), dtype=np.int64))
    violation = ScramblingViolation(tuple(range(k)))
    for rounds in range(1, max_rounds + 1):
        family = family.extended(rng.permutation(n))
        violation = verify_scrambling(family, k)
        if violation is None:
            logger.info("scrambling_random(n=%d, k=%d, seed=%d): %d orders", n, k, seed, family.M)
            return ScramblingResult(family, None, rounds)
    logger.warning("scrambling_random(n=%d, k=%d, seed=%d): not scrambling after %d orders",
                   n, k, seed, max_rounds)
    return ScramblingResult(family, violation, max_rounds)


def _order_masks(n, k):
    """Every permutation of ``[n]`` in lex order and the bitmask of (set, element) pairs it covers."""
    orders = np.array(list(permutations(range(n))), dtype=np.int64)
    ranks = np.empty_like(orders)
    ranks[np.arange(len(orders))[:, None], orders] = np.arange(n)[None, :]
    subsets = colex_subsets(n, k)
    top = ranks[:, subsets].argmax(axis=2)
    bits = np.zeros((len(orders), len(subsets) * k), dtype=bool)
    bits[np.arange(len(orders))[:, None], np.arange(len(subsets))[None, :] * k + top] = True
    packed = np.packbits(bits, axis=1, bitorder="little")
    masks = [int.from_bytes(row.tobytes(), "little") for row in packed]
    return orders, masks


def scrambling_exact_min(n, k, M_cap, budget=None):
    """Smallest number of orders making ``[n]`` ``k``-scrambling, by exhaustive search.

    The first order is fixed to the identity. Each further level branches over
    the orders covering the first uncovered (set, element) pair and is cut when
    the uncovered pairs outnumber what the remaining orders can still cover.

    Parameters
    ----------
    n, k : int
        ``1 <= k <= n <= 8``.

    M_cap : int
        Largest family size tried.

    budget : SearchBudget, optional

    Returns
    -------
    SearchResult
        FEASIBLE with the minimal ``M`` and its family, INFEASIBLE with
        ``k = M_cap`` when no family of at most ``M_cap`` orders exists, or
        UNKNOWN when the budget ran out.

    Raises
    ------
    InputError
        If ``n > 8`` or ``k`` is out of range.
    """
    _check_arity(n, k)
    if n > MAX_EXACT_N:
        raise InputError(f"scrambling_exact_min is limited to n <= {MAX_EXACT_N}.")
    budget = budget or SearchBudget()
    meter = NodeMeter(budget)
    orders, masks = _order_masks(n, k)
    per_order = binom(n, k)
    full = (1 << (per_order * k)) - 1
    covering = {}
    chosen = [0]

    def candidates(bit):
        if bit not in covering:
            covering[bit] = [index for index, mask in enumerate(masks) if mask >> bit & 1]
        return covering[bit]

    def extend(covered, remaining):
        meter.tick()
        uncovered = full & ~covered
        if uncovered == 0:
            return True
        if bin(uncovered).count("1") > remaining * per_order:
            return False
        bit = (uncovered & -uncovered).bit_length() - 1
        for index in candidates(bit):
            chosen.append(index)
            if extend(covered | masks[index], remaining - 1):
                return True
            chosen.pop()
        return False

    try:
        for M in range(1, M_cap + 1):
            del chosen[1:]
            if extend(masks[0], M - 1):
                family = OrderFamily(n, orders[chosen])
                logger.info("scrambling_exact_min(n=%d, k=%d) = %d after %d nodes", n, k, M, meter.nodes)
                return SearchResult(SearchStatus.FEASIBLE, M, family, meter.nodes, meter.elapsed)
    except BudgetExhausted:
        logger.warning("scrambling_exact_min(n=%d, k=%d): budget exhausted after %d nodes", n, k, meter.nodes)
        return SearchResult(SearchStatus.UNKNOWN, M, None, meter.nodes, meter.elapsed)
    return SearchResult(SearchStatus.INFEASIBLE, M_cap, None, meter.nodes, meter.elapsed)
