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

from PyLRC.Core.Certificate import PoorPSet
from PyLRC.Core.Colouring import HypergraphColouring, dense_codes
from PyLRC.Core.Indexing import colex_subsets, subset_rank_array
from PyLRC.EGY.Scrambling import verify_scrambling
from PyLRC.Errors import InputError, PreconditionError
from PyLRC.Verify.PQ import verify_pq

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def egy_lift(c, F, check=True):
    """Lift a colouring of ``(r-1)``-sets to one of ``r``-sets.

    The ``r``-set ``e`` is coloured by the tuple
    ``(c(e - max_1 e), ..., c(e - max_M e))`` where ``max_j`` is taken in the
    ``j``-th order of ``F``; tuples are renumbered densely in order of first
    appearance over the ``r``-sets in colex order. When every ``r`` vertices
    see ``r - 1`` colours under ``c`` and ``F`` is ``(r+1)``-scrambling, every
    ``r + 1`` vertices see ``r`` colours under the result.

    Parameters
    ----------
    c : HypergraphColouring
        Colouring of the ``(r-1)``-subsets, ``r >= 4``.

    F : OrderFamily
        Orders on the same ground set.

    check : bool
        Verify both preconditions before lifting.

    Returns
    -------
    HypergraphColouring
        At most ``c.k ** F.M`` colours.

    Raises
    ------
    InputError
        If the ground sets differ, ``r < 4`` or ``r + 1 > n``.

    PreconditionError
        If ``c`` is not an ``(r, r-1)``-colouring or ``F`` is not
        ``(r+1)``-scrambling; the error carries the certificate.
    """
    r = c.r + 1
    n = c.n
    if F.n != n:
        raise InputError(f"Colouring is on [{n}] but the orders are on [{F.n}].")
    if r < 4 or r + 1 > n:
        raise InputError(f"egy_lift needs 4 <= r < n, got r={r}, n={n}.")
    if F.M == 0:
        raise InputError("egy_lift needs at least one order.")
    if check:
        poor = verify_pq(c, r, r - 1)
        if poor is not None:
            raise PreconditionError(f"Base colouring is not ({r},{r - 1}): {poor.pset} spans "
                                    f"{poor.colours} colours.", poor)
        violation = verify_scrambling(F, r + 1)
        if violation is not None:
            raise PreconditionError(f"Orders are not {r + 1}-scrambling: {violation.elements[0]} "
                                    f"is never the maximum of {violation.elements}.", violation)
    subsets = colex_subsets(n, r)
    top = F.ranks[:, subsets].argmax(axis=2)
    keep = np.arange(r)[None, None, :] != top[:, :, None]
    reduced = np.broadcast_to(subsets, keep.shape)[keep].reshape(F.M, len(subsets), r - 1)
    tuples = c.values[subset_rank_array(reduced, n)].T
    codes, count = dense_codes(tuples)
    logger.info("egy_lift: r=%d, n=%d, M=%d orders, %d colours (bound %d)", r, n, F.M, count, c.k ** F.M)
    return HypergraphColouring(n, r, count, codes)


def egy_chain(base, families, check=True):
    """Lift ``base`` once per order family.

    Returns
    -------
    list of HypergraphColouring
        The successive lifts; the last one has uniformity ``base.r + len(families)``.
    """
    lifts = []
    c = base
    for F in families:
        c = egy_lift(c, F, check)
        lifts.append(c)
    return lifts


def lift_collision_check(c, F, lifted):
    """Look for two colour collisions inside an ``(r+1)``-set of ``lifted``.

    For such a set ``W`` with colliding pairs ``{e, e'}`` and ``{f, f'}``, the
    smallest ``p`` in all four sets and an order whose maximum of ``W`` is
    ``p`` turn the collisions into two collisions of ``c`` inside ``W - p``.

    Returns
    -------
    PoorPSet or None
        ``W - p`` as an ``(r, r-1)`` failure of ``c``, for the first such ``W``
        in lex order; None when ``lifted`` never collides twice.
    """
    r = lifted.r
    ranks = F.ranks
    for W in combinations(range(lifted.n), r + 1):
        edges = list(combinations(W, r))
        colours = [lifted.colour(e) for e in edges]
        pairs = [(a, b) for a, b in combinations(range(len(edges)), 2) if colours[a] == colours[b]]
        if len(pairs) < 2:
            continue
        (a, b), (x, y) = pairs[0], pairs[1]
        common = set(edges[a]) & set(edges[b]) & set(edges[x]) & set(edges[y])
        p = min(common)
        if not any(max(W, key=lambda v: ranks[j, v]) == p for j in range(F.M)):
            continue
        rest = tuple(v for v in W if v != p)
        seen = {c.colour(s) for s in combinations(rest, r - 1)}
        logger.debug("lift_collision_check: W=%s collides twice, p=%d", W, p)
        return PoorPSet(rest, len(seen), r, r - 1)
    return None
