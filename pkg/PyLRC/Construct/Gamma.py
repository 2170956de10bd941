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
from collections import Counter
from enum import Enum

import numpy as np

from PyLRC.Core.Colouring import HypergraphColouring
from PyLRC.Core.Indexing import binom, colex_subsets
from PyLRC.Errors import InputError, PreconditionError
from PyLRC.Parsers.Colourings import read_hgc
from PyLRC.Verify.PQ import member_ranks, verify_pq

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


class GammaProvider(Enum):
    """Where a (p, q)-colouring of r-subsets comes from."""

    INJECTIVE = "injective"
    GREEDY = "greedy"
    FROM_FILE = "file"


def gamma_injective(n, r):
    """Give every ``r``-subset its own colour (``values[i] = i``).

    Raises
    ------
    InputError
        If ``r > n``.
    """
    if r > n:
        raise InputError(f"No {r}-subsets of a {n}-set.")
    count = binom(n, r)
    return HypergraphColouring(n, r, count, np.arange(count, dtype=np.int64))


def gamma_greedy(n, r, p, q):
    """First-fit ``(p, q)``-colouring of the ``r``-subsets of ``[n]``.

    Subsets are coloured in colex order, each with the least colour that keeps
    every ``p``-set containing it able to reach ``q`` colours: a ``p``-set is
    given up only when its distinct colours plus its uncoloured members fall
    below ``q``. A fresh colour never lowers that count, so the scan always
    succeeds.

    Raises
    ------
    InputError
        Unless ``2 <= r < p <= n`` and ``q <= C(p, r)``.
    """
    if not 2 <= r < p <= n:
        raise InputError(f"gamma_greedy needs 2 <= r < p <= n, got r={r}, p={p}, n={n}.")
    if not 1 <= q <= binom(p, r):
        raise InputError(f"q must lie in [1, C({p}, {r})].")
    members = member_ranks(colex_subsets(n, p), r, n)
    containing = [[] for _ in range(binom(n, r))]
    for index, row in enumerate(members):
        for rank in row:
            containing[rank].append(index)
    counts = [Counter() for _ in range(len(members))]
    open_cells = [members.shape[1]] * len(members)
    values = np.zeros(binom(n, r), dtype=np.int64)
    k = 0
    for rank in range(binom(n, r)):
        colour = 0
        while True:
            if all(len(counts[ps]) + (colour not in counts[ps]) + open_cells[ps] - 1 >= q
                   for ps in containing[rank]):
                break
            colour += 1
        values[rank] = colour
        k = max(k, colour + 1)
        for ps in containing[rank]:
            counts[ps][colour] += 1
            open_cells[ps] -= 1
    logger.debug("greedy (%d,%d)-colouring of %d-subsets of [%d] uses %d colours", p, q, r, n, k)
    return HypergraphColouring(n, r, k, values)


def resolve_gamma(source, n, r, p, q):
    """Build or load a gamma colouring and insist on its ``(p, q)`` property.

    Parameters
    ----------
    source : str or HypergraphColouring
        ``"injective"``, ``"greedy"``, a path to an HGC1 file, or a colouring.

    Raises
    ------
    PreconditionError
        If the colouring does not match ``(n, r)`` or fails ``verify_pq``.
    """
    if isinstance(source, HypergraphColouring):
        gamma = source
    elif source == GammaProvider.INJECTIVE.value:
        gamma = gamma_injective(n, r)
    elif source == GammaProvider.GREEDY.value:
        gamma = gamma_greedy(n, r, p, q)
    else:
        gamma = read_hgc(source)
    require_pq(gamma, n, r, p, q)
    return gamma


def require_pq(gamma, n, r, p, q):
    """Raise :class:`PreconditionError` unless ``gamma`` is a ``(p, q)``-colouring of ``r``-subsets of ``[n]``."""
    if gamma.n != n or gamma.r != r:
        raise PreconditionError(f"gamma colours {gamma.r}-subsets of [{gamma.n}], "
                                f"expected {r}-subsets of [{n}].")
    certificate = verify_pq(gamma, p, q)
    if certificate is not None:
        raise PreconditionError(f"gamma is not a ({p},{q})-colouring: {certificate.pset} "
                                f"spans {certificate.colours} colours.", certificate)
