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
from itertools import combinations, permutations

import numpy as np

from PyLRC.Core.Certificate import NonRainbowCopy
from PyLRC.Core.Indexing import edge_index_array
from PyLRC.Core.Pattern import copy_batches, copy_count
from PyLRC.Core.Shards import map_shards, progress_bar
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def _check_pattern(C, H):
    if H.edge_count < 2:
        raise InputError(f"Locality needs a pattern with at least 2 edges, got {H.edge_count}.")
    if H.vertex_count > C.n:
        raise InputError(f"Pattern on {H.vertex_count} vertices does not fit in K_{C.n}.")


def rainbow_rows(table, n, pattern_edges, copies):
    """``R[c, t]`` is true when row ``copies[c, t]`` is rainbow on copy ``c``.

    Parameters
    ----------
    table : np.ndarray
        Colour grid of a :class:`LocalColouringCollection`.

    n : int
        Host size.

    pattern_edges : np.ndarray
        ``m x 2`` edge array of the pattern.

    copies : np.ndarray
        One copy per row, as produced by :func:`PyLRC.Core.Pattern.copy_batches`.
    """
    images = edge_index_array(copies[:, pattern_edges[:, 0]], copies[:, pattern_edges[:, 1]], n)
    rainbow = np.empty(copies.shape, dtype=bool)
    for t in range(copies.shape[1]):
        colours = np.sort(table[copies[:, t][:, None], images], axis=1)
        rainbow[:, t] = np.all(colours[:, 1:] != colours[:, :-1], axis=1)
    return rainbow


def _first_failure(shard):
    table, n, pattern_edges, copies = shard
    bad = np.flatnonzero(~rainbow_rows(table, n, pattern_edges, copies).any(axis=1))
    return (len(copies), None) if bad.size == 0 else (len(copies), tuple(int(v) for v in copies[bad[0]]))


def non_rainbow_certificate(C, H, copy):
    """Certificate for a copy that is rainbow in none of its rows.

    Each witness is the first pair of pattern edges, in lex order of edge
    indices, whose images share an ``f_u`` colour.
    """
    witnesses = []
    for u in copy:
        colours = [C.colour(u, copy[i], copy[j]) for i, j in H.edges]
        witnesses.append(next((a, b) for a, b in combinations(range(len(colours)), 2)
                              if colours[a] == colours[b]))
    return NonRainbowCopy(H, tuple(copy), tuple(witnesses))


def verify_local(C, H, jobs=1, progress=False):
    """Check that ``C`` is ``(n, H)``-local.

    Every copy of ``H`` must have a vertex ``u`` whose ``f_u`` gives its edges
    pairwise distinct colours. Copies are scanned in the order of
    :func:`PyLRC.Core.Pattern.copy_batches`, batch by batch.

    Parameters
    ----------
    C : LocalColouringCollection

    H : PatternGraph
        Pattern with at least two edges.

    jobs : int
        Worker processes; the certificate is the same for every value.

    progress : bool
        Show a progress bar over the copies.

    Returns
    -------
    NonRainbowCopy or None
        The first violating copy, or None when the collection is local.

    Raises
    ------
    InputError
        If the pattern has fewer than two edges or does not fit in the host.
    """
    _check_pattern(C, H)
    pattern_edges = np.array(H.edges, dtype=np.int64)
    shards = ((C.table, C.n, pattern_edges, copies) for copies in copy_batches(H, C.n))
    total = copy_count(H, C.n)
    with progress_bar(total, f"verify {H}", progress) as bar:
        for scanned, failure in map_shards(_first_failure, shards, jobs):
            bar.update(scanned)
            if failure is not None:
                logger.info("verify_local: copy %s of %s is not rainbow in any row", failure, H)
                return non_rainbow_certificate(C, H, failure)
    logger.info("verify_local: all %d copies of %s are locally rainbow", total, H)
    return None


def verify_local_naive(C, H):
    """Independent locality check over every injection ``V(H) -> [n]``.

    No automorphism reduction is applied; copies are visited in lexicographic
    order of the injections.

    Returns
    -------
    NonRainbowCopy or None
    """
    _check_pattern(C, H)
    for image in permutations(range(C.n), H.vertex_count):
        ok = False
        for u in image:
            colours = [C.colour(u, image[i], image[j]) for i, j in H.edges]
            if len(set(colours)) == len(colours):
                ok = True
                break
        if not ok:
            return non_rainbow_certificate(C, H, image)
    return None
