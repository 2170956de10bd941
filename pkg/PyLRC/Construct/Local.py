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

from PyLRC.Construct.Delta import delta_matrix
from PyLRC.Construct.Gamma import require_pq
from PyLRC.Core.Colouring import LocalColouringCollection, dense_codes
from PyLRC.Core.Indexing import binomial_table, edge_list, label_length
from PyLRC.Errors import InputError

__author__ = "Doguhan Sariturk"
__version__ = "0.1.0"
__email__ = "dogu.sariturk@gmail.com"
__status__ = "Development"
__maintainer__ = "Doguhan Sariturk"
__license__ = "GPL"

logger = logging.getLogger(__name__)


def _incidence(n):
    """Endpoint arrays of the lex edge list and the ``n x C(n, 2)`` incidence mask."""
    edges = edge_list(n)
    x, y = edges[:, 0], edges[:, 1]
    vertices = np.arange(n)[:, None]
    return x, y, (vertices == x[None, :]) | (vertices == y[None, :])


def _triple_colours(gamma, n):
    """``T[v, e] = gamma(e + v)`` for ``v`` outside ``e``; entries with ``v`` in ``e`` read triple 0."""
    x, y, incident = _incidence(n)
    vertices = np.arange(n)[:, None]
    triples = np.sort(np.stack(np.broadcast_arrays(vertices, x[None, :], y[None, :]), axis=-1), axis=-1)
    table = binomial_table(n, 3)
    ranks = table[triples[..., 0], 1] + table[triples[..., 1], 2] + table[triples[..., 2], 3]
    # v on e repeats a vertex and its rank may run past C(n, 3)
    return gamma.values[np.where(incident, 0, ranks)]


def construct_te(n):
    """Logarithmic collection that is local for a triangle plus a disjoint edge.

    With ``delta`` taken on binary labels, ``f_v`` colours an edge ``xy`` through
    ``v`` by ``2 delta(xy)`` and any other edge by ``2 max(delta(vx), delta(vy)) + 1``.
    Even and odd colours keep the two kinds of edges apart.

    Parameters
    ----------
    n : int
        Host size, at least 2.

    Returns
    -------
    LocalColouringCollection
        ``k = 2 ceil(log2 n)`` colours.

    Raises
    ------
    InputError
        If ``n < 2``.
    """
    if n < 2:
        raise InputError("construct_te needs n >= 2.")
    D = delta_matrix(n)
    x, y, incident = _incidence(n)
    outside = 2 * np.maximum(D[:, x], D[:, y]) + 1
    table = np.where(incident, 2 * D[x, y][None, :], outside)
    k = 2 * label_length(n)
    logger.info("construct_te(n=%d): %d colours", n, k)
    return LocalColouringCollection(n, k, table)


def construct_p3(n, gamma):
    """Collection that is local for the path with three edges.

    ``f_v(e) = gamma(e + v)`` when ``v`` is not on ``e`` and the fresh colour
    ``gamma.k`` otherwise.

    Parameters
    ----------
    n : int
        Host size.

    gamma : HypergraphColouring
        Colouring of the triples of ``[n]`` in which every four vertices see
        at least three colours.

    Returns
    -------
    LocalColouringCollection
        ``k = gamma.k + 1`` colours.

    Raises
    ------
    PreconditionError
        If ``gamma`` is not a (4, 3)-colouring of the triples of ``[n]``; the
        error carries the poor 4-set.
    """
    require_pq(gamma, n, 3, 4, 3)
    _, _, incident = _incidence(n)
    table = np.where(incident, gamma.k, _triple_colours(gamma, n))
    logger.info("construct_p3(n=%d): %d colours", n, gamma.k + 1)
    return LocalColouringCollection(n, gamma.k + 1, table)


def construct_tp(n, gamma):
    """Collection that is local for the triangle with a pendant edge.

    Edges through ``v`` get the triangle-free ``delta`` colouring shifted past
    the colours of ``gamma``; the other edges get ``gamma(e + v)``.

    Returns
    -------
    LocalColouringCollection
        ``k = gamma.k + ceil(log2 n)`` colours.

    Raises
    ------
    PreconditionError
        As :func:`construct_p3`.
    """
    require_pq(gamma, n, 3, 4, 3)
    D = delta_matrix(n)
    x, y, incident = _incidence(n)
    table = np.where(incident, gamma.k + D[x, y][None, :], _triple_colours(gamma, n))
    k = gamma.k + max(1, label_length(n))
    logger.info("construct_tp(n=%d): %d colours", n, k)
    return LocalColouringCollection(n, k, table)


def augment_for_isolated(base, s, anchors):
    """Refine every row by the rows of ``s`` anchor vertices.

    ``f'_v(e)`` is the tuple ``(f_v(e), f_{u_1}(e), ..., f_{u_s}(e))``, renumbered
    densely in order of first appearance (rows in vertex order, edges in lex
    order). If ``base`` is local for ``H`` plus an isolated vertex and
    ``s = |V(H)| + 1``, the result is local for ``H``.

    Parameters
    ----------
    base : LocalColouringCollection

    s : int
        Number of anchors, at least 1.

    anchors : sequence of int
        ``s`` distinct host vertices.

    Raises
    ------
    InputError
        On a wrong number of anchors, repeated anchors or anchors out of range.
    """
    anchors = [int(u) for u in anchors]
    if s < 1 or len(anchors) != s:
        raise InputError(f"Expected {s} anchors, got {len(anchors)}.")
    if len(set(anchors)) != s:
        raise InputError("Anchors must be distinct.")
    if any(not 0 <= u < base.n for u in anchors):
        raise InputError(f"Anchors must lie in [0, {base.n}).")
    n, m = base.table.shape
    tuples = np.empty((n, m, s + 1), dtype=np.int64)
    tuples[..., 0] = base.table
    tuples[..., 1:] = base.table[anchors].T[None, :, :]
    codes, count = dense_codes(tuples.reshape(n * m, s + 1))
    logger.debug("augment_for_isolated: %d anchors, %d -> %d colours", s, base.k, count)
    return LocalColouringCollection(n, max(1, count), codes.reshape(n, m))
